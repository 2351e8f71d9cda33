#include "cgt/universality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cgt/value_text.hpp"

namespace cgt {

DoorPosition down_path(int n) {
  if (n < 0) throw std::invalid_argument("down_path requires n >= 0");
  DoorPosition p;
  p.width = (n + 1) / 2 + 1;
  p.height = n / 2 + 1;
  p.variant = Variant::Delta;
  p.hdoors.assign(p.height * (p.width - 1), {DoorSide::Black, DoorSide::Black});
  p.vdoors.assign((p.height - 1) * p.width, {DoorSide::Black, DoorSide::Black});
  p.alive.assign(p.width * p.height, 0);
  // Room i sits at (i/2, (i+1)/2); odd steps go east, even steps go south,
  // so every Left slide has distance exactly one.
  auto room = [](int i) { return Coord{i / 2, (i + 1) / 2}; };
  for (int i = 0; i <= n; ++i) {
    Coord r = room(i);
    p.alive[r.row * p.width + r.col] = 1;
  }
  for (int i = 1; i <= n; ++i) {
    Coord a = room(i - 1);
    if (i % 2 == 1) {
      // horizontal step: Blue faces the earlier (west) room
      p.hdoor(a.row, a.col) = {DoorSide::Blue, DoorSide::Black};
    } else {
      // vertical step: Blue faces the earlier (north) room
      p.vdoor(a.row, a.col) = {DoorSide::Blue, DoorSide::Black};
    }
  }
  p.pieces = {Coord{0, 0}};
  return p;
}

DoorPosition up_path(int n) { return color_swap(down_path(n)); }

bool verify_value(const DoorPosition& pos, Game g) {
  return (to_game(pos) - g).outcome() == Outcome::P;
}

namespace {

DoorPosition transpose(const DoorPosition& p) {
  DoorPosition q;
  q.width = p.height;
  q.height = p.width;
  q.variant = p.variant;
  q.hdoors.resize(q.height * (q.width - 1));
  q.vdoors.resize((q.height - 1) * q.width);
  q.alive.assign(q.width * q.height, 0);
  for (int r = 0; r < q.height; ++r) {
    for (int c = 0; c < q.width - 1; ++c) q.hdoor(r, c) = p.vdoor(c, r);
    for (int c = 0; c < q.width; ++c)
      q.alive[r * q.width + c] = p.alive[c * p.width + r];
  }
  for (int r = 0; r < q.height - 1; ++r)
    for (int c = 0; c < q.width; ++c) q.vdoor(r, c) = p.hdoor(c, r);
  for (const Coord& pc : p.pieces) q.pieces.push_back({pc.col, pc.row});
  std::sort(q.pieces.begin(), q.pieces.end());
  return q;
}

DoorPosition flip_h(const DoorPosition& p) {
  DoorPosition q = p;
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width - 1; ++c) {
      auto d = p.hdoor(r, p.width - 2 - c);
      q.hdoor(r, c) = {d.second, d.first};
    }
    for (int c = 0; c < p.width; ++c)
      q.alive[r * p.width + c] = p.alive[r * p.width + (p.width - 1 - c)];
  }
  for (int r = 0; r < p.height - 1; ++r)
    for (int c = 0; c < p.width; ++c)
      q.vdoor(r, c) = p.vdoor(r, p.width - 1 - c);
  q.pieces.clear();
  for (const Coord& pc : p.pieces)
    q.pieces.push_back({pc.row, p.width - 1 - pc.col});
  std::sort(q.pieces.begin(), q.pieces.end());
  return q;
}

DoorPosition flip_v(const DoorPosition& p) {
  DoorPosition q = p;
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width - 1; ++c)
      q.hdoor(r, c) = p.hdoor(p.height - 1 - r, c);
    for (int c = 0; c < p.width; ++c)
      q.alive[r * p.width + c] = p.alive[(p.height - 1 - r) * p.width + c];
  }
  for (int r = 0; r < p.height - 1; ++r)
    for (int c = 0; c < p.width; ++c) {
      auto d = p.vdoor(p.height - 2 - r, c);
      q.vdoor(r, c) = {d.second, d.first};
    }
  q.pieces.clear();
  for (const Coord& pc : p.pieces)
    q.pieces.push_back({p.height - 1 - pc.row, pc.col});
  std::sort(q.pieces.begin(), q.pieces.end());
  return q;
}

// True iff the serialization of p is minimal over its orbit under the
// dihedral board symmetries and color swap.
bool orbit_minimal(const DoorPosition& p) {
  std::string self = render_position(p);
  DoorPosition base = p;
  for (int t = 0; t < 2; ++t) {
    for (int fh = 0; fh < 2; ++fh) {
      for (int fv = 0; fv < 2; ++fv) {
        DoorPosition q = base;
        if (fh) q = flip_h(q);
        if (fv) q = flip_v(q);
        if (render_position(q) < self) return false;
        if (render_position(color_swap(q)) < self) return false;
      }
    }
    base = transpose(base);
  }
  return true;
}

std::vector<std::uint32_t> piece_masks(std::uint32_t alive_mask, int max_pieces) {
  std::vector<std::uint32_t> res;
  std::uint32_t pm = 0;
  while (true) {
    if (std::popcount(pm) <= max_pieces) res.push_back(pm);
    if (pm == alive_mask) break;
    pm = (pm - alive_mask) & alive_mask;
  }
  std::sort(res.begin(), res.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return res;
}

constexpr DoorSide kSides[3] = {DoorSide::Blue, DoorSide::Red, DoorSide::Black};

}  // namespace

RealizationResult realize_search(Game target, int max_width, int max_height,
                                 int max_pieces) {
  if (max_width < 1 || max_height < 1 || max_pieces < 0)
    throw std::invalid_argument("realize_search bounds must be positive");
  Game tgt = target.canonical();
  if (!tgt.dicotic())
    throw std::invalid_argument("realize_search requires a dicotic target");
  Game ntgt = (-tgt).canonical();

  RealizationResult res;
  res.target = tgt;
  res.search_bound = max_width * max_height;

  auto accept = [&](const DoorPosition& pos, int rooms) -> bool {
    if (verify_value(pos, tgt)) {
      res.found = true;
      res.position = pos;
      res.rooms_used = rooms;
      return true;
    }
    if (tgt != ntgt && verify_value(pos, ntgt)) {
      res.found = true;
      res.position = color_swap(pos);
      res.rooms_used = rooms;
      return true;
    }
    return false;
  };

  for (int rooms = 0; rooms <= res.search_bound; ++rooms) {
    for (int h = 1; h <= max_height; ++h) {
      for (int w = 1; w <= max_width; ++w) {
        int cells = w * h;
        if (cells < rooms || cells > 30) continue;
        for (std::uint32_t alive_mask = 0; alive_mask < (1u << cells);
             ++alive_mask) {
          if (std::popcount(alive_mask) != rooms) continue;
          DoorPosition base;
          base.width = w;
          base.height = h;
          base.variant = Variant::Delta;
          base.hdoors.assign(h * (w - 1), {DoorSide::Black, DoorSide::Black});
          base.vdoors.assign((h - 1) * w, {DoorSide::Black, DoorSide::Black});
          base.alive.assign(cells, 0);
          for (int i = 0; i < cells; ++i)
            base.alive[i] = (alive_mask >> i) & 1;
          // Doors with a dead endpoint can never be crossed; pin them black
          // so each reachable board is enumerated once.
          std::vector<std::pair<DoorSide, DoorSide>*> doors;
          for (int r = 0; r < h; ++r)
            for (int c = 0; c + 1 < w; ++c)
              if (base.is_alive(r, c) && base.is_alive(r, c + 1))
                doors.push_back(&base.hdoor(r, c));
          for (int r = 0; r + 1 < h; ++r)
            for (int c = 0; c < w; ++c)
              if (base.is_alive(r, c) && base.is_alive(r + 1, c))
                doors.push_back(&base.vdoor(r, c));
          std::vector<int> digits(doors.size() * 2, 0);
          auto pms = piece_masks(alive_mask, max_pieces);
          while (true) {
            for (std::size_t i = 0; i < doors.size(); ++i)
              *doors[i] = {kSides[digits[2 * i]], kSides[digits[2 * i + 1]]};
            for (std::uint32_t pm : pms) {
              DoorPosition pos = base;
              pos.pieces.clear();
              for (int i = 0; i < cells; ++i)
                if ((pm >> i) & 1) pos.pieces.push_back({i / w, i % w});
              if (!orbit_minimal(pos)) continue;
              if (accept(pos, rooms)) return res;
            }
            // odometer over door sides
            std::size_t d = 0;
            while (d < digits.size() && ++digits[d] == 3) digits[d++] = 0;
            if (d == digits.size()) break;
          }
        }
      }
    }
  }
  return res;
}

std::string render_realization(const RealizationResult& r) {
  std::ostringstream out;
  out << "target: " << render_value(r.target) << "\n";
  out << "found: " << (r.found ? "true" : "false") << "\n";
  out << "rooms-used: " << r.rooms_used << "\n";
  out << "search-bound: " << r.search_bound << "\n";
  if (r.position) out << render_position(*r.position);
  return out.str();
}

}  // namespace cgt
