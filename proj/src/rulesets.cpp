#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "cgt/position.hpp"

namespace cgt {

namespace {

constexpr std::array<std::pair<int, int>, 4> kStep = {
    {{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};  // Up, Down, LeftDir, RightDir

bool on_board(int w, int h, int r, int c) {
  return r >= 0 && r < h && c >= 0 && c < w;
}

template <typename P>
bool occupied(const P& p, int r, int c) {
  return std::binary_search(p.pieces.begin(), p.pieces.end(), Coord{r, c});
}

template <typename P>
void check_pieces(const P& p) {
  for (std::size_t i = 1; i < p.pieces.size(); ++i)
    if (!(p.pieces[i - 1] < p.pieces[i]))
      throw std::invalid_argument("pieces must be sorted and distinct");
  for (const Coord& pc : p.pieces)
    if (!on_board(p.width, p.height, pc.row, pc.col))
      throw std::invalid_argument("piece off board");
}

}  // namespace

void validate(const TTPosition& p) {
  if (p.width < 1 || p.height < 1)
    throw std::invalid_argument("board dimensions must be positive");
  if (static_cast<int>(p.tiles.size()) != p.width * p.height)
    throw std::invalid_argument("tile grid size mismatch");
  check_pieces(p);
  for (const Coord& pc : p.pieces)
    if (p.tile(pc.row, pc.col) == Tile::None)
      throw std::invalid_argument("piece on a missing tile");
  if (!p.allow_green)
    for (Tile t : p.tiles)
      if (t == Tile::Green)
        throw std::invalid_argument("green tile in a blue-red board");
}

void validate(const LatticePosition& p) {
  if (p.width < 1 || p.height < 1)
    throw std::invalid_argument("board dimensions must be positive");
  if (static_cast<int>(p.hedges.size()) != p.height * (p.width - 1) ||
      static_cast<int>(p.vedges.size()) != (p.height - 1) * p.width ||
      static_cast<int>(p.alive.size()) != p.width * p.height)
    throw std::invalid_argument("lattice size mismatch");
  check_pieces(p);
  for (const Coord& pc : p.pieces)
    if (!p.is_alive(pc.row, pc.col))
      throw std::invalid_argument("piece on a dead node");
}

void validate(const DoorPosition& p) {
  if (p.width < 1 || p.height < 1)
    throw std::invalid_argument("board dimensions must be positive");
  if (static_cast<int>(p.hdoors.size()) != p.height * (p.width - 1) ||
      static_cast<int>(p.vdoors.size()) != (p.height - 1) * p.width ||
      static_cast<int>(p.alive.size()) != p.width * p.height)
    throw std::invalid_argument("door grid size mismatch");
  check_pieces(p);
  for (const Coord& pc : p.pieces)
    if (!p.is_alive(pc.row, pc.col))
      throw std::invalid_argument("piece in a blocked room");
}

namespace {

bool tt_traversable(const TTPosition& p, Tile t, Player pl) {
  if (t == Tile::Green) return p.allow_green;
  return t == (pl == Player::Left ? Tile::Blue : Tile::Red);
}

}  // namespace

std::vector<std::pair<Move, TTPosition>> legal_moves(const TTPosition& p,
                                                     Player pl) {
  std::vector<std::pair<Move, TTPosition>> res;
  for (std::size_t pi = 0; pi < p.pieces.size(); ++pi) {
    Coord from = p.pieces[pi];
    bool has_slide = false;
    for (int d = 0; d < 4; ++d) {
      int r = from.row, c = from.col;
      for (int dist = 1;; ++dist) {
        r += kStep[d].first;
        c += kStep[d].second;
        if (!on_board(p.width, p.height, r, c)) break;
        if (!tt_traversable(p, p.tile(r, c), pl)) break;
        if (occupied(p, r, c)) break;
        has_slide = true;
        TTPosition s = p;
        // Departed tiles A0..A(n-1) turn over; the destination does not.
        int fr = from.row, fc = from.col;
        for (int k = 0; k < dist; ++k) {
          s.tile(fr, fc) = Tile::Black;
          fr += kStep[d].first;
          fc += kStep[d].second;
        }
        s.pieces[pi] = Coord{r, c};
        std::sort(s.pieces.begin(), s.pieces.end());
        res.emplace_back(
            Move{Move::Kind::Slide, from, static_cast<Dir>(d), dist},
            std::move(s));
      }
    }
    if (p.variant == Variant::Delta && !has_slide) {
      TTPosition s = p;
      s.pieces.erase(s.pieces.begin() + pi);
      res.emplace_back(Move{Move::Kind::Remove, from}, std::move(s));
    }
  }
  return res;
}

namespace {

EdgeColor lattice_edge(const LatticePosition& p, int r1, int c1, int r2,
                       int c2) {
  if (r1 == r2) return p.hedge(r1, std::min(c1, c2));
  return p.vedge(std::min(r1, r2), c1);
}

void set_lattice_edge(LatticePosition& p, int r1, int c1, int r2, int c2,
                      EdgeColor e) {
  if (r1 == r2)
    p.hedge(r1, std::min(c1, c2)) = e;
  else
    p.vedge(std::min(r1, r2), c1) = e;
}

}  // namespace

std::vector<std::pair<Move, LatticePosition>> legal_moves(
    const LatticePosition& p, Player pl) {
  EdgeColor mine =
      pl == Player::Left ? EdgeColor::BlueSolid : EdgeColor::RedSolid;
  EdgeColor theirs =
      pl == Player::Left ? EdgeColor::RedSolid : EdgeColor::BlueSolid;
  std::vector<std::pair<Move, LatticePosition>> res;
  for (std::size_t pi = 0; pi < p.pieces.size(); ++pi) {
    Coord from = p.pieces[pi];
    bool has_slide = false;
    for (int d = 0; d < 4; ++d) {
      int r = from.row, c = from.col;
      for (int dist = 1;; ++dist) {
        int nr = r + kStep[d].first, nc = c + kStep[d].second;
        if (!on_board(p.width, p.height, nr, nc)) break;
        if (lattice_edge(p, r, c, nr, nc) != mine) break;
        if (!p.is_alive(nr, nc) || occupied(p, nr, nc)) break;
        has_slide = true;
        LatticePosition s = p;
        int fr = from.row, fc = from.col;
        for (int k = 0; k < dist; ++k) {
          s.alive[fr * s.width + fc] = 0;
          fr += kStep[d].first;
          fc += kStep[d].second;
        }
        s.pieces[pi] = Coord{nr, nc};
        std::sort(s.pieces.begin(), s.pieces.end());
        // Dotted edges incident to the destination turn solid in the
        // opponent's color.
        for (int dd = 0; dd < 4; ++dd) {
          int ar = nr + kStep[dd].first, ac = nc + kStep[dd].second;
          if (!on_board(s.width, s.height, ar, ac)) continue;
          if (lattice_edge(s, nr, nc, ar, ac) == EdgeColor::Dotted)
            set_lattice_edge(s, nr, nc, ar, ac, theirs);
        }
        res.emplace_back(
            Move{Move::Kind::Slide, from, static_cast<Dir>(d), dist},
            std::move(s));
        r = nr;
        c = nc;
      }
    }
    if (p.variant == Variant::Delta && !has_slide) {
      LatticePosition s = p;
      s.pieces.erase(s.pieces.begin() + pi);
      res.emplace_back(Move{Move::Kind::Remove, from}, std::move(s));
    }
  }
  return res;
}

namespace {

// Side of the door between adjacent rooms as seen from (r1,c1).
DoorSide facing_side(const DoorPosition& p, int r1, int c1, int r2, int c2) {
  if (r1 == r2) {
    if (c2 > c1) return p.hdoor(r1, c1).first;
    return p.hdoor(r1, c2).second;
  }
  if (r2 > r1) return p.vdoor(r1, c1).first;
  return p.vdoor(r2, c1).second;
}

}  // namespace

std::vector<std::pair<Move, DoorPosition>> legal_moves(const DoorPosition& p,
                                                       Player pl) {
  DoorSide mine = pl == Player::Left ? DoorSide::Blue : DoorSide::Red;
  std::vector<std::pair<Move, DoorPosition>> res;
  for (std::size_t pi = 0; pi < p.pieces.size(); ++pi) {
    Coord from = p.pieces[pi];
    bool has_slide = false;
    for (int d = 0; d < 4; ++d) {
      int r = from.row, c = from.col;
      for (int dist = 1;; ++dist) {
        int nr = r + kStep[d].first, nc = c + kStep[d].second;
        if (!on_board(p.width, p.height, nr, nc)) break;
        if (facing_side(p, r, c, nr, nc) != mine) break;
        if (!p.is_alive(nr, nc) || occupied(p, nr, nc)) break;
        has_slide = true;
        DoorPosition s = p;
        int fr = from.row, fc = from.col;
        for (int k = 0; k < dist; ++k) {
          s.alive[fr * s.width + fc] = 0;
          fr += kStep[d].first;
          fc += kStep[d].second;
        }
        s.pieces[pi] = Coord{nr, nc};
        std::sort(s.pieces.begin(), s.pieces.end());
        res.emplace_back(
            Move{Move::Kind::Slide, from, static_cast<Dir>(d), dist},
            std::move(s));
        r = nr;
        c = nc;
      }
    }
    if (p.variant == Variant::Delta && !has_slide) {
      DoorPosition s = p;
      s.pieces.erase(s.pieces.begin() + pi);
      res.emplace_back(Move{Move::Kind::Remove, from}, std::move(s));
    }
  }
  return res;
}

namespace {

// Memo keyed on the canonical serialization; shared across rulesets since
// the rendered form starts with the ruleset tag.
std::unordered_map<std::string, Game>& game_memo() {
  static std::unordered_map<std::string, Game> memo;
  return memo;
}

template <typename P>
Game compile_position(const P& p) {
  std::string key = render_position(p);
  auto& memo = game_memo();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Game> left, right;
  for (const auto& [m, s] : legal_moves(p, Player::Left))
    left.push_back(compile_position(s));
  for (const auto& [m, s] : legal_moves(p, Player::Right))
    right.push_back(compile_position(s));
  Game g = Game::make(left, right);
  memo.emplace(std::move(key), g);
  return g;
}

}  // namespace

Game to_game(const TTPosition& p) { return compile_position(p); }
Game to_game(const LatticePosition& p) { return compile_position(p); }
Game to_game(const DoorPosition& p) { return compile_position(p); }

Game to_game(const Position& p) {
  return std::visit([](const auto& q) { return to_game(q); }, p);
}

TTPosition color_swap(const TTPosition& p) {
  TTPosition s = p;
  for (Tile& t : s.tiles) {
    if (t == Tile::Blue)
      t = Tile::Red;
    else if (t == Tile::Red)
      t = Tile::Blue;
  }
  return s;
}

LatticePosition color_swap(const LatticePosition& p) {
  LatticePosition s = p;
  auto flip = [](EdgeColor& e) {
    if (e == EdgeColor::BlueSolid)
      e = EdgeColor::RedSolid;
    else if (e == EdgeColor::RedSolid)
      e = EdgeColor::BlueSolid;
  };
  for (EdgeColor& e : s.hedges) flip(e);
  for (EdgeColor& e : s.vedges) flip(e);
  return s;
}

DoorPosition color_swap(const DoorPosition& p) {
  DoorPosition s = p;
  auto flip = [](DoorSide& d) {
    if (d == DoorSide::Blue)
      d = DoorSide::Red;
    else if (d == DoorSide::Red)
      d = DoorSide::Blue;
  };
  for (auto& [a, b] : s.hdoors) {
    flip(a);
    flip(b);
  }
  for (auto& [a, b] : s.vdoors) {
    flip(a);
    flip(b);
  }
  return s;
}

}  // namespace cgt
