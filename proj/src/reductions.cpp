#include "cgt/reductions.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "cgt/value_text.hpp"

namespace cgt {

namespace {

void check_map_precondition(const TTPosition& p) {
  validate(p);
  if (p.variant != Variant::Standard)
    throw std::invalid_argument("reduction maps are defined on the standard variant");
  if (p.allow_green)
    throw std::invalid_argument("reduction maps cover blue-red boards only");
  for (Tile t : p.tiles)
    if (t != Tile::Blue && t != Tile::Red)
      throw std::invalid_argument(
          "reduction maps require a full rectangular blue-red board");
}

bool has_piece(const TTPosition& p, int r, int c) {
  return std::binary_search(p.pieces.begin(), p.pieces.end(), Coord{r, c});
}

EdgeColor solid_of(Tile t) {
  return t == Tile::Blue ? EdgeColor::BlueSolid : EdgeColor::RedSolid;
}

// Edge color between adjacent tiles a at (r1,c1) and b at (r2,c2) under f.
EdgeColor f_edge(const TTPosition& p, int r1, int c1, int r2, int c2) {
  Tile a = p.tile(r1, c1), b = p.tile(r2, c2);
  bool pa = has_piece(p, r1, c1), pb = has_piece(p, r2, c2);
  if (a == b) return solid_of(a);
  if (pa && !pb) return solid_of(b);
  if (pb && !pa) return solid_of(a);
  // Different colors with no piece, or with both tiles occupied. In the
  // occupied-occupied case no piece can ever cross this edge, so the choice
  // is unobservable in the game tree.
  return EdgeColor::Dotted;
}

DoorSide door_of(Tile t) {
  return t == Tile::Blue ? DoorSide::Blue : DoorSide::Red;
}

}  // namespace

LatticePosition tt_to_lattice(const TTPosition& p) {
  check_map_precondition(p);
  LatticePosition q;
  q.width = p.width;
  q.height = p.height;
  q.variant = Variant::Standard;
  q.alive.assign(p.width * p.height, 1);
  q.pieces = p.pieces;
  for (int r = 0; r < p.height; ++r)
    for (int c = 0; c + 1 < p.width; ++c)
      q.hedges.push_back(f_edge(p, r, c, r, c + 1));
  for (int r = 0; r + 1 < p.height; ++r)
    for (int c = 0; c < p.width; ++c)
      q.vedges.push_back(f_edge(p, r, c, r + 1, c));
  return q;
}

DoorPosition tt_to_door(const TTPosition& p) {
  check_map_precondition(p);
  DoorPosition q;
  q.width = p.width;
  q.height = p.height;
  q.variant = Variant::Standard;
  q.alive.assign(p.width * p.height, 1);
  q.pieces = p.pieces;
  // The side facing a room shows the color of the tile beyond the door.
  for (int r = 0; r < p.height; ++r)
    for (int c = 0; c + 1 < p.width; ++c)
      q.hdoors.emplace_back(door_of(p.tile(r, c + 1)), door_of(p.tile(r, c)));
  for (int r = 0; r + 1 < p.height; ++r)
    for (int c = 0; c < p.width; ++c)
      q.vdoors.emplace_back(door_of(p.tile(r + 1, c)), door_of(p.tile(r, c)));
  return q;
}

bool tree_isomorphic(Game g, Game h) { return g == h; }

namespace {

// Descends to a minimal pair of differing subtrees. Options are interned in
// sorted order, so greedy pairing of the sorted difference is deterministic.
std::pair<Game, Game> find_mismatch(Game g, Game h) {
  auto descend = [](const std::vector<Game>& a,
                    const std::vector<Game>& b) -> std::optional<std::pair<Game, Game>> {
    std::vector<Game> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(only_b));
    if (only_a.empty() && only_b.empty()) return std::nullopt;
    if (only_a.empty() || only_b.empty())
      return std::nullopt;  // option counts differ; report the parents
    return std::make_pair(only_a.front(), only_b.front());
  };
  std::vector<Game> gl = g.left_options(), hl = h.left_options();
  std::vector<Game> gr = g.right_options(), hr = h.right_options();
  if (gl.size() == hl.size()) {
    if (auto m = descend(gl, hl)) return find_mismatch(m->first, m->second);
  }
  if (gr.size() == hr.size()) {
    if (auto m = descend(gr, hr)) return find_mismatch(m->first, m->second);
  }
  return {g, h};
}

}  // namespace

ReductionCertificate certify_reduction(const TTPosition& p,
                                       ReductionTarget target) {
  ReductionCertificate cert;
  cert.source = p;
  cert.target = target;
  if (target == ReductionTarget::GoL)
    cert.mapped = tt_to_lattice(p);
  else
    cert.mapped = tt_to_door(p);
  Game g = to_game(p);
  Game h = to_game(cert.mapped);
  cert.isomorphic = tree_isomorphic(g, h);
  if (!cert.isomorphic) cert.counterexample = find_mismatch(g, h);
  return cert;
}

std::string render_certificate(const ReductionCertificate& cert) {
  std::ostringstream out;
  out << "source:\n" << render_position(cert.source);
  out << "target: " << (cert.target == ReductionTarget::GoL ? "gol" : "btd")
      << "\n";
  out << "isomorphic: " << (cert.isomorphic ? "true" : "false") << "\n";
  if (cert.counterexample) {
    out << "counterexample: " << render_tree(cert.counterexample->first)
        << " vs " << render_tree(cert.counterexample->second) << "\n";
  }
  return out.str();
}

}  // namespace cgt
