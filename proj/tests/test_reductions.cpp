#include <doctest.h>

#include <string>
#include <vector>

#include "cgt/reductions.hpp"

using namespace cgt;

namespace {

TTPosition tt_board(int w, int h, std::vector<Tile> tiles,
                    std::vector<Coord> pieces) {
  TTPosition p;
  p.width = w;
  p.height = h;
  p.tiles = std::move(tiles);
  p.pieces = std::move(pieces);
  validate(p);
  return p;
}

// every one-piece-or-fewer placement on every blue/red coloring of a w x h
// board
std::vector<TTPosition> all_boards(int w, int h, int max_pieces) {
  std::vector<TTPosition> out;
  int cells = w * h;
  for (int colors = 0; colors < (1 << cells); ++colors) {
    std::vector<Tile> tiles(cells);
    for (int i = 0; i < cells; ++i)
      tiles[i] = (colors >> i) & 1 ? Tile::Red : Tile::Blue;
    for (int mask = 0; mask < (1 << cells); ++mask) {
      if (__builtin_popcount(mask) > max_pieces) continue;
      std::vector<Coord> pieces;
      for (int i = 0; i < cells; ++i)
        if ((mask >> i) & 1) pieces.push_back({i / w, i % w});
      out.push_back(tt_board(w, h, tiles, std::move(pieces)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("edge mapping to the lattice") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::BlueSolid);

  p = tt_board(2, 1, {Tile::Red, Tile::Red}, {});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::RedSolid);

  p = tt_board(2, 1, {Tile::Blue, Tile::Red}, {});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::Dotted);

  // one endpoint occupied: solid in the color of the unoccupied tile
  p = tt_board(2, 1, {Tile::Blue, Tile::Red}, {{0, 0}});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::RedSolid);
  p = tt_board(2, 1, {Tile::Blue, Tile::Red}, {{0, 1}});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::BlueSolid);

  // both occupied: dotted (never traversed, so the color is free)
  p = tt_board(2, 1, {Tile::Blue, Tile::Red}, {{0, 0}, {0, 1}});
  CHECK(tt_to_lattice(p).hedge(0, 0) == EdgeColor::Dotted);
}

TEST_CASE("lattice image keeps pieces and dimensions") {
  auto p = tt_board(2, 2, {Tile::Blue, Tile::Red, Tile::Red, Tile::Blue},
                    {{0, 0}, {1, 1}});
  auto q = tt_to_lattice(p);
  CHECK(q.width == 2);
  CHECK(q.height == 2);
  CHECK(q.pieces == p.pieces);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(q.is_alive(r, c));
}

TEST_CASE("door mapping paints each side after the far room") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Red}, {{0, 0}});
  auto q = tt_to_door(p);
  // side facing room (0,0) shows the color of tile (0,1) and vice versa
  CHECK(q.hdoor(0, 0).first == DoorSide::Red);
  CHECK(q.hdoor(0, 0).second == DoorSide::Blue);

  auto v = tt_board(1, 2, {Tile::Blue, Tile::Red}, {{0, 0}});
  auto qv = tt_to_door(v);
  CHECK(qv.vdoor(0, 0).first == DoorSide::Red);
  CHECK(qv.vdoor(0, 0).second == DoorSide::Blue);
}

TEST_CASE("reduction preconditions") {
  TTPosition green;
  green.width = 2;
  green.height = 1;
  green.allow_green = true;
  green.tiles = {Tile::Green, Tile::Blue};
  green.pieces = {{0, 0}};
  validate(green);
  CHECK_THROWS_AS(tt_to_lattice(green), std::invalid_argument);
  CHECK_THROWS_AS(tt_to_door(green), std::invalid_argument);

  auto delta = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {{0, 0}});
  delta.variant = Variant::Delta;
  CHECK_THROWS_AS(tt_to_lattice(delta), std::invalid_argument);
}

TEST_CASE("tree isomorphism is structural") {
  CHECK(tree_isomorphic(star(), star()));
  CHECK(tree_isomorphic(Game::make({zero_game()}, {star()}), up()));
  CHECK(!tree_isomorphic(star(), zero_game()));
  // equal values, different trees
  Game z = Game::make({star()}, {star()});
  CHECK(z.eq(zero_game()));
  CHECK(!tree_isomorphic(z, zero_game()));
}

TEST_CASE("certification on small boards") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {{0, 0}});
  for (ReductionTarget t : {ReductionTarget::GoL, ReductionTarget::BtD}) {
    auto cert = certify_reduction(p, t);
    CHECK(cert.isomorphic);
    CHECK(!cert.counterexample.has_value());
    std::string text = render_certificate(cert);
    CHECK(text.find("isomorphic: true") != std::string::npos);
  }
}

TEST_CASE("exhaustive certification, one-piece strips and squares") {
  int checked = 0;
  for (int w : {1, 2, 3}) {
    for (const auto& p : all_boards(w, 1, 1)) {
      CHECK(certify_reduction(p, ReductionTarget::GoL).isomorphic);
      CHECK(certify_reduction(p, ReductionTarget::BtD).isomorphic);
      ++checked;
    }
  }
  for (const auto& p : all_boards(2, 2, 1)) {
    CHECK(certify_reduction(p, ReductionTarget::GoL).isomorphic);
    CHECK(certify_reduction(p, ReductionTarget::BtD).isomorphic);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("a lattice position outside the image of the map") {
  // path of three nodes with a blue and a red edge and pieces on both ends:
  // any preimage would need tile (0,1) simultaneously blue and red.
  LatticePosition p;
  p.width = 3;
  p.height = 1;
  p.hedges = {EdgeColor::BlueSolid, EdgeColor::RedSolid};
  p.alive = {1, 1, 1};
  p.pieces = {{0, 0}, {0, 2}};
  validate(p);
  bool hit = false;
  for (const auto& src : all_boards(3, 1, 2)) {
    auto img = tt_to_lattice(src);
    if (render_position(img) == render_position(p)) hit = true;
  }
  CHECK(!hit);
}
