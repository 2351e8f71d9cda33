#include <doctest.h>

#include "cgt/position.hpp"
#include "cgt/value_text.hpp"

using namespace cgt;

namespace {

TTPosition tt_board(int w, int h, std::vector<Tile> tiles,
                    std::vector<Coord> pieces,
                    Variant v = Variant::Standard) {
  TTPosition p;
  p.width = w;
  p.height = h;
  p.tiles = std::move(tiles);
  p.pieces = std::move(pieces);
  p.variant = v;
  validate(p);
  return p;
}

}  // namespace

TEST_CASE("turning tiles: 1x2 all blue") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {{0, 0}});
  auto lmoves = legal_moves(p, Player::Left);
  REQUIRE(lmoves.size() == 1);
  CHECK(lmoves[0].first.kind == Move::Kind::Slide);
  CHECK(lmoves[0].first.dir == Dir::RightDir);
  CHECK(lmoves[0].first.distance == 1);
  const TTPosition& s = lmoves[0].second;
  CHECK(s.tile(0, 0) == Tile::Black);
  CHECK(s.tile(0, 1) == Tile::Blue);
  CHECK(s.pieces == std::vector<Coord>{{0, 1}});
  CHECK(legal_moves(p, Player::Right).empty());
  CHECK(to_game(p).eq(integer_game(1)));
}

TEST_CASE("turning tiles: delta variant remove") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {{0, 0}}, Variant::Delta);
  auto rmoves = legal_moves(p, Player::Right);
  REQUIRE(rmoves.size() == 1);
  CHECK(rmoves[0].first.kind == Move::Kind::Remove);
  CHECK(rmoves[0].second.pieces.empty());
  // value matches delta({0|}) = down
  CHECK(to_game(p).eq(down()));
  CHECK(to_game(p).eq(integer_game(1).delta()));
}

TEST_CASE("turning tiles: terminal positions") {
  auto p = tt_board(1, 1, {Tile::Blue}, {{0, 0}});
  CHECK(legal_moves(p, Player::Left).empty());
  CHECK(legal_moves(p, Player::Right).empty());
  CHECK(to_game(p) == zero_game());
  auto empty = tt_board(2, 2,
                        {Tile::Blue, Tile::Red, Tile::Red, Tile::Blue}, {});
  CHECK(to_game(empty) == zero_game());
}

TEST_CASE("turning tiles: multi-step slides flip the path") {
  auto p = tt_board(3, 1, {Tile::Blue, Tile::Blue, Tile::Blue}, {{0, 0}});
  auto moves = legal_moves(p, Player::Left);
  REQUIRE(moves.size() == 2);  // distance 1 and 2
  CHECK(moves[1].first.distance == 2);
  const TTPosition& s = moves[1].second;
  CHECK(s.tile(0, 0) == Tile::Black);
  CHECK(s.tile(0, 1) == Tile::Black);
  CHECK(s.tile(0, 2) == Tile::Blue);
}

TEST_CASE("turning tiles: pieces block slides") {
  auto p = tt_board(3, 1, {Tile::Blue, Tile::Blue, Tile::Blue},
                    {{0, 0}, {0, 1}});
  auto moves = legal_moves(p, Player::Left);
  // piece at (0,0) is blocked; piece at (0,1) can slide right only
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].first.piece == Coord{0, 1});
  CHECK(moves[0].first.dir == Dir::RightDir);
}

TEST_CASE("turning tiles: green is usable by both players") {
  TTPosition p;
  p.width = 2;
  p.height = 1;
  p.allow_green = true;
  p.tiles = {Tile::Green, Tile::Green};
  p.pieces = {{0, 0}};
  validate(p);
  CHECK(legal_moves(p, Player::Left).size() == 1);
  CHECK(legal_moves(p, Player::Right).size() == 1);
  CHECK(to_game(p).eq(star()));
}

TEST_CASE("go on lattice: dotted edges recolor at the destination") {
  LatticePosition p;
  p.width = 3;
  p.height = 1;
  p.hedges = {EdgeColor::BlueSolid, EdgeColor::Dotted};
  p.alive = {1, 1, 1};
  p.pieces = {{0, 0}};
  validate(p);
  auto moves = legal_moves(p, Player::Left);
  REQUIRE(moves.size() == 1);
  const LatticePosition& s = moves[0].second;
  CHECK(!s.is_alive(0, 0));
  CHECK(s.pieces == std::vector<Coord>{{0, 1}});
  CHECK(s.hedge(0, 1) == EdgeColor::RedSolid);
  CHECK(legal_moves(p, Player::Right).empty());
}

TEST_CASE("go on lattice: dotted edges are untraversable") {
  LatticePosition p;
  p.width = 2;
  p.height = 1;
  p.hedges = {EdgeColor::Dotted};
  p.alive = {1, 1};
  p.pieces = {{0, 0}};
  validate(p);
  CHECK(legal_moves(p, Player::Left).empty());
  CHECK(legal_moves(p, Player::Right).empty());
}

TEST_CASE("go on lattice: a single red edge is -1") {
  LatticePosition p;
  p.width = 2;
  p.height = 1;
  p.hedges = {EdgeColor::RedSolid};
  p.alive = {1, 1};
  p.pieces = {{0, 0}};
  validate(p);
  CHECK(legal_moves(p, Player::Right).size() == 1);
  CHECK(legal_moves(p, Player::Left).empty());
  CHECK(to_game(p).eq(integer_game(-1)));
}

TEST_CASE("beyond the door: door sides gate movement") {
  DoorPosition p;
  p.width = 2;
  p.height = 1;
  p.hdoors = {{DoorSide::Blue, DoorSide::Black}};
  p.alive = {1, 1};
  p.pieces = {{0, 0}};
  validate(p);
  auto moves = legal_moves(p, Player::Left);
  REQUIRE(moves.size() == 1);
  CHECK(!moves[0].second.is_alive(0, 0));
  CHECK(legal_moves(p, Player::Right).empty());
  CHECK(to_game(p).eq(integer_game(1)));
}

TEST_CASE("beyond the door: delta single room is star") {
  DoorPosition p;
  p.width = 1;
  p.height = 1;
  p.variant = Variant::Delta;
  p.alive = {1};
  p.pieces = {{0, 0}};
  validate(p);
  CHECK(to_game(p).eq(star()));
}

TEST_CASE("position files round trip") {
  auto p = tt_board(2, 1, {Tile::Blue, Tile::Blue}, {{0, 0}});
  std::string text = render_position(p);
  Position parsed = parse_position(text);
  CHECK(render_position(parsed) == text);
  CHECK(text ==
        "ruleset: turning-tiles\n"
        "variant: standard\n"
        "width: 2\n"
        "height: 1\n"
        "grid:\n"
        "LL\n"
        "pieces:\n"
        "0 0\n");
}

TEST_CASE("lattice and door files round trip") {
  LatticePosition lp;
  lp.width = 2;
  lp.height = 2;
  lp.hedges = {EdgeColor::BlueSolid, EdgeColor::Dotted};
  lp.vedges = {EdgeColor::RedSolid, EdgeColor::Absent};
  lp.alive = {1, 1, 0, 1};
  lp.pieces = {{0, 0}};
  validate(lp);
  std::string lt = render_position(lp);
  CHECK(render_position(parse_position(lt)) == lt);

  DoorPosition dp;
  dp.width = 2;
  dp.height = 2;
  dp.variant = Variant::Delta;
  dp.hdoors = {{DoorSide::Blue, DoorSide::Black},
               {DoorSide::Red, DoorSide::Red}};
  dp.vdoors = {{DoorSide::Black, DoorSide::Black},
               {DoorSide::Blue, DoorSide::Red}};
  dp.alive = {1, 1, 1, 1};
  dp.pieces = {{0, 1}, {1, 0}};
  validate(dp);
  std::string dt = render_position(dp);
  CHECK(render_position(parse_position(dt)) == dt);
}

TEST_CASE("parse rejects malformed files") {
  CHECK_THROWS_AS(parse_position("ruleset: chess\nvariant: standard\n"
                                 "width: 1\nheight: 1\n"),
                  ParseError);
  // green tile in a blue-red file
  CHECK_THROWS_AS(parse_position("ruleset: turning-tiles\nvariant: standard\n"
                                 "width: 2\nheight: 1\ngrid:\nLG\npieces:\n"),
                  ParseError);
  // ragged grid
  CHECK_THROWS_AS(parse_position("ruleset: turning-tiles\nvariant: standard\n"
                                 "width: 2\nheight: 1\ngrid:\nLLL\npieces:\n"),
                  ParseError);
  // piece on a missing tile
  CHECK_THROWS_AS(parse_position("ruleset: turning-tiles\nvariant: standard\n"
                                 "width: 2\nheight: 1\ngrid:\nL.\npieces:\n"
                                 "0 1\n"),
                  ParseError);
  // piece off board
  CHECK_THROWS_AS(parse_position("ruleset: turning-tiles\nvariant: standard\n"
                                 "width: 2\nheight: 1\ngrid:\nLL\npieces:\n"
                                 "0 5\n"),
                  ParseError);
}

TEST_CASE("parsed delta variant enables removal") {
  Position p = parse_position(
      "ruleset: beyond-the-door\nvariant: delta\nwidth: 1\nheight: 1\n"
      "hdoors:\n\nvdoors:\nblocked:\npieces:\n0 0\n");
  const auto& dp = std::get<DoorPosition>(p);
  auto moves = legal_moves(dp, Player::Left);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].first.kind == Move::Kind::Remove);
}

TEST_CASE("color swap negates values") {
  auto p = tt_board(3, 1, {Tile::Blue, Tile::Red, Tile::Blue}, {{0, 1}});
  CHECK(to_game(color_swap(p)).eq(-to_game(p)));
  auto q = tt_board(2, 2, {Tile::Blue, Tile::Blue, Tile::Red, Tile::Blue},
                    {{0, 0}, {1, 1}}, Variant::Delta);
  CHECK(to_game(color_swap(q)).eq(-to_game(q)));
}
