#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cgt/error.hpp"
#include "cgt/game.hpp"

namespace cgt {

enum class Variant : std::uint8_t { Standard, Delta };
enum class Tile : std::uint8_t { Blue, Red, Green, Black, None };
enum class EdgeColor : std::uint8_t { BlueSolid, RedSolid, Dotted, Absent };
enum class DoorSide : std::uint8_t { Blue, Red, Black };
enum class Dir : std::uint8_t { Up, Down, LeftDir, RightDir };

struct Coord {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

struct Move {
  enum class Kind : std::uint8_t { Slide, Remove };
  Kind kind = Kind::Slide;
  Coord piece;
  Dir dir = Dir::Up;       // Slide only
  int distance = 0;        // Slide only
};

// blue-red (and blue-red-green) Turning Tiles board.
struct TTPosition {
  int width = 0, height = 0;
  bool allow_green = false;
  Variant variant = Variant::Standard;
  std::vector<Tile> tiles;       // row-major, width*height
  std::vector<Coord> pieces;     // kept sorted

  Tile tile(int r, int c) const { return tiles[r * width + c]; }
  Tile& tile(int r, int c) { return tiles[r * width + c]; }
};

// Go on Lattice board.
struct LatticePosition {
  int width = 0, height = 0;
  Variant variant = Variant::Standard;
  std::vector<EdgeColor> hedges;  // height rows of width-1, row-major
  std::vector<EdgeColor> vedges;  // height-1 rows of width, row-major
  std::vector<char> alive;        // row-major, width*height
  std::vector<Coord> pieces;

  // edge between (r,c) and (r,c+1)
  EdgeColor hedge(int r, int c) const { return hedges[r * (width - 1) + c]; }
  EdgeColor& hedge(int r, int c) { return hedges[r * (width - 1) + c]; }
  // edge between (r,c) and (r+1,c)
  EdgeColor vedge(int r, int c) const { return vedges[r * width + c]; }
  EdgeColor& vedge(int r, int c) { return vedges[r * width + c]; }
  bool is_alive(int r, int c) const { return alive[r * width + c] != 0; }
};

// Beyond the Door board. Each door stores its two painted sides.
struct DoorPosition {
  int width = 0, height = 0;
  Variant variant = Variant::Standard;
  // hdoors[r][c] between rooms (r,c) and (r,c+1): (west-facing, east-facing),
  // i.e. first is the side seen from room (r,c).
  std::vector<std::pair<DoorSide, DoorSide>> hdoors;
  // vdoors[r][c] between rooms (r,c) and (r+1,c): (north-facing, south-facing).
  std::vector<std::pair<DoorSide, DoorSide>> vdoors;
  std::vector<char> alive;
  std::vector<Coord> pieces;

  std::pair<DoorSide, DoorSide>& hdoor(int r, int c) {
    return hdoors[r * (width - 1) + c];
  }
  const std::pair<DoorSide, DoorSide>& hdoor(int r, int c) const {
    return hdoors[r * (width - 1) + c];
  }
  std::pair<DoorSide, DoorSide>& vdoor(int r, int c) {
    return vdoors[r * width + c];
  }
  const std::pair<DoorSide, DoorSide>& vdoor(int r, int c) const {
    return vdoors[r * width + c];
  }
  bool is_alive(int r, int c) const { return alive[r * width + c] != 0; }
};

using Position = std::variant<TTPosition, LatticePosition, DoorPosition>;

// Structural invariant checks; throw std::invalid_argument on violation.
void validate(const TTPosition& p);
void validate(const LatticePosition& p);
void validate(const DoorPosition& p);

// Legal moves with their successor positions, in deterministic order
// (pieces sorted, directions Up/Down/Left/Right, distance ascending;
// delta-variant Remove offered per piece exactly when it has no slide).
std::vector<std::pair<Move, TTPosition>> legal_moves(const TTPosition& p,
                                                     Player pl);
std::vector<std::pair<Move, LatticePosition>> legal_moves(
    const LatticePosition& p, Player pl);
std::vector<std::pair<Move, DoorPosition>> legal_moves(const DoorPosition& p,
                                                       Player pl);

// Exhaustive compilation to a game value, memoized on the rendered form.
Game to_game(const TTPosition& p);
Game to_game(const LatticePosition& p);
Game to_game(const DoorPosition& p);
Game to_game(const Position& p);

// Canonical line-based file format (bit-exact render, round-trip identity).
std::string render_position(const TTPosition& p);
std::string render_position(const LatticePosition& p);
std::string render_position(const DoorPosition& p);
std::string render_position(const Position& p);
Position parse_position(std::string_view text);

// Human-readable board sketch; informative only.
std::string render_diagram(const Position& p);

// Blue <-> Red everywhere; the value of the result is the negation.
TTPosition color_swap(const TTPosition& p);
LatticePosition color_swap(const LatticePosition& p);
DoorPosition color_swap(const DoorPosition& p);

}  // namespace cgt
