#pragma once

#include <optional>
#include <string>

#include "cgt/game.hpp"
#include "cgt/position.hpp"

namespace cgt {

// (n+1)-room delta-Beyond-the-Door staircase where only Left can slide and
// the direction alternates at each step; value n*down (n odd) or
// n*down + * (n even).
DoorPosition down_path(int n);

// Color-swapped mirror of down_path; value is the negation.
DoorPosition up_path(int n);

// True iff the position equals g as a value, checked the way the paper does:
// the difference is a second-player win.
bool verify_value(const DoorPosition& pos, Game g);

struct RealizationResult {
  Game target;  // canonical form
  bool found = false;
  std::optional<DoorPosition> position;
  int rooms_used = 0;
  int search_bound = 0;  // maximum room count explored
};

// Deterministic bounded enumeration of delta-Beyond-the-Door positions
// (alive-room count ascending, then serialization order, deduplicated by
// dihedral board symmetry and color swap), returning the first position
// whose value verifies against the target. Requires a dicotic target.
RealizationResult realize_search(Game target, int max_width, int max_height,
                                 int max_pieces);

std::string render_realization(const RealizationResult& r);

}  // namespace cgt
