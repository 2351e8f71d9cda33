#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cgt/game.hpp"
#include "cgt/position.hpp"

namespace cgt {

enum class ReductionTarget : std::uint8_t { GoL, BtD };

// Game-tree-preserving maps out of standard blue-red Turning Tiles. Both
// require a full rectangular blue-red board (no green, no black, no holes)
// in the standard variant; they throw std::invalid_argument otherwise.
LatticePosition tt_to_lattice(const TTPosition& p);  // the map f
DoorPosition tt_to_door(const TTPosition& p);        // the map f'

// Game trees compared as sets of options, recursively. Hash-consing makes
// this exactly handle equality.
bool tree_isomorphic(Game g, Game h);

struct ReductionCertificate {
  TTPosition source;
  ReductionTarget target;
  Position mapped;
  bool isomorphic = false;
  // A mismatching pair of subtrees, present iff !isomorphic.
  std::optional<std::pair<Game, Game>> counterexample;
};

ReductionCertificate certify_reduction(const TTPosition& p,
                                       ReductionTarget target);

std::string render_certificate(const ReductionCertificate& cert);

}  // namespace cgt
