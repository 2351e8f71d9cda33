#pragma once

#include <string>
#include <string_view>

#include "cgt/error.hpp"
#include "cgt/game.hpp"

namespace cgt {

// Canonical value text: integers as decimal, `*`, `^`/`v` and the multiple
// forms `n^`, `nv`, `n^*`, `nv*`, otherwise `{a,b,...|c,d,...}`. The game is
// canonicalized before rendering.
std::string render_value(Game g);

// Literal rendering of a form (no canonicalization); used for diagnostics.
std::string render_tree(Game g);

// Parses the same grammar plus sums with explicit `+`. Whitespace-insensitive.
// Throws ParseError on malformed input.
Game parse_value(std::string_view text);

}  // namespace cgt
