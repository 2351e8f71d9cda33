#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgt/dyadic.hpp"

namespace cgt {

enum class Outcome : std::uint8_t { L, R, N, P };
enum class Player : std::uint8_t { Left, Right };

char to_char(Outcome o);
Player opponent(Player p);

// Partial order on outcomes: L > P > R and L > N > R; N, P incomparable.
bool outcome_geq(Outcome a, Outcome b);

// A short partizan game, represented as a handle into a hash-consed arena of
// immutable nodes. Two structurally identical trees (option sets compared as
// sets, recursively) always share one handle, so operator== is exactly
// game-tree isomorphism. Value-level comparison goes through eq()/geq().
//
// All construction and queries run against a single process-wide registry;
// results are memoized there. The engine is single-threaded.
class Game {
 public:
  using Id = std::uint32_t;

  Game() = default;  // the zero game { | }

  static Game make(const std::vector<Game>& left,
                   const std::vector<Game>& right);

  std::vector<Game> left_options() const;
  std::vector<Game> right_options() const;

  friend bool operator==(Game a, Game b) { return a.id_ == b.id_; }
  friend auto operator<=>(Game a, Game b) { return a.id_ <=> b.id_; }

  Game operator-() const;              // swap and negate option sets
  Game operator+(Game h) const;        // disjunctive sum, no simplification
  Game operator-(Game h) const { return *this + (-h); }

  Outcome outcome() const;
  bool geq(Game h) const;              // *this >= h as values
  bool leq(Game h) const { return h.geq(*this); }
  bool eq(Game h) const { return geq(h) && leq(h); }
  bool confused(Game h) const { return !geq(h) && !leq(h); }

  Game canonical() const;              // unique simplest form
  int birthday() const;                // game-tree height
  bool dicotic() const;
  bool infinitesimal() const;          // both stops zero
  std::pair<Dyadic, Dyadic> stops() const;  // (Left stop, Right stop)

  // Replace every empty option set in the form with {0}.
  Game delta() const;

  // Least N <= birthday+2 with G < N*up, G < N*up + *, G > N*down, and
  // G > N*down + *. Requires a dicotic game.
  int up_bound() const;

  Id id() const { return id_; }

 private:
  explicit Game(Id id) : id_(id) {}
  friend class Arena;

  Id id_ = 0;
};

// Named atoms. Multiples are built by iterated summation and canonicalized.
Game zero_game();
Game star();
Game up();
Game down();
Game integer_game(long long n);
Game up_multiple(int n);        // n >= 1
Game up_star_multiple(int n);   // n*up + *, n >= 1
Game down_multiple(int n);
Game down_star_multiple(int n);

// Number of distinct game trees interned so far (diagnostics).
std::size_t arena_size();

}  // namespace cgt
