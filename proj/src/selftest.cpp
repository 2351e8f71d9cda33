#include "cgt/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cgt/position.hpp"
#include "cgt/reductions.hpp"
#include "cgt/universality.hpp"
#include "cgt/value_text.hpp"

namespace cgt {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { res_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++res_.passed;
    } else {
      ++res_.failed;
      if (res_.failures.size() < 5) res_.failures.push_back(what);
    }
  }

  SuiteResult result() const { return res_; }

 private:
  SuiteResult res_;
};

Game random_game(std::mt19937& rng, int depth) {
  if (depth == 0) return zero_game();
  auto options = [&](int count) {
    std::vector<Game> v;
    for (int i = 0; i < count; ++i)
      v.push_back(random_game(rng, static_cast<int>(rng() % depth)));
    return v;
  };
  return Game::make(options(rng() % 3), options(rng() % 3));
}

// Deterministic mixed corpus: named atoms, random trees, closed under
// negation, plus a layer of pairwise sums.
std::vector<Game> game_corpus(std::size_t random_count, unsigned seed = 12345) {
  std::vector<Game> base = {
      zero_game(),       star(),
      up(),              down(),
      integer_game(1),   integer_game(-1),
      integer_game(2),   up_star_multiple(1),
      down_star_multiple(1),
      Game::make({zero_game(), star()}, {zero_game(), star()}),  // *2
      Game::make({integer_game(1)}, {integer_game(-1)}),
      Game::make({zero_game()}, {integer_game(1)}),  // 1/2
  };
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i)
    base.push_back(random_game(rng, 3));
  std::set<Game> all(base.begin(), base.end());
  for (Game g : base) all.insert(-g);
  std::vector<Game> out(all.begin(), all.end());
  std::size_t n = out.size();
  for (std::size_t i = 0; i + 1 < n && i < 12; i += 2)
    out.push_back(out[i] + out[i + 1]);
  return out;
}

Outcome mirror(Outcome o) {
  if (o == Outcome::L) return Outcome::R;
  if (o == Outcome::R) return Outcome::L;
  return o;
}

SuiteResult suite_engine_algebra() {
  Suite s("engine-algebra");
  auto corpus = game_corpus(40);
  for (Game g : corpus) {
    s.check(-(-g) == g, "neg involution: " + render_tree(g));
    s.check((g - g).outcome() == Outcome::P, "G-G not P: " + render_tree(g));
    s.check((-g).outcome() == mirror(g.outcome()),
            "outcome mirror: " + render_tree(g));
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    Game a = corpus[rng() % corpus.size()];
    Game b = corpus[rng() % corpus.size()];
    Game c = corpus[rng() % corpus.size()];
    s.check(a + b == b + a, "sum commutativity");
    s.check((a + b) + c == a + (b + c), "sum associativity");
  }
  return s.result();
}

SuiteResult suite_order() {
  Suite s("order-relations");
  auto corpus = game_corpus(30);
  for (Game g : corpus) s.check(g.geq(g), "geq not reflexive");
  std::mt19937 rng(11);
  for (int i = 0; i < 120; ++i) {
    Game a = corpus[rng() % corpus.size()];
    Game b = corpus[rng() % corpus.size()];
    Game c = corpus[rng() % corpus.size()];
    if (a.geq(b) && b.geq(c))
      s.check(a.geq(c), "geq not transitive");
    if (a.geq(b) && b.geq(a))
      s.check(a.eq(b) && a.canonical() == b.canonical(),
              "antisymmetry does not reach eq");
  }
  return s.result();
}

SuiteResult suite_canonical() {
  Suite s("canonical-forms");
  auto corpus = game_corpus(40);
  for (Game g : corpus) {
    Game k = g.canonical();
    s.check(k.eq(g), "canonical form not equal: " + render_tree(g));
    s.check(k.canonical() == k, "canonicalize not idempotent");
  }
  std::mt19937 rng(13);
  for (int i = 0; i < 120; ++i) {
    Game a = corpus[rng() % corpus.size()];
    Game b = corpus[rng() % corpus.size()];
    s.check(a.eq(b) == (a.canonical() == b.canonical()),
            "eq does not match canonical identity");
  }
  s.check(Game::make({star()}, {star()}).canonical() == zero_game(),
          "{*|*} should canonicalize to 0");
  s.check(star().canonical() == star(), "* should be canonical");
  s.check(Game::make({integer_game(1), zero_game()}, {}).canonical() ==
              integer_game(2),
          "{1,0|} should canonicalize to 2");
  return s.result();
}

SuiteResult suite_theorem_nup() {
  Suite s("up-multiple-identities");
  for (int n = 1; n <= 8; ++n) {
    Game nup = up_multiple(n);
    Game prev_star =
        n == 1 ? star() : up_star_multiple(n - 1);
    s.check(nup.eq(Game::make({zero_game()}, {prev_star})),
            "n*up closed form, n=" + std::to_string(n));
    if (n > 1) {
      s.check(up_star_multiple(n).eq(
                  Game::make({zero_game()}, {up_multiple(n - 1)})),
              "n*up+* closed form, n=" + std::to_string(n));
      s.check(nup.geq(star()) && !star().geq(nup),
              "n*up > * for n>1, n=" + std::to_string(n));
    }
  }
  s.check(up_star_multiple(1).eq(Game::make({zero_game(), star()}, {zero_game()})),
          "up+* = {0,*|0}");
  s.check(up().confused(star()), "up || *");
  return s.result();
}

SuiteResult suite_dicotic_day3() {
  Suite s("dicotic-born-by-day-3");
  auto games = dicotic_canonical_born_by(3);
  s.check(!games.empty(), "enumeration empty");
  for (Game g : games) {
    s.check(g.infinitesimal(), "dicotic not infinitesimal: " + render_tree(g));
    int b = g.birthday();
    if (b >= 1) {
      int n = b - 1;
      bool ok = n == 0 ? (zero_game().geq(g) || star().geq(g))
                       : (up_multiple(n).geq(g) || up_star_multiple(n).geq(g));
      s.check(ok, "day bound fails: " + render_tree(g));
    }
  }
  return s.result();
}

SuiteResult suite_stops() {
  Suite s("stops-and-infinitesimals");
  auto corpus = game_corpus(40);
  for (Game g : corpus) {
    auto [ls, rs] = g.stops();
    s.check(!(ls < rs), "left stop below right stop: " + render_tree(g));
    if (g.infinitesimal()) {
      Game acc = zero_game();
      Game one = integer_game(1);
      for (int n = 1; n <= g.birthday() + 2; ++n) {
        acc = acc + g;
        s.check(one.geq(acc) && !acc.geq(one),
                "n*G < 1 fails for infinitesimal");
        Game nacc = -acc;
        s.check(one.geq(nacc) && !nacc.geq(one),
                "n*(-G) < 1 fails for infinitesimal");
      }
    }
  }
  s.check(star().infinitesimal(), "* infinitesimal");
  s.check(up().infinitesimal(), "up infinitesimal");
  s.check(!integer_game(1).infinitesimal(), "1 not infinitesimal");
  s.check(!Game::make({integer_game(1)}, {zero_game()}).infinitesimal(),
          "{1|0} not infinitesimal");
  return s.result();
}

SuiteResult suite_delta() {
  Suite s("delta-function");
  s.check(zero_game().delta() == star(), "delta(0) = *");
  Game one = integer_game(1);
  s.check(one.delta() == down(), "delta(1) = down");
  s.check(Game::make({zero_game()}, {zero_game()}).delta().canonical() ==
              zero_game(),
          "delta(*) = 0 in canonical form");
  Game two_a = Game::make({one}, {});
  Game two_b = Game::make({one, zero_game()}, {});
  s.check(two_a.eq(two_b), "{1|} = {1,0|}");
  s.check(!two_a.delta().eq(two_b.delta()), "delta breaks the equality");
  s.check((two_a.delta() - two_b.delta()).outcome() == Outcome::R,
          "o(delta({1|}) - delta({1,0|})) = R");
  s.check(two_b.delta() ==
              Game::make({down(), star()}, {zero_game()}),
          "delta({1,0|}) = {down,*|0}");
  return s.result();
}

// Direct alternating play over one or two boards, no memoization and no
// game-value machinery; independent route to outcomes.
bool tt_wins_moving(const std::vector<TTPosition>& boards, Player p) {
  for (std::size_t i = 0; i < boards.size(); ++i) {
    for (const auto& [m, succ] : legal_moves(boards[i], p)) {
      std::vector<TTPosition> next = boards;
      next[i] = succ;
      if (!tt_wins_moving(next, opponent(p))) return true;
    }
  }
  return false;
}

Outcome tt_oracle_outcome(const std::vector<TTPosition>& boards) {
  bool l = tt_wins_moving(boards, Player::Left);
  bool r = tt_wins_moving(boards, Player::Right);
  return l ? (r ? Outcome::N : Outcome::L) : (r ? Outcome::R : Outcome::P);
}

std::vector<TTPosition> tt_corpus() {
  std::vector<TTPosition> out;
  // all 1xn boards (n <= 3) with every coloring and one piece
  for (int n = 1; n <= 3; ++n) {
    for (int colors = 0; colors < (1 << n); ++colors) {
      for (int pc = 0; pc < n; ++pc) {
        TTPosition p;
        p.width = n;
        p.height = 1;
        for (int i = 0; i < n; ++i)
          p.tiles.push_back((colors >> i) & 1 ? Tile::Red : Tile::Blue);
        p.pieces = {Coord{0, pc}};
        out.push_back(p);
      }
    }
  }
  // a few 2x2 boards with two pieces
  for (int colors = 0; colors < 16; colors += 3) {
    TTPosition p;
    p.width = 2;
    p.height = 2;
    for (int i = 0; i < 4; ++i)
      p.tiles.push_back((colors >> i) & 1 ? Tile::Red : Tile::Blue);
    p.pieces = {Coord{0, 0}, Coord{1, 1}};
    out.push_back(p);
  }
  return out;
}

SuiteResult suite_rulesets() {
  Suite s("ruleset-movegen");
  for (const TTPosition& p : tt_corpus()) {
    Game g = to_game(p);
    s.check(to_game(color_swap(p)).eq(-g), "color swap is not negation (TT)");
    s.check(tt_oracle_outcome({p}) == g.outcome(),
            "oracle outcome mismatch: " + render_position(p));
    s.check(tt_oracle_outcome({p, color_swap(p)}) == Outcome::P,
            "oracle difference not P: " + render_position(p));
    // round trip through the file format
    Position rt = parse_position(render_position(p));
    s.check(render_position(rt) == render_position(p),
            "render/parse round trip");
    LatticePosition lp = tt_to_lattice(p);
    s.check(to_game(color_swap(lp)).eq(-to_game(lp)),
            "color swap is not negation (GoL)");
    DoorPosition dp = tt_to_door(p);
    s.check(to_game(color_swap(dp)).eq(-to_game(dp)),
            "color swap is not negation (BtD)");
  }
  return s.result();
}

SuiteResult suite_delta_variants() {
  Suite s("delta-variant-dicoticity");
  for (TTPosition p : tt_corpus()) {
    p.variant = Variant::Delta;
    Game g = to_game(p);
    s.check(g.dicotic(), "delta-TT not dicotic: " + render_position(p));
    s.check(g.infinitesimal(), "delta-TT not infinitesimal");
    // Remove is offered exactly when the piece has no slide.
    for (Player pl : {Player::Left, Player::Right}) {
      auto moves = legal_moves(p, pl);
      for (const Coord& pc : p.pieces) {
        bool has_slide = false, has_remove = false;
        for (const auto& [m, succ] : moves) {
          if (m.piece == pc) {
            if (m.kind == Move::Kind::Slide) has_slide = true;
            if (m.kind == Move::Kind::Remove) has_remove = true;
          }
        }
        s.check(has_remove == !has_slide, "remove legality mismatch");
      }
    }
  }
  for (int n = 0; n <= 4; ++n) {
    Game g = to_game(down_path(n));
    s.check(g.dicotic(), "down_path not dicotic");
    s.check(g.infinitesimal(), "down_path not infinitesimal");
  }
  return s.result();
}

SuiteResult suite_reductions() {
  Suite s("reductions");
  for (const TTPosition& p : tt_corpus()) {
    for (ReductionTarget t : {ReductionTarget::GoL, ReductionTarget::BtD}) {
      auto cert = certify_reduction(p, t);
      s.check(cert.isomorphic,
              "reduction not tree preserving: " + render_position(p));
      Game g = to_game(p), h = to_game(cert.mapped);
      s.check(g.eq(h), "reduction not value preserving");
      s.check(g.birthday() == h.birthday(), "birthday differs");
    }
  }
  s.check(tree_isomorphic(star(), Game::make({zero_game()}, {zero_game()})),
          "identical constructions isomorphic");
  s.check(!tree_isomorphic(integer_game(1), Game::make({star()}, {})),
          "distinct trees not isomorphic");
  return s.result();
}

SuiteResult suite_lemma1() {
  Suite s("lemma1-paths");
  for (int n = 0; n <= 6; ++n) {
    Game g = to_game(down_path(n));
    Game expected = n == 0       ? star()
                    : n % 2 == 1 ? down_multiple(n)
                                 : down_star_multiple(n);
    s.check(g.eq(expected), "down_path(" + std::to_string(n) + ") value");
    s.check(to_game(up_path(n)).eq(-g), "up_path mirror");
    s.check(verify_value(down_path(n), expected), "verify_value on path");
  }
  for (Game target : {zero_game(), star(), up(), down()}) {
    auto r = realize_search(target, 2, 2, 1);
    s.check(r.found, "realize_search miss: " + render_value(target));
    if (r.found) {
      s.check(verify_value(*r.position, target), "realized value mismatch");
      int nb = target.up_bound();
      Game x = to_game(*r.position);
      Game lo = down_multiple(nb), hi = up_multiple(nb);
      s.check(x.geq(lo) && !lo.geq(x) && hi.geq(x) && !x.geq(hi),
              "Corollary-3 bound fails on realization");
    }
  }
  return s.result();
}

}  // namespace

std::vector<Game> dicotic_canonical_born_by(int day) {
  std::set<Game> cur = {zero_game()};
  for (int d = 1; d <= day; ++d) {
    std::vector<Game> prev(cur.begin(), cur.end());
    std::set<Game> next = cur;
    std::size_t n = prev.size();
    // all nonempty option subsets of the previous generation
    for (std::uint64_t lm = 1; lm < (1ull << n); ++lm) {
      std::vector<Game> l;
      for (std::size_t i = 0; i < n; ++i)
        if ((lm >> i) & 1) l.push_back(prev[i]);
      for (std::uint64_t rm = 1; rm < (1ull << n); ++rm) {
        std::vector<Game> r;
        for (std::size_t i = 0; i < n; ++i)
          if ((rm >> i) & 1) r.push_back(prev[i]);
        Game g = Game::make(l, r);
        Game k = g.canonical();
        if (k.dicotic() && k.birthday() <= d) next.insert(k);
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

std::vector<SuiteResult> run_selftests() {
  return {
      suite_engine_algebra(), suite_order(),          suite_canonical(),
      suite_theorem_nup(),    suite_dicotic_day3(),   suite_stops(),
      suite_delta(),          suite_rulesets(),       suite_delta_variants(),
      suite_reductions(),     suite_lemma1(),
  };
}

}  // namespace cgt
