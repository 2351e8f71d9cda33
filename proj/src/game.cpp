#include "cgt/game.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cgt {

char to_char(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::R: return 'R';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
  }
  return '?';
}

Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

bool outcome_geq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (a == Outcome::L) return true;
  if (b == Outcome::R) return true;
  return false;
}

namespace {

using Id = Game::Id;

struct NodeKey {
  std::vector<Id> left, right;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(k.left.size());
    for (Id x : k.left) mix(x);
    mix(k.right.size());
    for (Id x : k.right) mix(x);
    return h;
  }
};

void sort_unique(std::vector<Id>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t pair_key(Id a, Id b) {
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace

// Process-wide hash-consing registry plus memo caches for every operation.
class Arena {
 public:
  static Arena& inst() {
    static Arena a;
    return a;
  }

  Id make(std::vector<Id> l, std::vector<Id> r) {
    sort_unique(l);
    sort_unique(r);
    NodeKey key{l, r};
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    Id id = static_cast<Id>(nodes_.size());
    nodes_.push_back(Node{std::move(key.left), std::move(key.right)});
    intern_.emplace(NodeKey{nodes_.back().left, nodes_.back().right}, id);
    return id;
  }

  const std::vector<Id>& left(Id g) const { return nodes_[g].left; }
  const std::vector<Id>& right(Id g) const { return nodes_[g].right; }

  Id neg(Id g) {
    auto it = neg_.find(g);
    if (it != neg_.end()) return it->second;
    std::vector<Id> l = left(g), r = right(g);
    std::vector<Id> nl, nr;
    nl.reserve(r.size());
    nr.reserve(l.size());
    for (Id x : r) nl.push_back(neg(x));
    for (Id x : l) nr.push_back(neg(x));
    Id res = make(std::move(nl), std::move(nr));
    neg_[g] = res;
    neg_[res] = g;
    return res;
  }

  Id add(Id a, Id b) {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint64_t key = a <= b ? pair_key(a, b) : pair_key(b, a);
    auto it = add_.find(key);
    if (it != add_.end()) return it->second;
    std::vector<Id> la = left(a), ra = right(a), lb = left(b), rb = right(b);
    std::vector<Id> l, r;
    l.reserve(la.size() + lb.size());
    r.reserve(ra.size() + rb.size());
    for (Id x : la) l.push_back(add(x, b));
    for (Id x : lb) l.push_back(add(a, x));
    for (Id x : ra) r.push_back(add(x, b));
    for (Id x : rb) r.push_back(add(a, x));
    Id res = make(std::move(l), std::move(r));
    add_[key] = res;
    return res;
  }

  Outcome outcome(Id g) {
    auto it = outcome_.find(g);
    if (it != outcome_.end()) return it->second;
    bool left_wins = false;   // moving first
    bool right_wins = false;
    for (Id gl : std::vector<Id>(left(g))) {
      Outcome o = outcome(gl);
      if (o == Outcome::L || o == Outcome::P) {
        left_wins = true;
        break;
      }
    }
    for (Id gr : std::vector<Id>(right(g))) {
      Outcome o = outcome(gr);
      if (o == Outcome::R || o == Outcome::P) {
        right_wins = true;
        break;
      }
    }
    Outcome res = left_wins ? (right_wins ? Outcome::N : Outcome::L)
                            : (right_wins ? Outcome::R : Outcome::P);
    outcome_[g] = res;
    return res;
  }

  // g >= h iff Right moving first loses g - h; recursively: no right option
  // of g is <= h and no left option of h is >= g.
  bool geq(Id g, Id h) {
    std::uint64_t key = pair_key(g, h);
    auto it = geq_.find(key);
    if (it != geq_.end()) return it->second != 0;
    bool res = true;
    for (Id gr : std::vector<Id>(right(g))) {
      if (geq(h, gr)) {  // gr <= h
        res = false;
        break;
      }
    }
    if (res) {
      for (Id hl : std::vector<Id>(left(h))) {
        if (geq(hl, g)) {
          res = false;
          break;
        }
      }
    }
    geq_[key] = res ? 1 : 0;
    return res;
  }

  int birthday(Id g) {
    auto it = birthday_.find(g);
    if (it != birthday_.end()) return it->second;
    int b = 0;
    for (Id gl : std::vector<Id>(left(g))) b = std::max(b, birthday(gl) + 1);
    for (Id gr : std::vector<Id>(right(g))) b = std::max(b, birthday(gr) + 1);
    birthday_[g] = b;
    return b;
  }

  bool dicotic(Id g) {
    auto it = dicotic_.find(g);
    if (it != dicotic_.end()) return it->second;
    bool res;
    if (left(g).empty() && right(g).empty()) {
      res = true;
    } else if (left(g).empty() || right(g).empty()) {
      res = false;
    } else {
      res = true;
      for (Id gl : std::vector<Id>(left(g)))
        if (!dicotic(gl)) { res = false; break; }
      if (res)
        for (Id gr : std::vector<Id>(right(g)))
          if (!dicotic(gr)) { res = false; break; }
    }
    dicotic_[g] = res;
    return res;
  }

  Id delta(Id g) {
    auto it = delta_.find(g);
    if (it != delta_.end()) return it->second;
    std::vector<Id> l = left(g), r = right(g);
    std::vector<Id> dl, dr;
    if (l.empty()) {
      dl.push_back(0);
    } else {
      for (Id x : l) dl.push_back(delta(x));
    }
    if (r.empty()) {
      dr.push_back(0);
    } else {
      for (Id x : r) dr.push_back(delta(x));
    }
    Id res = make(std::move(dl), std::move(dr));
    delta_[g] = res;
    return res;
  }

  // Simplest form: options canonicalized, then reversible options bypassed
  // and dominated options deleted until stable.
  Id canonical(Id g) {
    auto it = canonical_.find(g);
    if (it != canonical_.end()) return it->second;
    std::vector<Id> l, r;
    for (Id gl : std::vector<Id>(left(g))) l.push_back(canonical(gl));
    for (Id gr : std::vector<Id>(right(g))) r.push_back(canonical(gr));
    sort_unique(l);
    sort_unique(r);
    bool changed = true;
    while (changed) {
      changed = false;
      // Left option gl reversible through glr when glr <= g: replace gl with
      // glr's left options.
      for (std::size_t i = 0; i < l.size() && !changed; ++i) {
        for (Id glr : std::vector<Id>(right(l[i]))) {
          if (geq(g, glr)) {
            std::vector<Id> repl = left(glr);
            l.erase(l.begin() + i);
            l.insert(l.end(), repl.begin(), repl.end());
            sort_unique(l);
            changed = true;
            break;
          }
        }
      }
      if (changed) continue;
      for (std::size_t i = 0; i < r.size() && !changed; ++i) {
        for (Id grl : std::vector<Id>(left(r[i]))) {
          if (geq(grl, g)) {
            std::vector<Id> repl = right(grl);
            r.erase(r.begin() + i);
            r.insert(r.end(), repl.begin(), repl.end());
            sort_unique(r);
            changed = true;
            break;
          }
        }
      }
      if (changed) continue;
      // Dominated options. Distinct canonical forms are never value-equal,
      // so geq between distinct members is strict dominance.
      for (std::size_t i = 0; i < l.size() && !changed; ++i) {
        for (std::size_t j = 0; j < l.size(); ++j) {
          if (i != j && geq(l[j], l[i])) {
            l.erase(l.begin() + i);
            changed = true;
            break;
          }
        }
      }
      if (changed) continue;
      for (std::size_t i = 0; i < r.size() && !changed; ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (i != j && geq(r[i], r[j])) {
            r.erase(r.begin() + i);
            changed = true;
            break;
          }
        }
      }
    }
    Id res = make(std::move(l), std::move(r));
    canonical_[g] = res;
    canonical_[res] = res;
    return res;
  }

  std::optional<Dyadic> number_value(Id k) {
    auto it = number_.find(k);
    if (it != number_.end()) return it->second;
    std::optional<Dyadic> max_l, min_r;
    std::optional<Dyadic> res;
    bool ok = true;
    for (Id gl : std::vector<Id>(left(k))) {
      auto nv = number_value(gl);
      if (!nv) { ok = false; break; }
      if (!max_l || *max_l < *nv) max_l = nv;
    }
    if (ok) {
      for (Id gr : std::vector<Id>(right(k))) {
        auto nv = number_value(gr);
        if (!nv) { ok = false; break; }
        if (!min_r || *nv < *min_r) min_r = nv;
      }
    }
    if (ok && (!max_l || !min_r || *max_l < *min_r))
      res = simplest_dyadic_between(max_l, min_r);
    number_[k] = res;
    return res;
  }

  std::pair<Dyadic, Dyadic> stops(Id g) {
    Id k = canonical(g);
    return stops_canonical(k);
  }

  std::size_t size() const { return nodes_.size(); }

 private:
  Arena() {
    nodes_.push_back(Node{});
    intern_.emplace(NodeKey{}, 0);
  }

  std::pair<Dyadic, Dyadic> stops_canonical(Id k) {
    auto it = stops_.find(k);
    if (it != stops_.end()) return it->second;
    std::pair<Dyadic, Dyadic> res;
    if (auto nv = number_value(k)) {
      res = {*nv, *nv};
    } else {
      // A non-number canonical form always has options on both sides.
      assert(!left(k).empty() && !right(k).empty());
      std::optional<Dyadic> ls, rs;
      for (Id gl : std::vector<Id>(left(k))) {
        Dyadic v = stops_canonical(gl).second;
        if (!ls || *ls < v) ls = v;
      }
      for (Id gr : std::vector<Id>(right(k))) {
        Dyadic v = stops_canonical(gr).first;
        if (!rs || v < *rs) rs = v;
      }
      res = {*ls, *rs};
    }
    stops_[k] = res;
    return res;
  }

  struct Node {
    std::vector<Id> left, right;
  };

  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, Id, NodeKeyHash> intern_;
  std::unordered_map<Id, Id> neg_, delta_, canonical_;
  std::unordered_map<std::uint64_t, Id> add_;
  std::unordered_map<Id, Outcome> outcome_;
  std::unordered_map<std::uint64_t, char> geq_;
  std::unordered_map<Id, int> birthday_;
  std::unordered_map<Id, bool> dicotic_;
  std::unordered_map<Id, std::optional<Dyadic>> number_;
  std::unordered_map<Id, std::pair<Dyadic, Dyadic>> stops_;
};

Game Game::make(const std::vector<Game>& left, const std::vector<Game>& right) {
  std::vector<Id> l, r;
  l.reserve(left.size());
  r.reserve(right.size());
  for (Game g : left) l.push_back(g.id_);
  for (Game g : right) r.push_back(g.id_);
  return Game(Arena::inst().make(std::move(l), std::move(r)));
}

std::vector<Game> Game::left_options() const {
  std::vector<Game> res;
  for (Id x : Arena::inst().left(id_)) res.push_back(Game(x));
  return res;
}

std::vector<Game> Game::right_options() const {
  std::vector<Game> res;
  for (Id x : Arena::inst().right(id_)) res.push_back(Game(x));
  return res;
}

Game Game::operator-() const { return Game(Arena::inst().neg(id_)); }
Game Game::operator+(Game h) const {
  return Game(Arena::inst().add(id_, h.id_));
}
Outcome Game::outcome() const { return Arena::inst().outcome(id_); }
bool Game::geq(Game h) const { return Arena::inst().geq(id_, h.id_); }
Game Game::canonical() const { return Game(Arena::inst().canonical(id_)); }
int Game::birthday() const { return Arena::inst().birthday(id_); }
bool Game::dicotic() const { return Arena::inst().dicotic(id_); }
Game Game::delta() const { return Game(Arena::inst().delta(id_)); }

std::pair<Dyadic, Dyadic> Game::stops() const {
  return Arena::inst().stops(id_);
}

bool Game::infinitesimal() const {
  auto [ls, rs] = stops();
  return ls == Dyadic(0) && rs == Dyadic(0);
}

int Game::up_bound() const {
  if (!dicotic())
    throw std::invalid_argument("up_bound requires a dicotic game");
  auto lt = [](Game a, Game b) { return b.geq(a) && !a.geq(b); };
  int limit = birthday() + 2;
  for (int n = 1; n <= limit; ++n) {
    if (lt(*this, up_multiple(n)) && lt(*this, up_star_multiple(n)) &&
        lt(down_multiple(n), *this) && lt(down_star_multiple(n), *this))
      return n;
  }
  throw std::logic_error("up_bound: no bound within birthday+2");
}

std::size_t arena_size() { return Arena::inst().size(); }

Game zero_game() { return Game(); }

Game star() {
  static Game s = Game::make({zero_game()}, {zero_game()});
  return s;
}

Game up() {
  static Game u = Game::make({zero_game()}, {star()});
  return u;
}

Game down() {
  static Game d = -up();
  return d;
}

Game integer_game(long long n) {
  static std::map<long long, Game> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Game res;
  if (n == 0) {
    res = zero_game();
  } else if (n > 0) {
    res = Game::make({integer_game(n - 1)}, {});
  } else {
    res = -integer_game(-n);
  }
  cache.emplace(n, res);
  return res;
}

namespace {

void check_multiple(int n) {
  if (n < 1) throw std::invalid_argument("multiple atoms require n >= 1");
}

Game up_sum(int n) {
  Game g = zero_game();
  for (int i = 0; i < n; ++i) g = g + up();
  return g;
}

}  // namespace

Game up_multiple(int n) {
  check_multiple(n);
  static std::map<int, Game> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Game res = up_sum(n).canonical();
  cache.emplace(n, res);
  return res;
}

Game up_star_multiple(int n) {
  check_multiple(n);
  static std::map<int, Game> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Game res = (up_sum(n) + star()).canonical();
  cache.emplace(n, res);
  return res;
}

Game down_multiple(int n) { return -up_multiple(n); }
Game down_star_multiple(int n) { return -up_star_multiple(n); }

}  // namespace cgt
