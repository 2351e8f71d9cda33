#pragma once

// Test-only brute-force game model: plain option trees, no interning, no
// memoization, outcomes by exhaustive play. Kept independent of the engine
// so derived expectations have a second route.

#include <memory>
#include <vector>

namespace naive {

struct NGame;
using NPtr = std::shared_ptr<const NGame>;

struct NGame {
  std::vector<NPtr> left, right;
};

inline NPtr ng(std::vector<NPtr> l, std::vector<NPtr> r) {
  auto g = std::make_shared<NGame>();
  g->left = std::move(l);
  g->right = std::move(r);
  return g;
}

inline NPtr nzero() { return ng({}, {}); }
inline NPtr nstar() { return ng({nzero()}, {nzero()}); }
inline NPtr nup() { return ng({nzero()}, {nstar()}); }

inline NPtr nneg(const NPtr& g) {
  std::vector<NPtr> l, r;
  for (const NPtr& x : g->right) l.push_back(nneg(x));
  for (const NPtr& x : g->left) r.push_back(nneg(x));
  return ng(std::move(l), std::move(r));
}

inline NPtr ndown() { return nneg(nup()); }

inline NPtr nadd(const NPtr& a, const NPtr& b) {
  std::vector<NPtr> l, r;
  for (const NPtr& x : a->left) l.push_back(nadd(x, b));
  for (const NPtr& x : b->left) l.push_back(nadd(a, x));
  for (const NPtr& x : a->right) r.push_back(nadd(x, b));
  for (const NPtr& x : b->right) r.push_back(nadd(a, x));
  return ng(std::move(l), std::move(r));
}

inline NPtr nsub(const NPtr& a, const NPtr& b) { return nadd(a, nneg(b)); }

inline bool nwins_first(const NPtr& g, bool left_to_move) {
  const auto& opts = left_to_move ? g->left : g->right;
  for (const NPtr& o : opts)
    if (!nwins_first(o, !left_to_move)) return true;
  return false;
}

inline char noutcome(const NPtr& g) {
  bool l = nwins_first(g, true);
  bool r = nwins_first(g, false);
  return l ? (r ? 'N' : 'L') : (r ? 'R' : 'P');
}

inline bool ngeq(const NPtr& a, const NPtr& b) {
  char o = noutcome(nsub(a, b));
  return o == 'L' || o == 'P';
}

inline bool neq(const NPtr& a, const NPtr& b) {
  return noutcome(nsub(a, b)) == 'P';
}

}  // namespace naive
