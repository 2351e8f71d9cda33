#include "cgt/dyadic.hpp"

#include <cassert>

namespace cgt {

void Dyadic::reduce() {
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  assert(exp_ >= 0);
}

std::int64_t Dyadic::floor() const {
  if (exp_ == 0) return num_;
  std::int64_t d = std::int64_t{1} << exp_;
  std::int64_t q = num_ / d;
  if (num_ < 0 && num_ % d != 0) --q;
  return q;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  int e = exp_ > o.exp_ ? exp_ : o.exp_;
  std::int64_t a = num_ << (e - exp_);
  std::int64_t b = o.num_ << (e - o.exp_);
  return a <=> b;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic simplest_dyadic_between(const std::optional<Dyadic>& lo,
                               const std::optional<Dyadic>& hi) {
  if (!lo && !hi) return Dyadic(0);
  if (!hi) {
    if (*lo < Dyadic(0)) return Dyadic(0);
    return Dyadic(lo->floor() + 1);
  }
  if (!lo) return -simplest_dyadic_between(std::optional<Dyadic>(-*hi),
                                           std::nullopt);
  assert(*lo < *hi);
  Dyadic z(0);
  if (*lo < z && z < *hi) return z;
  if (*hi <= z)
    return -simplest_dyadic_between(std::optional<Dyadic>(-*hi),
                                    std::optional<Dyadic>(-*lo));
  // 0 <= lo < hi: the simplest value has the least exponent, and for that
  // exponent the least numerator above lo.
  for (int k = 0;; ++k) {
    std::int64_t m = Dyadic(lo->numerator() << k, lo->exponent()).floor() + 1;
    Dyadic cand(m, k);
    if (cand < *hi) return cand;
  }
}

}  // namespace cgt
