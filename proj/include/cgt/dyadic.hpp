#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cgt {

// Exact dyadic rational num / 2^exp, kept reduced (exp == 0 or num odd).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t num, int exp = 0) : num_(num), exp_(exp) { reduce(); }

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  std::int64_t floor() const;

  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  std::strong_ordering operator<=>(const Dyadic& o) const;

  std::string str() const;  // "3", "-5/8"

 private:
  void reduce();

  std::int64_t num_ = 0;
  int exp_ = 0;
};

// The simplest (earliest-born) dyadic rational strictly between lo and hi.
// A missing bound means unbounded on that side; requires lo < hi when both
// are present.
Dyadic simplest_dyadic_between(const std::optional<Dyadic>& lo,
                               const std::optional<Dyadic>& hi);

}  // namespace cgt
