#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

// Exact dyadic rational num / 2^exp, canonical: exp == 0 or num odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class num, std::int64_t exp);

  const mpz_class& num() const { return num_; }
  std::int64_t exp() const { return exp_; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  // Multiplication by 2^k, k of either sign.
  Dyadic scaled(std::int64_t k) const;

  bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }
  std::strong_ordering operator<=>(const Dyadic& o) const;

  std::string str() const;  // "3/8", "1", "0"

 private:
  void normalize();

  mpz_class num_ = 0;
  std::int64_t exp_ = 0;
};

// Returns k with b = a * 2^k when b / a is a power of two, for positive a, b.
// Throws std::domain_error otherwise.
std::int64_t log2_ratio(const Dyadic& a, const Dyadic& b);

}  // namespace cayley
