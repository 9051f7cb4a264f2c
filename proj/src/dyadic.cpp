#include "cayley/dyadic.hpp"

#include <stdexcept>

namespace cayley {

Dyadic::Dyadic(mpz_class num, std::int64_t exp) : num_(std::move(num)), exp_(exp) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ < 0) {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
    exp_ = 0;
    return;
  }
  if (exp_ > 0) {
    mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
    auto drop = static_cast<std::int64_t>(tz) < exp_ ? static_cast<std::int64_t>(tz) : exp_;
    if (drop > 0) {
      mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
      exp_ -= drop;
    }
  }
}

namespace {

// Numerators of a and b brought to the common exponent max(ea, eb).
void align(const Dyadic& a, const Dyadic& b, mpz_class& na, mpz_class& nb, std::int64_t& e) {
  e = std::max(a.exp(), b.exp());
  mpz_mul_2exp(na.get_mpz_t(), a.num().get_mpz_t(), static_cast<mp_bitcnt_t>(e - a.exp()));
  mpz_mul_2exp(nb.get_mpz_t(), b.num().get_mpz_t(), static_cast<mp_bitcnt_t>(e - b.exp()));
}

}  // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
  mpz_class na, nb;
  std::int64_t e;
  align(*this, o, na, nb, e);
  return Dyadic(na + nb, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  mpz_class na, nb;
  std::int64_t e;
  align(*this, o, na, nb, e);
  return Dyadic(na - nb, e);
}

Dyadic Dyadic::scaled(std::int64_t k) const { return Dyadic(num_, exp_ - k); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  if (exp_ == o.exp_) {
    int c = cmp(num_, o.num_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  mpz_class na, nb;
  std::int64_t e;
  align(*this, o, na, nb, e);
  int c = cmp(na, nb);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Dyadic::str() const {
  std::string s = num_.get_str();
  if (exp_ > 0) s += "/2^" + std::to_string(exp_);
  return s;
}

std::int64_t log2_ratio(const Dyadic& a, const Dyadic& b) {
  if (a.num() <= 0 || b.num() <= 0) throw std::domain_error("log2_ratio needs positive values");
  // Strip powers of two from both numerators; the odd parts must agree.
  mpz_class oa = a.num(), ob = b.num();
  auto ta = static_cast<std::int64_t>(mpz_scan1(oa.get_mpz_t(), 0));
  auto tb = static_cast<std::int64_t>(mpz_scan1(ob.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(oa.get_mpz_t(), oa.get_mpz_t(), static_cast<mp_bitcnt_t>(ta));
  mpz_fdiv_q_2exp(ob.get_mpz_t(), ob.get_mpz_t(), static_cast<mp_bitcnt_t>(tb));
  if (oa != ob) throw std::domain_error("ratio is not a power of two");
  return (tb - b.exp()) - (ta - a.exp());
}

}  // namespace cayley
