#include "lienil/field.hpp"

#include <algorithm>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(unsigned p) : p_(p) {
  if (p > 251) throw InputError("prime " + std::to_string(p) + " does not fit a byte (max 251)");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  barrett_ = ((1u << 16) + p - 1) / p;
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if (a * b % p == 1) {
        inv_[a] = Coeff(b);
        break;
      }
}

// Barrett reduction of s = y + a*x < 2^16: the estimate q is floor(s/p) or one more,
// so the remainder lands in [-p, p) and one conditional add fixes it. Written
// branch-free so the loop vectorizes.
void FieldSpec::axpy(std::span<Coeff> y, Coeff a, std::span<const Coeff> x, std::size_t from) const {
  if (a == 0) return;
  const std::uint32_t m = barrett_;
  const std::int32_t p = static_cast<std::int32_t>(p_);
  const std::uint32_t ua = a;
  Coeff* __restrict yp = y.data();
  const Coeff* __restrict xp = x.data();
  const std::size_t n = y.size();
  for (std::size_t k = from; k < n; ++k) {
    std::uint32_t s = std::uint32_t(yp[k]) + ua * std::uint32_t(xp[k]);
    std::uint32_t q = (s * m) >> 16;
    std::int32_t r = std::int32_t(s) - std::int32_t(q) * p;
    r += (r >> 31) & p;
    yp[k] = Coeff(r);
  }
}

void FieldSpec::scale(std::span<Coeff> y, Coeff a) const {
  for (auto& v : y) v = mul(v, a);
}

bool CoeffVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Coeff c) { return c == 0; });
}

}  // namespace lienil
