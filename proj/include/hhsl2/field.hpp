#pragma once

#include <cstdint>
#include <stdexcept>

namespace hhsl2 {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p. Residues are kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 16))
      throw std::invalid_argument("PrimeField: modulus must be a prime below 65536");
  }

  std::uint32_t characteristic() const { return p_; }

  Scalar reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const { Scalar s = a + b; return s >= p_ ? s - p_ : s; }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Scalar inv(Scalar a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hhsl2
