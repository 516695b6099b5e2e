#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhsl2/matrix.hpp"

namespace hhsl2 {

/// Chevalley generators of sl2. Weights in the identification X(T) = Z,
/// omega = 1: e has weight +2, h weight 0, f weight -2. The Borel subgroup is
/// the negative one, so b = span{h, f} and u = span{f}.
enum class Gen : std::uint8_t { E = 0, H = 1, F = 2 };

inline constexpr std::array<Gen, 3> kAllGens = {Gen::E, Gen::H, Gen::F};

constexpr int gen_weight(Gen g) {
  switch (g) {
    case Gen::E: return 2;
    case Gen::H: return 0;
    case Gen::F: return -2;
  }
  return 0;
}

constexpr std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::E: return "e";
    case Gen::H: return "h";
    case Gen::F: return "f";
  }
  return "?";
}

class WeightModule;

/// A restricted Lie subalgebra of sl2 spanned by a subset of {e, h, f}.
class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra(std::string name, PrimeField field, std::vector<Gen> basis);

  const std::string& name() const { return name_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.characteristic(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Gen>& basis() const { return basis_; }
  Gen generator(std::size_t i) const { return basis_[i]; }
  int weight(std::size_t i) const { return gen_weight(basis_[i]); }
  std::optional<std::size_t> index_of(Gen g) const;

  /// [b_i, b_j] in basis coordinates.
  const Vector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  /// b_i^{[p]} in basis coordinates.
  const Vector& p_power(std::size_t i) const { return p_powers_[i]; }

  /// ad(b_i): column j holds [b_i, b_j].
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

 private:
  std::string name_;
  PrimeField field_;
  std::vector<Gen> basis_;
  std::vector<Vector> brackets_;
  std::vector<Vector> p_powers_;
};

/// sl2 over F_p with [h,e] = 2e, [h,f] = -2f, [e,f] = h and
/// e^[p] = f^[p] = 0, h^[p] = h. Throws std::invalid_argument if p is not prime.
RestrictedLieAlgebra sl2(std::uint32_t p);
/// b = span{h, f}.
RestrictedLieAlgebra borel(std::uint32_t p);
/// u = span{f}.
RestrictedLieAlgebra nilradical(std::uint32_t p);

bool check_jacobi(const RestrictedLieAlgebra& a);
/// ad(x^[p]) = (ad x)^p for every basis vector x.
bool check_restricted(const RestrictedLieAlgebra& a);
bool check_weight_additive(const RestrictedLieAlgebra& a);

/// c = ef + fe + h^2/2 acting on M. Needs p >= 3 and all three actions.
Matrix casimir_operator(const WeightModule& m);

}  // namespace hhsl2
