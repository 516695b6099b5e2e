#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhsl2/character.hpp"
#include "hhsl2/lie.hpp"
#include "hhsl2/matrix.hpp"

namespace hhsl2 {

/// Finite-dimensional module with a weight per basis vector and one action
/// matrix per available generator of sl2.
class WeightModule {
 public:
  WeightModule(PrimeField field, std::vector<std::string> labels, std::vector<int> weights);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.characteristic(); }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_action(Gen g) const { return actions_[static_cast<int>(g)].has_value(); }
  const Matrix& action(Gen g) const;
  void set_action(Gen g, Matrix m);
  void clear_action(Gen g) { actions_[static_cast<int>(g)].reset(); }
  std::vector<Gen> generators() const;

  Character character() const { return Character::from_weights(weights_); }
  std::vector<int> distinct_weights() const;
  std::vector<std::size_t> weight_indices(int weight) const;

 private:
  PrimeField field_;
  std::vector<std::string> labels_;
  std::vector<int> weights_;
  std::array<std::optional<Matrix>, 3> actions_;
};

/// Violations of the module invariants (weight compatibility, bracket
/// compatibility, restricted compatibility, h acting by weight mod p).
/// Empty when the module is valid.
std::vector<std::string> module_violations(const WeightModule& m);
inline bool is_valid_module(const WeightModule& m) { return module_violations(m).empty(); }

using Exponents = std::vector<int>;

/// Monomials of the given degree in `vars` variables, lexicographically
/// decreasing (first variable most significant). `cap` bounds every exponent.
std::vector<Exponents> monomials(std::size_t vars, int degree, std::optional<int> cap);

std::string monomial_label(const RestrictedLieAlgebra& a, const Exponents& exps);

/// Degree-n part of the truncated symmetric algebra of `a` (p-th powers set to
/// zero) with the adjoint action by derivations. 0 <= n <= (p-1) dim a.
WeightModule truncated_sym(const RestrictedLieAlgebra& a, int n);
/// Degree-n part of the full symmetric algebra with the adjoint action.
WeightModule sym_power(const RestrictedLieAlgebra& a, int n);

inline int truncated_top_degree(const RestrictedLieAlgebra& a) {
  return static_cast<int>((a.p() - 1) * a.dim());
}

/// The whole truncated symmetric algebra of `a` as a module algebra. Monomials
/// multiply to a monomial or to zero.
class TruncatedAlgebra {
 public:
  explicit TruncatedAlgebra(const RestrictedLieAlgebra& a);

  const RestrictedLieAlgebra& lie() const { return lie_; }
  const WeightModule& module() const { return module_; }
  std::size_t dim() const { return module_.dim(); }
  int top_degree() const { return truncated_top_degree(lie_); }
  int degree_of(std::size_t basis_index) const { return degrees_[basis_index]; }
  const Exponents& exponents(std::size_t basis_index) const { return exps_[basis_index]; }
  std::optional<std::size_t> index_of(const Exponents& e) const;
  /// Basis indices of the degree-n part, in the order used by truncated_sym.
  std::vector<std::size_t> degree_indices(int n) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector power(const Vector& x, int k) const;
  Vector unit() const;

 private:
  RestrictedLieAlgebra lie_;
  WeightModule module_;
  std::vector<Exponents> exps_;
  std::vector<int> degrees_;
  std::vector<std::int32_t> code_to_index_;  // mixed-radix exponent code -> basis index
  std::vector<std::int32_t> product_;        // dim x dim table, -1 for zero
};

WeightModule tensor(const WeightModule& a, const WeightModule& b);
WeightModule dual(const WeightModule& m);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);
/// Weights multiplied by p, all infinitesimal actions zero.
WeightModule frobenius_twist(const WeightModule& m);
/// Inverse of the twist on weights. Requires every weight divisible by p and
/// every action zero; the result carries weights only.
WeightModule frobenius_untwist_weights(const WeightModule& m);

/// One-dimensional module of the given weight with zero action for `gens`.
WeightModule weight_line(PrimeField field, int weight, const std::vector<Gen>& gens = {Gen::E, Gen::H, Gen::F});
WeightModule trivial_module(std::uint32_t p);
/// S^lambda(V) for the natural module V; this is nabla(lambda).
WeightModule nabla_model(int lambda, std::uint32_t p);
WeightModule delta_model(int lambda, std::uint32_t p);
/// L(lambda) via Steinberg's tensor product theorem on nabla models of the digits.
WeightModule simple_model(int lambda, std::uint32_t p);
/// Principal-block part of L(p-1) (x) L(p-1), a model of T(2p-2).
WeightModule top_tilting_model(std::uint32_t p);

/// Restriction of m to the span of `basis`, which must be stable under every
/// action (std::invalid_argument otherwise). Basis vectors must be weight vectors.
WeightModule submodule(const WeightModule& m, const std::vector<Vector>& basis, const std::vector<int>& weights);

struct BlockPiece {
  Scalar casimir_eigenvalue;
  WeightModule module;
};

/// Generalized eigenspaces of the Casimir operator, computed weight space by
/// weight space. Only for p >= 3.
std::vector<BlockPiece> casimir_blocks(const WeightModule& m);

/// Generalized 0-eigenspace of the Casimir operator; identity for p = 2.
WeightModule block_projection_principal(const WeightModule& m);

/// Projection matrix onto the principal block along the other Casimir blocks.
Matrix principal_block_projector(const WeightModule& m);

/// dim of the weight-preserving maps commuting with every shared generator.
std::size_t module_hom_dim(const WeightModule& m, const WeightModule& n);

/// Rank of the multiplication pairing S^i x S^(N-i) -> S^N.
std::size_t duality_pairing_rank(const RestrictedLieAlgebra& a, int i);

/// Joint kernel of all actions.
WeightModule g1_invariants(const WeightModule& m);

}  // namespace hhsl2
