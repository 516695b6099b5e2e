#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhsl2/module.hpp"

namespace hhsl2 {

/// The 2-periodic free resolution P of k over A = k[f]/f^p, with generators
/// g_n of weight -tw(n) and boundary g_n -> f^{e} g_{n-1}, together with a
/// diagonal approximation P -> P (x) P lifted degree by degree.
class PeriodicResolution {
 public:
  /// A seed adds a random cycle to every lifted component, giving a different
  /// but homotopic diagonal.
  PeriodicResolution(PrimeField field, int max_degree, std::optional<std::uint64_t> perturbation_seed = std::nullopt);

  std::uint32_t p() const { return field_.characteristic(); }
  int max_degree() const { return max_degree_; }

  /// Basis of (P (x) P)_n: f^s g_a (x) f^t g_{n-a}, index (a p + s) p + t.
  std::size_t tensor_dim(int n) const;
  std::size_t tensor_index(int a, int s, int t) const;
  int tensor_weight(int n, std::size_t index) const;

  /// Boundary (P (x) P)_n -> (P (x) P)_{n-1} with the Koszul sign on the right factor.
  Matrix tensor_boundary(int n) const;
  /// Diagonal action f (x) 1 + 1 (x) f on (P (x) P)_n.
  Matrix diagonal_f(int n) const;

  /// Image of g_n under the diagonal approximation.
  const Vector& diagonal(int n) const;

  /// Chain-map identities and weight homogeneity of the lifted diagonal.
  std::vector<std::string> check_chain_map() const;

 private:
  PrimeField field_;
  int max_degree_;
  std::vector<Vector> diagonal_;
};

/// An n-cochain Hom_A(P_n, M) = M, stored as the image of g_n.
struct Cochain {
  int degree;
  Vector value;
};

/// Cochains of U_1 with coefficients in a truncated symmetric algebra, with the
/// cup product induced by the diagonal approximation and the algebra product.
class CupProductEngine {
 public:
  CupProductEngine(const TruncatedAlgebra& algebra, int max_degree,
                   std::optional<std::uint64_t> perturbation_seed = std::nullopt);

  const TruncatedAlgebra& algebra() const { return algebra_; }
  const PeriodicResolution& resolution() const { return resolution_; }

  Vector differential(const Cochain& c) const;
  bool is_cocycle(const Cochain& c) const;
  bool is_coboundary(const Cochain& c) const;
  bool same_class(const Cochain& a, const Cochain& b) const;
  /// Class weight mu + tw(n) when the value is homogeneous of module weight mu.
  std::optional<int> weight(const Cochain& c) const;

  /// Throws std::invalid_argument on non-cocycles or degrees beyond max_degree.
  Cochain cup(const Cochain& a, const Cochain& b) const;
  Cochain power(const Cochain& a, int k) const;
  Cochain unit() const;

  /// Cocycles whose classes form a basis of H^n(U_1, S), weight by weight;
  /// `t1_only` keeps the weights divisible by p (the B_1 classes).
  std::vector<Cochain> cohomology_basis(int n, bool t1_only) const;

 private:
  TruncatedAlgebra algebra_;
  PeriodicResolution resolution_;
  std::vector<Matrix> f_powers_;
};

/// A class of H^j(u, S) for u = span{f}: j = 0 an f-invariant, j = 1 an element
/// modulo the image of f. Degrees >= 2 vanish since dim u = 1.
struct UClass {
  int degree;
  Vector rep;
};

UClass u_product(const TruncatedAlgebra& algebra, const UClass& a, const UClass& b);
bool u_class_is_zero(const TruncatedAlgebra& algebra, const UClass& c);

}  // namespace hhsl2
