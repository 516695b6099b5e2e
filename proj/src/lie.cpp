#include "hhsl2/lie.hpp"

#include <stdexcept>

#include "hhsl2/module.hpp"

namespace hhsl2 {

namespace {

// Structure constants of sl2 on {e, h, f}: [x, y] as integer coefficients.
std::array<long long, 3> sl2_bracket(Gen x, Gen y) {
  auto idx = [](Gen g) { return static_cast<int>(g); };
  std::array<long long, 3> out{0, 0, 0};
  if (x == y) return out;
  const int a = idx(x), b = idx(y);
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  auto set = [&](int sign, Gen target, long long coeff) { out[idx(target)] = sign * coeff; };
  if (a == 1 && b == 0) set(1, Gen::E, 2);
  if (a == 0 && b == 1) set(-1, Gen::E, 2);
  if (a == 1 && b == 2) set(1, Gen::F, -2);
  if (a == 2 && b == 1) set(-1, Gen::F, -2);
  if (a == 0 && b == 2) set(1, Gen::H, 1);
  if (a == 2 && b == 0) set(-1, Gen::H, 1);
  return out;
}

}  // namespace

RestrictedLieAlgebra::RestrictedLieAlgebra(std::string name, PrimeField field, std::vector<Gen> basis)
    : name_(std::move(name)), field_(field), basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  brackets_.assign(n * n, Vector(n, 0));
  p_powers_.assign(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto br = sl2_bracket(basis_[i], basis_[j]);
      for (Gen g : kAllGens) {
        const long long c = br[static_cast<int>(g)];
        if (c == 0) continue;
        const auto k = index_of(g);
        if (!k) throw std::invalid_argument("RestrictedLieAlgebra: basis is not closed under the bracket");
        brackets_[i * n + j][*k] = field_.reduce(c);
      }
    }
    if (basis_[i] == Gen::H) p_powers_[i][i] = 1;
  }
}

std::optional<std::size_t> RestrictedLieAlgebra::index_of(Gen g) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == g) return i;
  return std::nullopt;
}

Matrix RestrictedLieAlgebra::ad(std::size_t i) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m.set(k, j, bracket(i, j)[k]);
  return m;
}

Matrix RestrictedLieAlgebra::ad(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i]) m = m + ad(i).scaled(x[i]);
  return m;
}

RestrictedLieAlgebra sl2(std::uint32_t p) {
  return RestrictedLieAlgebra("sl2", PrimeField(p), {Gen::E, Gen::H, Gen::F});
}

RestrictedLieAlgebra borel(std::uint32_t p) {
  return RestrictedLieAlgebra("b", PrimeField(p), {Gen::H, Gen::F});
}

RestrictedLieAlgebra nilradical(std::uint32_t p) {
  return RestrictedLieAlgebra("u", PrimeField(p), {Gen::F});
}

bool check_jacobi(const RestrictedLieAlgebra& a) {
  const std::size_t n = a.dim();
  // Jacobi in operator form: ad[x,y] = [ad x, ad y].
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix defect = a.ad(i) * a.ad(j) - a.ad(j) * a.ad(i) - a.ad(a.bracket(i, j));
      if (!defect.is_zero()) return false;
    }
  // Antisymmetry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector s(n);
      for (std::size_t k = 0; k < n; ++k) s[k] = a.field().add(a.bracket(i, j)[k], a.bracket(j, i)[k]);
      for (auto x : s)
        if (x) return false;
    }
  return true;
}

bool check_restricted(const RestrictedLieAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.ad(i).pow(a.p()) == a.ad(a.p_power(i)))) return false;
  return true;
}

bool check_weight_additive(const RestrictedLieAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.bracket(i, j)[k] && a.weight(k) != a.weight(i) + a.weight(j)) return false;
  return true;
}

Matrix casimir_operator(const WeightModule& m) {
  const PrimeField& F = m.field();
  if (F.characteristic() < 3) throw std::domain_error("casimir_operator: needs p >= 3");
  if (!m.has_action(Gen::E) || !m.has_action(Gen::F) || !m.has_action(Gen::H))
    throw std::invalid_argument("casimir_operator: module lacks a full sl2 action");
  const Matrix& e = m.action(Gen::E);
  const Matrix& f = m.action(Gen::F);
  const Matrix& h = m.action(Gen::H);
  return e * f + f * e + (h * h).scaled(F.inv(2));
}

}  // namespace hhsl2
