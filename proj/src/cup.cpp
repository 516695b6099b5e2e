#include "hhsl2/cup.hpp"

#include <fmt/format.h>

#include <random>
#include <stdexcept>

#include "hhsl2/cohomology.hpp"
#include "hhsl2/linalg.hpp"

namespace hhsl2 {

namespace {

// Exponent of f in the boundary P_a -> P_{a-1}.
int boundary_exponent(int a, std::uint32_t p) { return periodic_exponent(a - 1, p); }

}  // namespace

PeriodicResolution::PeriodicResolution(PrimeField field, int max_degree, std::optional<std::uint64_t> seed)
    : field_(field), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("PeriodicResolution: negative max degree");
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  Vector d0(tensor_dim(0), 0);
  d0[tensor_index(0, 0, 0)] = 1;
  diagonal_.push_back(std::move(d0));
  for (int n = 1; n <= max_degree; ++n) {
    const Vector rhs = diagonal_f(n - 1).pow(static_cast<unsigned>(boundary_exponent(n, p()))).apply(diagonal_[n - 1]);
    const int target = -periodic_twist(n, p());
    std::vector<std::size_t> unknowns;
    for (std::size_t i = 0; i < tensor_dim(n); ++i)
      if (tensor_weight(n, i) == target) unknowns.push_back(i);
    const Matrix d = tensor_boundary(n);
    std::vector<std::size_t> rows(d.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    const Matrix d_sub = d.submatrix(rows, unknowns);
    auto x = solve(d_sub, rhs);
    if (!x) throw std::logic_error(fmt::format("PeriodicResolution: diagonal does not lift to degree {}", n));
    if (rng) {
      std::uniform_int_distribution<Scalar> coeff(0, p() - 1);
      for (const auto& k : kernel_basis(d_sub)) {
        const Scalar c = coeff(*rng);
        for (std::size_t i = 0; i < k.size(); ++i) (*x)[i] = field_.add((*x)[i], field_.mul(c, k[i]));
      }
    }
    Vector full(tensor_dim(n), 0);
    for (std::size_t i = 0; i < unknowns.size(); ++i) full[unknowns[i]] = (*x)[i];
    diagonal_.push_back(std::move(full));
  }
}

std::size_t PeriodicResolution::tensor_dim(int n) const { return static_cast<std::size_t>(n + 1) * p() * p(); }

std::size_t PeriodicResolution::tensor_index(int a, int s, int t) const {
  return (static_cast<std::size_t>(a) * p() + static_cast<std::size_t>(s)) * p() + static_cast<std::size_t>(t);
}

int PeriodicResolution::tensor_weight(int n, std::size_t index) const {
  const int t = static_cast<int>(index % p());
  const int s = static_cast<int>((index / p()) % p());
  const int a = static_cast<int>(index / (p() * p()));
  return -2 * s - 2 * t - periodic_twist(a, p()) - periodic_twist(n - a, p());
}

Matrix PeriodicResolution::tensor_boundary(int n) const {
  const int pp = static_cast<int>(p());
  Matrix d(field_, n == 0 ? 0 : tensor_dim(n - 1), tensor_dim(n));
  if (n == 0) return d;
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    for (int s = 0; s < pp; ++s)
      for (int t = 0; t < pp; ++t) {
        const std::size_t col = tensor_index(a, s, t);
        if (a >= 1 && s + boundary_exponent(a, p()) < pp)
          d.add_to(tensor_index(a - 1, s + boundary_exponent(a, p()), t), col, 1);
        if (b >= 1 && t + boundary_exponent(b, p()) < pp)
          d.add_to(tensor_index(a, s, t + boundary_exponent(b, p())), col, a % 2 == 0 ? 1 : field_.neg(1));
      }
  }
  return d;
}

Matrix PeriodicResolution::diagonal_f(int n) const {
  const int pp = static_cast<int>(p());
  Matrix m(field_, tensor_dim(n), tensor_dim(n));
  for (int a = 0; a <= n; ++a)
    for (int s = 0; s < pp; ++s)
      for (int t = 0; t < pp; ++t) {
        const std::size_t col = tensor_index(a, s, t);
        if (s + 1 < pp) m.add_to(tensor_index(a, s + 1, t), col, 1);
        if (t + 1 < pp) m.add_to(tensor_index(a, s, t + 1), col, 1);
      }
  return m;
}

const Vector& PeriodicResolution::diagonal(int n) const {
  if (n < 0 || n > max_degree_)
    throw std::out_of_range(fmt::format("PeriodicResolution: degree {} beyond lifted range {}", n, max_degree_));
  return diagonal_[n];
}

std::vector<std::string> PeriodicResolution::check_chain_map() const {
  std::vector<std::string> out;
  for (int n = 1; n <= max_degree_; ++n) {
    const Vector lhs = tensor_boundary(n).apply(diagonal_[n]);
    const Vector rhs = diagonal_f(n - 1).pow(static_cast<unsigned>(boundary_exponent(n, p()))).apply(diagonal_[n - 1]);
    if (lhs != rhs) out.push_back(fmt::format("diagonal is not a chain map in degree {}", n));
    for (std::size_t i = 0; i < diagonal_[n].size(); ++i)
      if (diagonal_[n][i] && tensor_weight(n, i) != -periodic_twist(n, p())) {
        out.push_back(fmt::format("diagonal is not weight-homogeneous in degree {}", n));
        break;
      }
  }
  return out;
}

CupProductEngine::CupProductEngine(const TruncatedAlgebra& algebra, int max_degree,
                                   std::optional<std::uint64_t> seed)
    : algebra_(algebra), resolution_(algebra.lie().field(), max_degree, seed) {
  const Matrix& f = algebra_.module().action(Gen::F);
  f_powers_.push_back(Matrix::identity(f.field(), f.rows()));
  for (std::uint32_t s = 1; s < algebra_.lie().p(); ++s) f_powers_.push_back(f_powers_.back() * f);
}

Vector CupProductEngine::differential(const Cochain& c) const {
  return f_powers_[periodic_exponent(c.degree, algebra_.lie().p())].apply(c.value);
}

bool CupProductEngine::is_cocycle(const Cochain& c) const {
  for (Scalar x : differential(c))
    if (x) return false;
  return true;
}

bool CupProductEngine::is_coboundary(const Cochain& c) const {
  bool zero = true;
  for (Scalar x : c.value) zero = zero && x == 0;
  if (zero) return true;
  if (c.degree == 0) return false;
  const Matrix& d = f_powers_[periodic_exponent(c.degree - 1, algebra_.lie().p())];
  return in_span(d.field(), d.rows(), image_basis(d), c.value);
}

bool CupProductEngine::same_class(const Cochain& a, const Cochain& b) const {
  if (a.degree != b.degree) return false;
  const PrimeField& F = algebra_.lie().field();
  Vector diff(a.value.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = F.sub(a.value[i], b.value[i]);
  return is_coboundary({a.degree, diff});
}

std::optional<int> CupProductEngine::weight(const Cochain& c) const {
  std::optional<int> w;
  for (std::size_t i = 0; i < c.value.size(); ++i) {
    if (!c.value[i]) continue;
    const int wi = algebra_.module().weights()[i];
    if (w && *w != wi) return std::nullopt;
    w = wi;
  }
  if (!w) return std::nullopt;
  return *w + periodic_twist(c.degree, algebra_.lie().p());
}

Cochain CupProductEngine::cup(const Cochain& a, const Cochain& b) const {
  if (!is_cocycle(a) || !is_cocycle(b)) throw std::invalid_argument("cup: arguments must be cocycles");
  const int n = a.degree + b.degree;
  const Vector& delta = resolution_.diagonal(n);
  const PrimeField& F = algebra_.lie().field();
  const int pp = static_cast<int>(algebra_.lie().p());
  std::vector<Vector> fa, fb;
  for (int s = 0; s < pp; ++s) {
    fa.push_back(f_powers_[s].apply(a.value));
    fb.push_back(f_powers_[s].apply(b.value));
  }
  const Scalar sign = (a.degree * b.degree) % 2 == 0 ? 1 : F.neg(1);
  Vector out(algebra_.dim(), 0);
  for (int s = 0; s < pp; ++s)
    for (int t = 0; t < pp; ++t) {
      const Scalar c = delta[resolution_.tensor_index(a.degree, s, t)];
      if (!c) continue;
      const Vector prod = algebra_.multiply(fa[s], fb[t]);
      const Scalar k = F.mul(c, sign);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(k, prod[i]));
    }
  return {n, std::move(out)};
}

Cochain CupProductEngine::unit() const { return {0, algebra_.unit()}; }

Cochain CupProductEngine::power(const Cochain& a, int k) const {
  Cochain out = unit();
  for (int i = 0; i < k; ++i) out = cup(out, a);
  return out;
}

std::vector<Cochain> CupProductEngine::cohomology_basis(int n, bool t1_only) const {
  const WeightModule& m = algebra_.module();
  const std::uint32_t p = m.p();
  const PrimeField& F = m.field();
  const Matrix& d_out = f_powers_[periodic_exponent(n, p)];
  std::vector<std::size_t> all_rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) all_rows[i] = i;
  std::vector<Cochain> out;
  for (int w : m.distinct_weights()) {
    if (t1_only && (w + periodic_twist(n, p)) % static_cast<int>(p) != 0) continue;
    const auto mid = m.weight_indices(w);
    std::vector<Vector> cocycles;
    for (const auto& k : kernel_basis(d_out.submatrix(all_rows, mid))) {
      Vector full(m.dim(), 0);
      for (std::size_t i = 0; i < mid.size(); ++i) full[mid[i]] = k[i];
      cocycles.push_back(std::move(full));
    }
    std::vector<Vector> boundaries;
    if (n > 0) {
      const Matrix& d_in = f_powers_[periodic_exponent(n - 1, p)];
      const auto src = m.weight_indices(w + 2 * periodic_exponent(n - 1, p));
      if (!src.empty()) boundaries = image_basis(d_in.submatrix(all_rows, src));
    }
    for (auto& v : complement_in(F, m.dim(), boundaries, cocycles)) out.push_back({n, std::move(v)});
  }
  return out;
}

UClass u_product(const TruncatedAlgebra& algebra, const UClass& a, const UClass& b) {
  const int degree = a.degree + b.degree;
  if (degree >= 2) return {degree, Vector(algebra.dim(), 0)};
  return {degree, algebra.multiply(a.rep, b.rep)};
}

bool u_class_is_zero(const TruncatedAlgebra& algebra, const UClass& c) {
  bool zero = true;
  for (Scalar x : c.rep) zero = zero && x == 0;
  if (zero || c.degree >= 2) return true;
  if (c.degree == 0) return false;
  const Matrix& f = algebra.module().action(Gen::F);
  return in_span(f.field(), f.rows(), image_basis(f), c.rep);
}

}  // namespace hhsl2
