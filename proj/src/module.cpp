#include "hhsl2/module.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hhsl2/linalg.hpp"

namespace hhsl2 {

WeightModule::WeightModule(PrimeField field, std::vector<std::string> labels, std::vector<int> weights)
    : field_(field), labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) throw std::invalid_argument("WeightModule: labels/weights size mismatch");
}

const Matrix& WeightModule::action(Gen g) const {
  const auto& a = actions_[static_cast<int>(g)];
  if (!a) throw std::invalid_argument(fmt::format("WeightModule: no action for generator {}", gen_name(g)));
  return *a;
}

void WeightModule::set_action(Gen g, Matrix m) {
  if (m.rows() != dim() || m.cols() != dim() || !(m.field() == field_))
    throw std::invalid_argument("WeightModule::set_action: matrix shape or field mismatch");
  actions_[static_cast<int>(g)] = std::move(m);
}

std::vector<Gen> WeightModule::generators() const {
  std::vector<Gen> out;
  for (Gen g : kAllGens)
    if (has_action(g)) out.push_back(g);
  return out;
}

std::vector<int> WeightModule::distinct_weights() const {
  std::set<int> s(weights_.begin(), weights_.end());
  return {s.rbegin(), s.rend()};
}

std::vector<std::size_t> WeightModule::weight_indices(int weight) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] == weight) out.push_back(i);
  return out;
}

std::vector<std::string> module_violations(const WeightModule& m) {
  std::vector<std::string> out;
  const PrimeField& F = m.field();
  for (Gen g : m.generators()) {
    const Matrix& x = m.action(g);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        if (x(r, c) && m.weights()[r] != m.weights()[c] + gen_weight(g)) {
          out.push_back(fmt::format("{} does not shift weight {} by {}", gen_name(g), m.weights()[c], gen_weight(g)));
          r = m.dim();
          break;
        }
    const Matrix xp = x.pow(m.p());
    const bool restricted_ok = g == Gen::H ? xp == x : xp.is_zero();
    if (!restricted_ok) out.push_back(fmt::format("{}^p != {}^[p]", gen_name(g), gen_name(g)));
  }
  if (m.has_action(Gen::H)) {
    const Matrix& h = m.action(Gen::H);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) {
        const Scalar want = r == c ? F.reduce(m.weights()[r]) : 0;
        if (h(r, c) != want) {
          out.push_back("h does not act by the weight mod p");
          r = m.dim();
          break;
        }
      }
  }
  auto commutator = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
  if (m.has_action(Gen::E) && m.has_action(Gen::F) && m.has_action(Gen::H) &&
      !(commutator(m.action(Gen::E), m.action(Gen::F)) == m.action(Gen::H)))
    out.push_back("[e,f] != h");
  if (m.has_action(Gen::H) && m.has_action(Gen::E) &&
      !(commutator(m.action(Gen::H), m.action(Gen::E)) == m.action(Gen::E).scaled(F.reduce(2))))
    out.push_back("[h,e] != 2e");
  if (m.has_action(Gen::H) && m.has_action(Gen::F) &&
      !(commutator(m.action(Gen::H), m.action(Gen::F)) == m.action(Gen::F).scaled(F.reduce(-2))))
    out.push_back("[h,f] != -2f");
  return out;
}

std::vector<Exponents> monomials(std::size_t vars, int degree, std::optional<int> cap) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == vars) {
      if (cap && remaining > *cap) return;
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    const int hi = cap ? std::min(remaining, *cap) : remaining;
    for (int e = hi; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::string monomial_label(const RestrictedLieAlgebra& a, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    out += gen_name(a.generator(i));
    if (exps[i] > 1) out += fmt::format("^{}", exps[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

int monomial_weight(const RestrictedLieAlgebra& a, const Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * a.weight(i);
  return w;
}

// Derivation action of the basis element `gen_index` of `a` on the span of
// `basis`, where `locate` maps an exponent vector to a basis index (or nullopt
// when the monomial is outside the space, i.e. truncated away).
template <class Locate>
Matrix derivation_matrix(const RestrictedLieAlgebra& a, std::size_t gen_index, const std::vector<Exponents>& basis,
                         std::size_t offset, std::size_t total, Locate locate) {
  const PrimeField& F = a.field();
  Matrix m(F, total, total);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Exponents& e = basis[col];
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      const Vector& image = a.bracket(gen_index, k);
      for (std::size_t l = 0; l < image.size(); ++l) {
        if (!image[l]) continue;
        Exponents target = e;
        --target[k];
        ++target[l];
        const auto row = locate(target);
        if (!row) continue;
        m.add_to(*row, offset + col, F.mul(F.reduce(e[k]), image[l]));
      }
    }
  }
  return m;
}

WeightModule symmetric_degree(const RestrictedLieAlgebra& a, int n, bool truncated) {
  const int cap = static_cast<int>(a.p()) - 1;
  auto basis = monomials(a.dim(), n, truncated ? std::optional<int>(cap) : std::nullopt);
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (const auto& e : basis) {
    labels.push_back(monomial_label(a, e));
    weights.push_back(monomial_weight(a, e));
  }
  WeightModule m(a.field(), std::move(labels), std::move(weights));
  std::map<Exponents, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);
  auto locate = [&](const Exponents& t) -> std::optional<std::size_t> {
    auto it = position.find(t);
    if (it == position.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    m.set_action(a.generator(i), derivation_matrix(a, i, basis, 0, basis.size(), locate));
  return m;
}

}  // namespace

WeightModule truncated_sym(const RestrictedLieAlgebra& a, int n) {
  if (n < 0 || n > truncated_top_degree(a))
    throw std::out_of_range(fmt::format("truncated_sym: degree {} outside [0, {}]", n, truncated_top_degree(a)));
  return symmetric_degree(a, n, true);
}

WeightModule sym_power(const RestrictedLieAlgebra& a, int n) {
  if (n < 0) throw std::out_of_range("sym_power: negative degree");
  return symmetric_degree(a, n, false);
}

TruncatedAlgebra::TruncatedAlgebra(const RestrictedLieAlgebra& a)
    : lie_(a), module_(a.field(), {}, {}) {
  const int cap = static_cast<int>(a.p()) - 1;
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (int n = 0; n <= top_degree(); ++n)
    for (auto& e : monomials(a.dim(), n, cap)) {
      labels.push_back(monomial_label(a, e));
      weights.push_back(monomial_weight(a, e));
      degrees_.push_back(n);
      exps_.push_back(std::move(e));
    }
  module_ = WeightModule(a.field(), std::move(labels), std::move(weights));
  std::size_t codes = 1;
  for (std::size_t k = 0; k < a.dim(); ++k) codes *= a.p();
  code_to_index_.assign(codes, -1);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::size_t code = 0;
    for (int x : exps_[i]) code = code * a.p() + static_cast<std::size_t>(x);
    code_to_index_[code] = static_cast<std::int32_t>(i);
  }
  auto locate = [this](const Exponents& t) { return index_of(t); };
  for (std::size_t i = 0; i < a.dim(); ++i)
    module_.set_action(a.generator(i), derivation_matrix(a, i, exps_, 0, exps_.size(), locate));
  const std::size_t n = exps_.size();
  product_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents sum = exps_[i];
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += exps_[j][k];
      if (auto idx = index_of(sum)) product_[i * n + j] = static_cast<std::int32_t>(*idx);
    }
}

std::optional<std::size_t> TruncatedAlgebra::index_of(const Exponents& e) const {
  const int cap = static_cast<int>(lie_.p()) - 1;
  if (e.size() != lie_.dim()) return std::nullopt;
  std::size_t code = 0;
  for (int x : e) {
    if (x < 0 || x > cap) return std::nullopt;
    code = code * lie_.p() + static_cast<std::size_t>(x);
  }
  const auto idx = code_to_index_[code];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> TruncatedAlgebra::degree_indices(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == n) out.push_back(i);
  return out;
}

Vector TruncatedAlgebra::multiply(const Vector& x, const Vector& y) const {
  const PrimeField& F = lie_.field();
  const std::size_t n = dim();
  Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      const auto k = product_[i * n + j];
      if (k >= 0) out[k] = F.add(out[k], F.mul(x[i], y[j]));
    }
  }
  return out;
}

Vector TruncatedAlgebra::unit() const {
  Vector u(dim(), 0);
  u[0] = 1;
  return u;
}

Vector TruncatedAlgebra::power(const Vector& x, int k) const {
  Vector out = unit();
  for (int i = 0; i < k; ++i) out = multiply(out, x);
  return out;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tensor: field mismatch");
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
      weights.push_back(a.weights()[i] + b.weights()[j]);
    }
  WeightModule out(a.field(), std::move(labels), std::move(weights));
  const Matrix ia = Matrix::identity(a.field(), a.dim());
  const Matrix ib = Matrix::identity(b.field(), b.dim());
  for (Gen g : kAllGens)
    if (a.has_action(g) && b.has_action(g))
      out.set_action(g, kronecker(a.action(g), ib) + kronecker(ia, b.action(g)));
  return out;
}

WeightModule dual(const WeightModule& m) {
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    labels.push_back(m.labels()[i] + "*");
    weights.push_back(-m.weights()[i]);
  }
  WeightModule out(m.field(), std::move(labels), std::move(weights));
  for (Gen g : m.generators()) out.set_action(g, m.action(g).transpose().scaled(m.field().neg(1)));
  return out;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: field mismatch");
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  auto weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  WeightModule out(a.field(), std::move(labels), std::move(weights));
  for (Gen g : kAllGens) {
    if (!a.has_action(g) || !b.has_action(g)) continue;
    Matrix m(a.field(), out.dim(), out.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) m.set(r, c, a.action(g)(r, c));
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) m.set(a.dim() + r, a.dim() + c, b.action(g)(r, c));
    out.set_action(g, std::move(m));
  }
  return out;
}

WeightModule frobenius_twist(const WeightModule& m) {
  std::vector<int> weights;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    weights.push_back(m.weights()[i] * static_cast<int>(m.p()));
    labels.push_back(m.labels()[i] + "^(1)");
  }
  WeightModule out(m.field(), std::move(labels), std::move(weights));
  for (Gen g : kAllGens) out.set_action(g, Matrix(m.field(), m.dim(), m.dim()));
  return out;
}

WeightModule frobenius_untwist_weights(const WeightModule& m) {
  const int p = static_cast<int>(m.p());
  std::vector<int> weights;
  for (int w : m.weights()) {
    if (w % p != 0) throw std::invalid_argument(fmt::format("untwist: weight {} not divisible by {}", w, p));
    weights.push_back(w / p);
  }
  for (Gen g : m.generators())
    if (!m.action(g).is_zero())
      throw std::invalid_argument(fmt::format("untwist: generator {} acts nontrivially", gen_name(g)));
  return WeightModule(m.field(), m.labels(), std::move(weights));
}

WeightModule weight_line(PrimeField field, int weight, const std::vector<Gen>& gens) {
  WeightModule m(field, {fmt::format("q^{}", weight)}, {weight});
  for (Gen g : gens) {
    Matrix a(field, 1, 1);
    if (g == Gen::H) a.set(0, 0, field.reduce(weight));
    m.set_action(g, std::move(a));
  }
  return m;
}

WeightModule trivial_module(std::uint32_t p) { return weight_line(PrimeField(p), 0); }

WeightModule nabla_model(int lambda, std::uint32_t p) {
  if (lambda < 0) throw std::invalid_argument("nabla_model: negative highest weight");
  const PrimeField F(p);
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (int a = lambda; a >= 0; --a) {
    labels.push_back(fmt::format("x^{}y^{}", a, lambda - a));
    weights.push_back(2 * a - lambda);
  }
  const std::size_t n = weights.size();
  WeightModule m(F, std::move(labels), weights);
  Matrix e(F, n, n), f(F, n, n), h(F, n, n);
  // index i <-> x^(lambda-i) y^i
  for (std::size_t i = 0; i < n; ++i) {
    const int a = lambda - static_cast<int>(i);
    const int b = static_cast<int>(i);
    h.set(i, i, F.reduce(weights[i]));
    if (b > 0) e.set(i - 1, i, F.reduce(b));
    if (a > 0) f.set(i + 1, i, F.reduce(a));
  }
  m.set_action(Gen::E, std::move(e));
  m.set_action(Gen::H, std::move(h));
  m.set_action(Gen::F, std::move(f));
  return m;
}

WeightModule delta_model(int lambda, std::uint32_t p) { return dual(nabla_model(lambda, p)); }

WeightModule simple_model(int lambda, std::uint32_t p) {
  if (lambda < 0) throw std::invalid_argument("simple_model: negative highest weight");
  const int pp = static_cast<int>(p);
  if (lambda < pp) return nabla_model(lambda, p);
  return tensor(nabla_model(lambda % pp, p), frobenius_twist(simple_model(lambda / pp, p)));
}

WeightModule top_tilting_model(std::uint32_t p) {
  const int top = static_cast<int>(p) - 1;
  return block_projection_principal(tensor(nabla_model(top, p), nabla_model(top, p)));
}

namespace {

// Coordinates Y with B Y = X B, or nullopt if the span of B is not X-stable.
std::optional<Matrix> restrict_to_span(const Matrix& basis, const Matrix& image) {
  const PrimeField& F = basis.field();
  const std::size_t n = basis.rows(), k = basis.cols();
  Matrix aug(F, n, k + image.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug.set(r, c, basis(r, c));
    for (std::size_t c = 0; c < image.cols(); ++c) aug.set(r, k + c, image(r, c));
  }
  const Echelon ech = row_reduce(std::move(aug));
  std::size_t basis_pivots = 0;
  for (auto c : ech.pivot_cols) {
    if (c >= k) return std::nullopt;
    ++basis_pivots;
  }
  if (basis_pivots != k) throw std::invalid_argument("submodule: basis vectors are linearly dependent");
  Matrix y(F, k, image.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < image.cols(); ++c) y.set(r, c, ech.reduced(r, k + c));
  return y;
}

}  // namespace

WeightModule submodule(const WeightModule& m, const std::vector<Vector>& basis, const std::vector<int>& weights) {
  if (basis.size() != weights.size()) throw std::invalid_argument("submodule: basis/weights size mismatch");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(fmt::format("v{}", i));
  WeightModule out(m.field(), std::move(labels), weights);
  if (basis.empty()) {
    for (Gen g : m.generators()) out.set_action(g, Matrix(m.field(), 0, 0));
    return out;
  }
  const Matrix b = Matrix::from_columns(m.field(), m.dim(), basis);
  for (Gen g : m.generators()) {
    auto y = restrict_to_span(b, m.action(g) * b);
    if (!y) throw std::invalid_argument(fmt::format("submodule: span is not stable under {}", gen_name(g)));
    out.set_action(g, std::move(*y));
  }
  return out;
}

namespace {

struct WeightedBasis {
  std::vector<Vector> vectors;
  std::vector<int> weights;
};

std::vector<std::pair<Scalar, WeightedBasis>> casimir_eigenbases(const WeightModule& m) {
  const Matrix c = casimir_operator(m);
  const std::uint32_t p = m.p();
  std::vector<std::pair<Scalar, WeightedBasis>> out;
  for (Scalar lambda = 0; lambda < p; ++lambda) out.push_back({lambda, {}});
  std::size_t found = 0;
  for (int w : m.distinct_weights()) {
    const auto idx = m.weight_indices(w);
    const Matrix block = c.submatrix(idx, idx);
    for (Scalar lambda = 0; lambda < p; ++lambda) {
      for (const auto& v : generalized_eigenspace(block, lambda)) {
        Vector full(m.dim(), 0);
        for (std::size_t i = 0; i < idx.size(); ++i) full[idx[i]] = v[i];
        out[lambda].second.vectors.push_back(std::move(full));
        out[lambda].second.weights.push_back(w);
        ++found;
      }
    }
  }
  if (found != m.dim()) throw std::domain_error("casimir_blocks: Casimir operator does not split over F_p");
  return out;
}

}  // namespace

std::vector<BlockPiece> casimir_blocks(const WeightModule& m) {
  std::vector<BlockPiece> out;
  for (auto& [lambda, basis] : casimir_eigenbases(m))
    if (!basis.vectors.empty()) out.push_back({lambda, submodule(m, basis.vectors, basis.weights)});
  return out;
}

WeightModule block_projection_principal(const WeightModule& m) {
  if (m.p() == 2) return m;
  auto bases = casimir_eigenbases(m);
  return submodule(m, bases[0].second.vectors, bases[0].second.weights);
}

Matrix principal_block_projector(const WeightModule& m) {
  const PrimeField& F = m.field();
  if (m.p() == 2) return Matrix::identity(F, m.dim());
  auto bases = casimir_eigenbases(m);
  std::vector<Vector> all;
  const std::size_t principal = bases[0].second.vectors.size();
  for (auto& [lambda, b] : bases) all.insert(all.end(), b.vectors.begin(), b.vectors.end());
  const std::size_t n = m.dim();
  if (n == 0) return Matrix(F, 0, 0);
  // Columns of `change` are the adapted basis; P = change * diag(1..1,0..0) * change^-1.
  const Matrix change = Matrix::from_columns(F, n, all);
  Matrix aug(F, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, change(r, c));
    aug.set(r, n + r, 1);
  }
  const Echelon ech = row_reduce(std::move(aug));
  Matrix inverse(F, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inverse.set(r, c, ech.reduced(r, n + c));
  Matrix keep(F, n, n);
  for (std::size_t i = 0; i < principal; ++i) keep.set(i, i, 1);
  return change * keep * inverse;
}

std::size_t module_hom_dim(const WeightModule& m, const WeightModule& n) {
  if (!(m.field() == n.field())) throw std::invalid_argument("module_hom_dim: field mismatch");
  const PrimeField& F = m.field();
  // Unknowns: Phi(r, c) with weight(n_r) == weight(m_c).
  std::vector<std::int64_t> unknown(n.dim() * m.dim(), -1);
  std::size_t count = 0;
  for (std::size_t r = 0; r < n.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (n.weights()[r] == m.weights()[c]) unknown[r * m.dim() + c] = static_cast<std::int64_t>(count++);
  if (count == 0) return 0;
  std::vector<Vector> equations;
  for (Gen g : kAllGens) {
    if (!m.has_action(g) || !n.has_action(g)) continue;
    const Matrix& xm = m.action(g);
    const Matrix& xn = n.action(g);
    // (Phi xm - xn Phi)(r, c) = 0
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) {
        if (n.weights()[r] != m.weights()[c] + gen_weight(g)) continue;
        Vector row(count, 0);
        bool any = false;
        for (std::size_t k = 0; k < m.dim(); ++k) {
          const auto u = unknown[r * m.dim() + k];
          if (u >= 0 && xm(k, c)) {
            row[u] = F.add(row[u], xm(k, c));
            any = true;
          }
        }
        for (std::size_t k = 0; k < n.dim(); ++k) {
          const auto u = unknown[k * m.dim() + c];
          if (u >= 0 && xn(r, k)) {
            row[u] = F.sub(row[u], xn(r, k));
            any = true;
          }
        }
        if (any) equations.push_back(std::move(row));
      }
  }
  if (equations.empty()) return count;
  Matrix system(F, equations.size(), count);
  for (std::size_t i = 0; i < equations.size(); ++i)
    for (std::size_t j = 0; j < count; ++j) system.set(i, j, equations[i][j]);
  return count - rank(system);
}

std::size_t duality_pairing_rank(const RestrictedLieAlgebra& a, int i) {
  const int top = truncated_top_degree(a);
  if (i < 0 || i > top) throw std::out_of_range("duality_pairing_rank: degree outside [0, N]");
  const int cap = static_cast<int>(a.p()) - 1;
  const auto left = monomials(a.dim(), i, cap);
  const auto right = monomials(a.dim(), top - i, cap);
  Matrix pairing(a.field(), left.size(), right.size());
  for (std::size_t r = 0; r < left.size(); ++r)
    for (std::size_t c = 0; c < right.size(); ++c) {
      bool top_monomial = true;
      for (std::size_t k = 0; k < a.dim(); ++k) top_monomial = top_monomial && left[r][k] + right[c][k] == cap;
      if (top_monomial) pairing.set(r, c, 1);
    }
  return rank(pairing);
}

WeightModule g1_invariants(const WeightModule& m) {
  const auto gens = m.generators();
  std::vector<Vector> basis;
  std::vector<int> weights;
  for (int w : m.distinct_weights()) {
    const auto idx = m.weight_indices(w);
    std::vector<std::size_t> all_rows(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) all_rows[i] = i;
    Matrix stacked(m.field(), gens.size() * m.dim(), idx.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Matrix block = m.action(gens[gi]).submatrix(all_rows, idx);
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) stacked.set(gi * m.dim() + r, c, block(r, c));
    }
    for (const auto& v : kernel_basis(stacked)) {
      Vector full(m.dim(), 0);
      for (std::size_t i = 0; i < idx.size(); ++i) full[idx[i]] = v[i];
      basis.push_back(std::move(full));
      weights.push_back(w);
    }
  }
  return submodule(m, basis, weights);
}

}  // namespace hhsl2
