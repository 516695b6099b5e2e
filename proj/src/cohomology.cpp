#include "hhsl2/cohomology.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "hhsl2/linalg.hpp"

namespace hhsl2 {

int periodic_twist(int n, std::uint32_t p) {
  const int pp = static_cast<int>(p);
  return n % 2 == 0 ? pp * n : pp * (n - 1) + 2;
}

int periodic_exponent(int n, std::uint32_t p) { return n % 2 == 0 ? 1 : static_cast<int>(p) - 1; }

Matrix periodic_differential(const WeightModule& m, int n) {
  return m.action(Gen::F).pow(static_cast<unsigned>(periodic_exponent(n, m.p())));
}

std::vector<std::string> check_periodic_complex(const WeightModule& m) {
  std::vector<std::string> out;
  if (!m.has_action(Gen::F)) return {"module has no f-action"};
  if (!m.action(Gen::F).pow(m.p()).is_zero()) out.push_back("f^p != 0");
  for (int n = 0; n < 4; ++n) {
    const Matrix d = periodic_differential(m, n);
    if (!(periodic_differential(m, n + 1) * d).is_zero())
      out.push_back(fmt::format("d^{} d^{} != 0", n + 1, n));
    const int shift = periodic_twist(n + 1, m.p()) - periodic_twist(n, m.p());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        if (d(r, c) && m.weights()[r] + shift != m.weights()[c]) {
          out.push_back(fmt::format("twisted d^{} is not weight-preserving", n));
          r = m.dim();
          break;
        }
  }
  return out;
}

namespace {

// dim of (ker a / im b) restricted to the weight-w part of the middle space,
// where a leaves weight w shifted by `a_shift` and b arrives from weight w - b_shift.
std::size_t weight_subquotient(const WeightModule& m, const Matrix& a, const Matrix& b, int w, int a_shift,
                               int b_shift) {
  const auto mid = m.weight_indices(w);
  if (mid.empty()) return 0;
  const auto tgt = m.weight_indices(w + a_shift);
  const auto src = m.weight_indices(w - b_shift);
  const Matrix a_sub = a.submatrix(tgt, mid);
  const Matrix b_sub = b.submatrix(mid, src);
  return mid.size() - (tgt.empty() ? 0 : rank(a_sub)) - (src.empty() ? 0 : rank(b_sub));
}

}  // namespace

Character u_cohomology(const WeightModule& m, int j) {
  Character out;
  if (j < 0 || j >= 2) return out;
  const Matrix& f = m.action(Gen::F);
  const Matrix zero(m.field(), m.dim(), m.dim());
  for (int w : m.distinct_weights()) {
    if (j == 0) {
      out.add(w, static_cast<long long>(weight_subquotient(m, f, zero, w, -2, 0)));
    } else {
      out.add(w + 2, static_cast<long long>(weight_subquotient(m, zero, f, w, 0, -2)));
    }
  }
  return out;
}

Character u1_cohomology(const WeightModule& m, int n) {
  Character out;
  if (n < 0) return out;
  const std::uint32_t p = m.p();
  const Matrix& f = m.action(Gen::F);
  if (!f.pow(p).is_zero()) throw std::invalid_argument("u1_cohomology: f^p != 0 on the module");
  const Matrix d_out = periodic_differential(m, n);
  const int out_shift = -2 * periodic_exponent(n, p);
  const Matrix d_in = n == 0 ? Matrix(m.field(), m.dim(), m.dim()) : periodic_differential(m, n - 1);
  const int in_shift = n == 0 ? 0 : -2 * periodic_exponent(n - 1, p);
  const int tw = periodic_twist(n, p);
  for (int w : m.distinct_weights())
    out.add(w + tw, static_cast<long long>(weight_subquotient(m, d_out, d_in, w, out_shift, in_shift)));
  return out;
}

Character t1_invariants(const Character& c, std::uint32_t p) {
  const int pp = static_cast<int>(p);
  return c.filtered([pp](int w) { return w % pp == 0; });
}

Character b1_cohomology(const WeightModule& m, int n) { return t1_invariants(u1_cohomology(m, n), m.p()); }

Character e2_page(const WeightModule& m, int i, int j) {
  if (m.p() == 2) throw std::domain_error("e2_page: the two-row E_2 description needs p >= 3");
  if (i < 0 || j < 0 || j >= 2) return {};
  return t1_invariants(u_cohomology(m, j), m.p()).shifted(2 * static_cast<int>(m.p()) * i);
}

std::vector<CollapseRow> collapse_check(const WeightModule& m, int maxdeg) {
  std::vector<CollapseRow> rows;
  for (int n = 0; n <= maxdeg; ++n) {
    const long long e2 = e2_page(m, n / 2, n % 2).dimension();
    const long long actual = b1_cohomology(m, n).dimension();
    rows.push_back({n, e2, actual, e2 - actual});
  }
  return rows;
}

std::vector<long long> ip_expected_dims(std::uint32_t p, int maxdeg) {
  if (p < 3) throw std::domain_error("ip_expected_dims: needs p >= 3");
  const int half = (static_cast<int>(p) - 1) / 2;
  std::vector<long long> dims(maxdeg + 1, 0);
  // S^a(u*)^(1) has degree 2a, x has degree 0, the f^{p-1} factor sits in u-degree 1.
  for (int a = 0; 2 * a <= maxdeg; ++a) {
    for (int i = 0; i <= half; ++i)
      if (2 * a + 1 <= maxdeg) ++dims[2 * a + 1];
    if (a >= 1)
      for (int j = half; j <= static_cast<int>(p) - 1; ++j) ++dims[2 * a];
  }
  return dims;
}

InducedCharacter g1_cohomology_char(const WeightModule& m, int n) {
  const Character b1 = b1_cohomology(m, n);
  const auto untwisted = b1.divided_weights(static_cast<int>(m.p()));
  if (!untwisted) throw std::logic_error("g1_cohomology_char: B1-cohomology weight not divisible by p");
  return euler_induction(*untwisted);
}

std::string target_name(Target t) {
  switch (t) {
    case Target::G1: return "g1";
    case Target::B1: return "b1";
    case Target::U1: return "u1";
  }
  return "?";
}

Character CohomologyTable::total(int degree) const {
  Character c;
  for (const auto& e : entries)
    if (e.degree == degree) c += e.character;
  return c;
}

bool CohomologyTable::total_exact(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree && !e.exact) return false;
  return true;
}

const CohomologyEntry& CohomologyTable::at(int n, int degree) const {
  for (const auto& e : entries)
    if (e.n == n && e.degree == degree) return e;
  throw std::out_of_range(fmt::format("CohomologyTable: no entry for n={}, degree={}", n, degree));
}

int table_row_count(Target t, std::uint32_t p) {
  switch (t) {
    case Target::G1: return truncated_top_degree(sl2(p)) + 1;
    case Target::B1: return truncated_top_degree(borel(p)) + 1;
    case Target::U1: return truncated_top_degree(nilradical(p)) + 1;
  }
  return 0;
}

WeightModule table_row_module(Target t, std::uint32_t p, int n) {
  switch (t) {
    case Target::G1: return block_projection_principal(truncated_sym(sl2(p), n));
    case Target::B1: return truncated_sym(borel(p), n);
    case Target::U1: return truncated_sym(nilradical(p), n);
  }
  throw std::invalid_argument("table_row_module: unknown target");
}

CohomologyTable hh_table(Target t, std::uint32_t p, int maxdeg) {
  CohomologyTable table{t, p, maxdeg, {}};
  for (int n = 0; n < table_row_count(t, p); ++n) {
    const WeightModule m = table_row_module(t, p, n);
    for (int d = 0; d <= maxdeg; ++d) {
      switch (t) {
        case Target::G1: {
          auto ind = g1_cohomology_char(m, d);
          table.entries.push_back({n, d, std::move(ind.character), ind.dominant});
          break;
        }
        case Target::B1: table.entries.push_back({n, d, b1_cohomology(m, d), true}); break;
        case Target::U1: table.entries.push_back({n, d, u1_cohomology(m, d), true}); break;
      }
    }
  }
  return table;
}

}  // namespace hhsl2
