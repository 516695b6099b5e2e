// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integer or character equalities; the only tolerance is the time budget.

#include <fmt/core.h>

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "hhsl2/character.hpp"
#include "hhsl2/cohomology.hpp"
#include "hhsl2/cup.hpp"
#include "hhsl2/lie.hpp"
#include "hhsl2/module.hpp"
#include "hhsl2/verify.hpp"

using namespace hhsl2;

namespace {

constexpr long long kExactTolerance = 0;  // dimensions and multiplicities must match exactly
constexpr double kTimeBudgetSeconds = 60.0;
constexpr int kMaxDeg = 8;
constexpr int kTaftMaxDeg = 10;
constexpr int kTaftPowers = 5;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back(std::move(what));
    }
  }
};

bool matches(long long expected, long long computed) {
  const long long diff = expected > computed ? expected - computed : computed - expected;
  return diff <= kExactTolerance;
}

// Every object built by criteria 1-7, for the structural sweep of criterion 8.
struct Registry {
  std::vector<std::string> violations;
  std::size_t modules = 0;
  std::size_t algebras = 0;
  std::size_t resolutions = 0;

  void module(const WeightModule& m, const std::string& tag) {
    ++modules;
    for (const auto& v : module_violations(m)) violations.push_back(tag + ": " + v);
    if (m.has_action(Gen::F))
      for (const auto& v : check_periodic_complex(m)) violations.push_back(tag + ": " + v);
  }
  void algebra(const RestrictedLieAlgebra& a) {
    ++algebras;
    if (!check_jacobi(a)) violations.push_back(a.name() + ": Jacobi");
    if (!check_restricted(a)) violations.push_back(a.name() + ": restricted");
    if (!check_weight_additive(a)) violations.push_back(a.name() + ": weights");
  }
  void resolution(const PeriodicResolution& r) {
    ++resolutions;
    for (const auto& v : r.check_chain_map()) violations.push_back(fmt::format("diagonal p={}: {}", r.p(), v));
  }
};

Registry registry;

Outcome appendix_reproduction() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto r = verify_appendix(p, kMaxDeg);
    for (const auto& c : r.checks) {
      // Structural checks of the appendix run feed criterion 8.
      if (c.name.ends_with(".structure") || c.name.ends_with(".block_structure")) {
        if (c.status != Status::Pass) registry.violations.push_back(c.name + ": " + c.computed);
        continue;
      }
      if (c.status == Status::Fail) o.require(false, fmt::format("{}: expected {} got {}", c.name, c.expected, c.computed));
    }
    const auto f = load_fixture(p);
    o.require(f.has_value() && audit_fixture(*f).empty(), fmt::format("p={} fixture audit", p));
    long long total = 0;
    for (const auto& row : f->rows)
      for (const auto& s : row.summands) total += summand_char(s, p).dimension() * s.multiplicity;
    o.require(matches(static_cast<long long>(p) * p * p, total), fmt::format("p={} sum of dims {}", p, total));
    const auto g = sl2(p);
    registry.algebra(g);
    for (int n = 0; n <= truncated_top_degree(g); ++n) registry.module(truncated_sym(g, n), fmt::format("S{}(g) p={}", n, p));
  }

  // Spot values quoted with the criterion.
  const auto t3 = hh_table(Target::G1, 3, kMaxDeg);
  const std::vector<long long> n3 = {0, 4, 0, 8, 0, 12};
  const std::vector<long long> knull = {1, 0, 3, 0, 5, 0};
  for (int d = 0; d < 6; ++d) {
    o.require(matches(n3[d], t3.at(3, d).character.dimension()), fmt::format("p=3 n=3 deg {}", d));
    for (int n : {0, 6}) o.require(matches(knull[d], t3.at(n, d).character.dimension()), fmt::format("p=3 n={} deg {}", n, d));
  }
  const auto t2 = hh_table(Target::G1, 2, kMaxDeg);
  o.require(matches(2, t2.at(2, 0).character.dimension()), "p=2 n=2 deg 0 is L(1)");
  o.require(t2.at(2, 0).character == simple_char(1, 2), "p=2 n=2 deg 0 character");
  return o;
}

Outcome taft() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto b = borel(p);
    registry.algebra(b);
    const long long want = p == 2 ? 4 : 1;
    for (int n = 0; n <= kTaftMaxDeg; ++n) {
      long long dim = 0;
      for (int d = 0; d <= truncated_top_degree(b); ++d) dim += b1_cohomology(truncated_sym(b, d), n).dimension();
      o.require(matches(want, dim), fmt::format("p={} dim HH^{}(B1) = {}", p, n, dim));
    }
    for (int d = 0; d <= truncated_top_degree(b); ++d) registry.module(truncated_sym(b, d), fmt::format("S{}(b) p={}", d, p));
    if (p == 2) continue;

    const TruncatedAlgebra alg(b);
    const CupProductEngine eng(alg, kTaftMaxDeg);
    registry.resolution(eng.resolution());
    const auto x = eng.cohomology_basis(1, true);
    const auto y = eng.cohomology_basis(2, true);
    if (x.size() != 1 || y.size() != 1) {
      o.require(false, fmt::format("p={} generator count", p));
      continue;
    }
    o.require(eng.weight(x[0]) == 0, fmt::format("p={} degree-1 weight", p));
    o.require(eng.is_coboundary(eng.cup(x[0], x[0])), fmt::format("p={} x^2 != 0", p));
    for (int k = 1; k <= kTaftPowers; ++k)
      o.require(!eng.is_coboundary(eng.power(y[0], k)), fmt::format("p={} y^{} = 0", p, k));
  }
  return o;
}

Outcome hh_u1() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto u = nilradical(p);
    registry.algebra(u);
    for (int d = 0; d <= truncated_top_degree(u); ++d) registry.module(truncated_sym(u, d), fmt::format("S{}(u) p={}", d, p));
    const auto t = hh_table(Target::U1, p, kMaxDeg);
    for (int n = 0; n <= kMaxDeg; ++n)
      o.require(matches(p, t.total(n).dimension()), fmt::format("p={} dim HH^{}(U1) = {}", p, n, t.total(n).dimension()));
  }
  return o;
}

Outcome kostant() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (int l = 0; l < static_cast<int>(p); ++l) {
      const auto m = simple_model(l, p);
      registry.module(m, fmt::format("L({}) p={}", l, p));
      o.require(u_cohomology(m, 1) == Character::monomial(l + 2), fmt::format("p={} H^1(u, L({}))", p, l));
      o.require(u_cohomology(m, 0) == Character::monomial(-l), fmt::format("p={} H^0(u, L({}))", p, l));
    }
  return o;
}

Outcome duality() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (const auto& a : {sl2(p), borel(p), nilradical(p)}) {
      registry.algebra(a);
      for (int i = 0; i <= truncated_top_degree(a); ++i) {
        const auto dim = static_cast<long long>(truncated_sym(a, i).dim());
        const auto rk = static_cast<long long>(duality_pairing_rank(a, i));
        o.require(matches(dim, rk), fmt::format("{} p={} i={} rank {} of {}", a.name(), p, i, rk, dim));
      }
    }
  return o;
}

Outcome collapse() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto k = trivial_module(p);
    registry.module(k, fmt::format("k p={}", p));
    for (const auto& row : collapse_check(k, kMaxDeg))
      o.require(matches(0, row.defect), fmt::format("p={} trivial defect {} at {}", p, row.defect, row.degree));

    std::vector<long long> defect(kMaxDeg + 1, 0);
    for (int n = 0; n <= truncated_top_degree(sl2(p)); ++n) {
      const auto block = block_projection_principal(truncated_sym(sl2(p), n));
      registry.module(block, fmt::format("S{}(g)_0 p={}", n, p));
      for (const auto& row : collapse_check(block, kMaxDeg)) defect[row.degree] += row.defect;
    }
    const auto ip = ip_expected_dims(p, kMaxDeg);
    for (int d = 0; d <= kMaxDeg; ++d)
      o.require(matches(ip[d], defect[d]), fmt::format("p={} degree {} defect {} vs I_p {}", p, d, defect[d], ip[d]));
  }
  return o;
}

Outcome degree0(std::vector<std::string>& flagged) {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    long long inv = 0;
    for (int n = 0; n <= truncated_top_degree(sl2(p)); ++n) {
      const auto g1 = g1_invariants(truncated_sym(sl2(p), n));
      registry.module(g1, fmt::format("S{}(g)^G1 p={}", n, p));
      inv += static_cast<long long>(g1.dim());
    }
    const long long table = hh_table(Target::G1, p, 0).total(0).dimension();
    o.require(matches(inv, table), fmt::format("p={} invariants {} vs table {}", p, inv, table));
    if (p >= 3 && inv != static_cast<long long>(p - 1) / 2)
      flagged.push_back(fmt::format("p={}: computed {} vs stated count {}", p, inv, (p - 1) / 2));
  }
  return o;
}

Outcome structural() {
  Outcome o;
  for (const auto& v : registry.violations) o.require(false, v);
  o.require(registry.modules > 0 && registry.algebras > 0 && registry.resolutions > 0, "nothing was registered");
  return o;
}

void report(int id, const std::string& name, const Outcome& o, double seconds, int& failures) {
  fmt::print("{} criterion {} {} ({:.2f}s)\n", o.ok ? "PASS" : "FAIL", id, name, seconds);
  if (!o.ok) {
    ++failures;
    const std::size_t shown = std::min<std::size_t>(o.notes.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) fmt::print("    {}\n", o.notes[i]);
    if (o.notes.size() > shown) fmt::print("    ... {} more\n", o.notes.size() - shown);
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failures = 0;
  std::vector<std::string> flagged;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"appendix reproduction", appendix_reproduction},
      {"Taft algebra HH(B1)", taft},
      {"HH(U1)", hh_u1},
      {"Kostant sweep", kostant},
      {"duality pairing", duality},
      {"collapse dichotomy", collapse},
      {"degree-0 oracle", [&] { return degree0(flagged); }},
      {"structural invariants", structural},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = clock::now();
    const auto o = criteria[i].second();
    report(static_cast<int>(i) + 1, criteria[i].first, o, std::chrono::duration<double>(clock::now() - t0).count(),
           failures);
    if (i == 6)
      for (const auto& f : flagged) fmt::print("    flagged discrepancy (hh0_count): {}\n", f);
  }

  const double total = std::chrono::duration<double>(clock::now() - start).count();
  fmt::print("checked {} modules, {} algebras, {} diagonals\n", registry.modules, registry.algebras, registry.resolutions);
  fmt::print("total {:.2f}s (budget {:.0f}s)\n", total, kTimeBudgetSeconds);
  if (total > kTimeBudgetSeconds) {
    fmt::print("FAIL time budget exceeded\n");
    ++failures;
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - std::min<std::size_t>(failures, criteria.size()),
             criteria.size());
  return failures == 0 ? 0 : 1;
}
