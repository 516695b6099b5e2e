#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhsl2/character.hpp"
#include "hhsl2/module.hpp"

namespace hhsl2 {

/// Weight twist of the n-th cochain space of the periodic complex of
/// k[f]/f^p: tw(2i) = 2pi, tw(2i+1) = 2pi + 2.
int periodic_twist(int n, std::uint32_t p);
/// Exponent of f in the differential leaving degree n: 1 for n even, p-1 for n odd.
int periodic_exponent(int n, std::uint32_t p);

/// Differential C^n -> C^(n+1) of the periodic complex, as a matrix on M.
Matrix periodic_differential(const WeightModule& m, int n);

/// Violations of the complex property (f^p = 0, consecutive differentials
/// compose to zero) and of weight-0 differentials after twisting, checked on
/// the first two periods.
std::vector<std::string> check_periodic_complex(const WeightModule& m);

/// H^j(u, M) for the one-dimensional u = span{f}: ker f for j = 0, coker f
/// shifted by +2 for j = 1, zero for j >= 2.
Character u_cohomology(const WeightModule& m, int j);

/// H^n(U_1, M) from the periodic complex, computed weight space by weight space.
/// Throws std::invalid_argument unless f^p = 0 on M.
Character u1_cohomology(const WeightModule& m, int n);

/// Weights divisible by p.
Character t1_invariants(const Character& c, std::uint32_t p);

Character b1_cohomology(const WeightModule& m, int n);

/// E_2^{2i,j} = S^i(u*)^(1) (x) H^j(u, M)^{T_1}. Throws std::domain_error for p = 2.
Character e2_page(const WeightModule& m, int i, int j);

struct CollapseRow {
  int degree;
  long long e2_total;
  long long actual;
  long long defect;
};

/// Per total degree n <= maxdeg: sum of dim E_2^{2i,j} over 2i+j = n against
/// dim H^n(B_1, M).
std::vector<CollapseRow> collapse_check(const WeightModule& m, int maxdeg);

/// Dimension per total degree of the two families spanning I_p.
std::vector<long long> ip_expected_dims(std::uint32_t p, int maxdeg);

/// ind_B^G of the untwisted H^n(B_1, M), at the level of characters.
InducedCharacter g1_cohomology_char(const WeightModule& m, int n);

enum class Target { G1, B1, U1 };
std::string target_name(Target t);

struct CohomologyEntry {
  int n;       // internal degree of the coefficient module
  int degree;  // cohomological degree
  Character character;
  bool exact;  // false when only the Euler characteristic is known
};

struct CohomologyTable {
  Target target;
  std::uint32_t p;
  int maxdeg;
  std::vector<CohomologyEntry> entries;  // sorted by (n, degree)

  Character total(int degree) const;
  bool total_exact(int degree) const;
  const CohomologyEntry& at(int n, int degree) const;
};

/// Coefficient module of row n: the principal block of the truncated symmetric
/// algebra of sl2 for G1, the truncated symmetric algebra of b or u otherwise.
WeightModule table_row_module(Target t, std::uint32_t p, int n);
int table_row_count(Target t, std::uint32_t p);

CohomologyTable hh_table(Target t, std::uint32_t p, int maxdeg);

}  // namespace hhsl2
