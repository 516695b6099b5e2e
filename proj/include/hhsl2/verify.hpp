#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhsl2/character.hpp"

namespace hhsl2 {

/// Cohomology patterns of the appendix rows, as characters of the untwisted
/// H^d(G_1, row) for each degree d.
enum class Pattern {
  Zero,        // 0
  KNull,       // k[N]_{d/2} for d even
  KDeg0,       // k in degree 0
  OddInd,      // ind[S^{(d-1)/2}(u*) (x) w] (x) L(1) for d odd
  OddIndFull,  // ind[S^d(u*) (x) w] (x) L(1) for d odd
  P2KNull,     // nabla(d)
  P2Delta,     // k in degree 0, ind[S^d(u*)^(-1) (x) -w] above
  P2Nabla,     // L(1) in degree 0, ind[S^d(u*)^(-1) (x) w] above
};

std::string pattern_name(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);
Character pattern_character(Pattern p, int degree);

struct FixtureRow {
  int n;
  std::vector<Summand> summands;
  Pattern pattern;
  /// Pattern as literally printed, when it differs from `pattern`.
  std::optional<Pattern> printed;
};

struct AppendixFixture {
  std::uint32_t p;
  std::vector<FixtureRow> rows;
};

/// Parses lines `n | summand,summand,... | PATTERN [| printed=PATTERN]`;
/// blank lines and `#` comments are skipped. Throws std::runtime_error with
/// the offending line number.
AppendixFixture parse_fixture(std::uint32_t p, std::string_view text);
Summand parse_summand(std::string_view text);

/// Fixture for p from $HHSL2_FIXTURE_DIR, then the source data directory, then
/// the copy embedded at build time. nullopt when no fixture exists for p.
std::optional<AppendixFixture> load_fixture(std::uint32_t p);

/// Rows cover 0..3(p-1) exactly once and the claimed dimensions sum to p^3.
std::vector<std::string> audit_fixture(const AppendixFixture& f);

/// Summands in the order simple, standard, costandard, tilting, each by
/// decreasing highest weight.
Decomposition appendix_order(Decomposition d);

enum class Status { Pass, Fail, Flagged };
std::string status_name(Status s);

struct Check {
  std::string name;
  Status status;
  std::string expected;
  std::string computed;
};

/// Known discrepancies with stated results. A mismatch whose key is listed here is
/// reported as flagged instead of failed.
bool is_allowlisted(std::string_view key);

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  long long runtime_ms = 0;

  void add(std::string name, bool ok, std::string expected, std::string computed,
           std::optional<std::string_view> discrepancy_key = std::nullopt);
  std::size_t count(Status s) const;
  /// 0 all pass, 1 any failure, 2 only allowlisted discrepancies.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json(bool with_timing = true) const;
};

/// Appendix tables: summand characters, cohomology pattern per degree up to
/// maxdeg, and Hom-dimension socle fingerprints. With `use_fixture` false (or
/// no fixture for p) only fixture-free checks run.
VerificationReport verify_appendix(std::uint32_t p, int maxdeg, bool use_fixture = true);

/// Propositions and theorems checked at the level of dimensions, weights,
/// characters and cup products.
VerificationReport verify_propositions(std::uint32_t p);

}  // namespace hhsl2
