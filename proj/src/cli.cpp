#include "hhsl2/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "hhsl2/cohomology.hpp"
#include "hhsl2/module.hpp"
#include "hhsl2/verify.hpp"

namespace hhsl2 {

namespace {

constexpr int kDefaultMaxDeg = 8;
constexpr unsigned kDefaultMaxP = 13;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_p(unsigned p, unsigned max_p) {
  if (!is_prime(p)) throw UsageError(fmt::format("--p {} is not prime", p));
  if (p > max_p) throw UsageError(fmt::format("--p {} exceeds the cap {} (raise it with --max-p)", p, max_p));
}

int emit_report(const VerificationReport& r, const std::string& format, bool timing, std::ostream& out) {
  out << (format == "json" ? r.to_json(timing) : r.to_text());
  return r.exit_code();
}

void print_table(const CohomologyTable& t, bool per_row, const std::string& format, std::ostream& out) {
  struct Line {
    std::string n;
    int degree;
    Character character;
    bool exact;
  };
  std::vector<Line> lines;
  if (per_row) {
    for (const auto& e : t.entries) lines.push_back({std::to_string(e.n), e.degree, e.character, e.exact});
  } else {
    for (int d = 0; d <= t.maxdeg; ++d) lines.push_back({"all", d, t.total(d), t.total_exact(d)});
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["target"] = target_name(t.target);
    j["p"] = t.p;
    j["maxdeg"] = t.maxdeg;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& l : lines) {
      nlohmann::ordered_json row;
      row["n"] = l.n;
      row["degree"] = l.degree;
      row["dim"] = l.character.dimension();
      row["character"] = l.character.to_string();
      row["flag"] = l.exact ? "exact" : "euler-only";
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "n\tdegree\tdim\tcharacter\tflag\n";
  for (const auto& l : lines)
    out << fmt::format("{}\t{}\t{}\t{}\t{}\n", l.n, l.degree, l.character.dimension(), l.character.to_string(),
                       l.exact ? "exact" : "euler-only");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology of first Frobenius kernels of SL2: computation and verification"};
  app.name("hhsl2");
  app.require_subcommand(1);
  unsigned max_p = kDefaultMaxP;
  app.add_option("--max-p", max_p, "Largest prime accepted by --p")->capture_default_str();

  unsigned p = 0;
  int maxdeg = kDefaultMaxDeg;
  int n = 0;
  int deg = 0;
  std::string format;
  bool no_fixture = false, no_timing = false, per_row = false;
  std::string table_target, decomp_kind, coh_target = "b1", coh_module = "sl2";

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* appendix = verify->add_subcommand("appendix", "Check the appendix tables");
  auto* props = verify->add_subcommand("props", "Check the propositions and theorems");
  for (auto* sub : {appendix, props}) {
    sub->add_option("--p", p, "Prime characteristic")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-timing", no_timing, "Report runtime_ms as 0 for byte-stable output");
  }
  appendix->add_option("--maxdeg", maxdeg, "Largest cohomological degree")->capture_default_str();
  appendix->add_flag("--no-fixture", no_fixture, "Run only the fixture-free checks");

  auto* table = app.add_subcommand("table", "Print a Hochschild cohomology table");
  table->add_option("target", table_target, "g1, b1 or u1")->required()->check(CLI::IsMember({"g1", "b1", "u1"}));
  table->add_option("--p", p, "Prime characteristic")->required();
  table->add_option("--maxdeg", maxdeg, "Largest cohomological degree")->capture_default_str();
  table->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  table->add_flag("--per-row", per_row, "One line per (n, degree) instead of per-degree totals");

  auto* decomp = app.add_subcommand("decomp", "Decompose a symmetric power of sl2");
  decomp->add_option("kind", decomp_kind, "sym or tsym")->required()->check(CLI::IsMember({"sym", "tsym"}));
  decomp->add_option("--p", p, "Prime characteristic")->required();
  decomp->add_option("--n", n, "Degree")->required();

  auto* coh = app.add_subcommand("cohomology", "Cohomology of one truncated symmetric power");
  coh->add_option("--target", coh_target, "u1 or b1")->check(CLI::IsMember({"u1", "b1"}))->capture_default_str();
  coh->add_option("--module", coh_module, "sl2, borel, nilradical or block (principal block of sl2)")
      ->check(CLI::IsMember({"sl2", "borel", "nilradical", "block"}))
      ->capture_default_str();
  coh->add_option("--p", p, "Prime characteristic")->required();
  coh->add_option("--n", n, "Internal degree")->required();
  coh->add_option("--deg", deg, "Cohomological degree")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    check_p(p, max_p);
    if (maxdeg < 0) throw UsageError("--maxdeg must be nonnegative");
    if (*appendix) {
      if (!no_fixture && !load_fixture(p))
        throw UsageError(fmt::format("no appendix fixture for p={}; pass --no-fixture", p));
      return emit_report(verify_appendix(p, maxdeg, !no_fixture), format, !no_timing, out);
    }
    if (*props) return emit_report(verify_propositions(p), format, !no_timing, out);
    if (*table) {
      const Target t = table_target == "g1" ? Target::G1 : table_target == "b1" ? Target::B1 : Target::U1;
      print_table(hh_table(t, p, maxdeg), per_row, format.empty() ? "tsv" : format, out);
      return kExitPass;
    }
    if (*decomp) {
      const RestrictedLieAlgebra g = sl2(p);
      if (n < 0) throw UsageError("--n must be nonnegative");
      if (decomp_kind == "sym") {
        out << decompose_nabla(sym_power(g, n).character()).to_string() << "\n";
      } else {
        if (n > truncated_top_degree(g)) throw UsageError(fmt::format("--n must lie in 0..{}", truncated_top_degree(g)));
        out << appendix_order(decompose_tilting_or_simple(truncated_sym(g, n).character(), p)).to_string() << "\n";
      }
      return kExitPass;
    }
    if (*coh) {
      const RestrictedLieAlgebra a = coh_module == "borel" ? borel(p) : coh_module == "nilradical" ? nilradical(p) : sl2(p);
      if (n < 0 || n > truncated_top_degree(a))
        throw UsageError(fmt::format("--n must lie in 0..{}", truncated_top_degree(a)));
      if (deg < 0) throw UsageError("--deg must be nonnegative");
      WeightModule m = truncated_sym(a, n);
      if (coh_module == "block") m = block_projection_principal(m);
      const Character c = coh_target == "u1" ? u1_cohomology(m, deg) : b1_cohomology(m, deg);
      out << fmt::format("dim\t{}\ncharacter\t{}\n", c.dimension(), c.to_string());
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hhsl2
