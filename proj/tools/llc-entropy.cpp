// Command-line front end: entropy computations and identity verification for
// banded endomorphism systems.
//
// Exit codes: 0 success / all checks pass; 1 parse or prerequisite error;
// 2 uncertified-only results; 3 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "llcent/llcent.hpp"

using namespace llcent;
using nlohmann::json;

namespace {

struct CommonFlags {
  std::optional<int> k_min, k_max;
  int n_cap = 64;
  int s_min = 8;
  int plateau = 8;
  std::uint64_t seed = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--k-min", flags.k_min, "lowest basic-open level to sweep");
  cmd->add_option("--k-max", flags.k_max, "highest basic-open level to sweep");
  cmd->add_option("--n-cap", flags.n_cap, "stage cap per level")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--s-min", flags.s_min,
                  "consecutive equal increments required for a certificate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--plateau", flags.plateau,
                  "levels of agreement required across the sweep")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed, "seed for randomized checks");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

KSweepPolicy sweep_of(const CommonFlags& flags) {
  KSweepPolicy sweep;
  sweep.k_min = flags.k_min;
  sweep.k_max = flags.k_max;
  sweep.plateau = flags.plateau;
  sweep.stab.n_cap = flags.n_cap;
  sweep.stab.s_min = flags.s_min;
  return sweep;
}

json report_to_json(const EntropyReport& rep, const SystemFile& sys,
                    const char* kind) {
  json levels = json::array();
  for (const auto& lv : rep.per_level)
    levels.push_back({{"level", lv.level},
                      {"value", lv.cert.value},
                      {"certified", lv.cert.certified},
                      {"stabilized_at", lv.cert.stabilized_at},
                      {"agreement", lv.cert.agreement},
                      {"n_used", lv.cert.n_used}});
  return json{{"kind", kind},
              {"p", sys.space.field.p},
              {"tracks", sys.space.tracks},
              {"levels", levels},
              {"value", rep.value},
              {"certified", rep.certified},
              {"possibly_infinite", rep.possibly_infinite},
              {"h_top", rep.h_top}};
}

void print_report_text(const EntropyReport& rep, const BandedEndo& f,
                       const char* label, bool cotrajectory_side) {
  for (const auto& lv : rep.per_level) {
    std::cout << "level " << lv.level << ": H = " << lv.cert.value
              << (lv.cert.certified ? " certified" : " UNCERTIFIED")
              << " (stationary from n=" << lv.cert.stabilized_at << ", "
              << lv.cert.agreement << " agreements)\n";
    int n_max = std::max(2, std::min(lv.cert.n_used, 16));
    if (cotrajectory_side) {
      CotrajectoryTable table = gamma_sequence(f, lv.level, n_max);
      std::cout << "  codims:";
      for (int c : table.codims) std::cout << " " << c;
      std::cout << "\n  gammas:";
      for (int g : table.gammas) std::cout << " " << g;
    } else {
      TrajectoryTable table = trajectory_sequence(f, lv.level, n_max);
      std::cout << "  dims:  ";
      for (int n = 1; n < static_cast<int>(table.dims.size()); ++n)
        std::cout << " " << table.dims[n];
      std::cout << "\n  increments:";
      for (int n = 2; n < static_cast<int>(table.dims.size()); ++n)
        std::cout << " " << table.dims[n] - table.dims[n - 1];
    }
    std::cout << (lv.cert.n_used > 16 ? " ...\n" : "\n");
  }
  std::cout << label << " = " << rep.value
            << (rep.certified ? "" : "  (uncertified estimate)")
            << (rep.possibly_infinite ? "  (values still growing)" : "")
            << "\n";
  std::cout << "h_top = " << rep.h_top << " nats\n";
}

int finish_entropy_command(const EntropyReport& rep, const SystemFile& sys,
                           const BandedEndo& f, const CommonFlags& flags,
                           const char* kind, const char* label) {
  if (flags.format == "structured") {
    std::cout << report_to_json(rep, sys, kind).dump(2) << "\n";
  } else {
    print_report_text(rep, f, label, kind == std::string("topological"));
  }
  return rep.certified ? 0 : 2;
}

struct VerifyRow {
  std::string check;
  CheckResult::Status status;
  std::string detail;
};

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "FAIL";
    default: return "uncertified";
  }
}

int run_verify(const SystemFile& sys, std::vector<std::string> which,
               const CommonFlags& flags) {
  VerifyBudget budget;
  budget.sweep = sweep_of(flags);

  const BandedEndo& f = sys.endo;
  std::vector<VerifyRow> rows;
  auto push = [&](const CheckResult& r) {
    rows.push_back({r.check, r.status, r.detail});
  };

  for (const std::string& check : which) {
    if (check == "bridge") {
      push(bridge_case_check(f, budget, ""));
    } else if (check == "addition" || check == "monotonicity") {
      if (!sys.invariant_tracks)
        throw std::runtime_error("check '" + check +
                                 "' needs an [invariant] section");
      SuiteCase c{"", f, sys.invariant_tracks, std::nullopt, std::nullopt};
      push(check == "addition" ? addition_check(c, budget)
                               : monotonicity_check(c, budget));
    } else if (check == "modulus") {
      if (!sys.inverse)
        throw std::runtime_error("check 'modulus' needs an [inverse] section");
      if (!is_inverse_pair(f, *sys.inverse))
        throw std::runtime_error("[inverse] is not an exact inverse");
      SuiteCase c{"", f, std::nullopt, sys.inverse, std::nullopt};
      push(modulus_check(c, budget));
    } else if (check == "loglaw") {
      push(loglaw_check(f, budget, ""));
    } else if (check == "weak-addition") {
      if (!sys.invariant_tracks)
        throw std::runtime_error(
            "check 'weak-addition' needs an [invariant] section");
      TrackSubspace comp(sys.invariant_tracks->complement(sys.space.tracks));
      if (!check_invariant(f, *sys.invariant_tracks) ||
          !check_invariant(f, comp))
        throw std::runtime_error(
            "weak-addition needs a block-diagonal track split");
      push(weak_addition_check(restrict_to(f, *sys.invariant_tracks),
                               quotient(f, *sys.invariant_tracks), budget,
                               ""));
    } else if (check == "conjugation") {
      for (const auto& [c, c_inv] : standard_conjugators(f.space(), flags.seed))
        push(conjugation_check(f, c, c_inv, budget, ""));
    } else if (check == "compact-reduction") {
      push(compact_reduction_check(f, budget, ""));
    } else if (check == "oracle") {
      std::vector<int> levels;
      for (int k = f.core_lo() - f.band(); k <= f.core_hi() + f.band() + 1;
           ++k)
        levels.push_back(k);
      OracleReport rep = cross_validate(f, levels, budget.oracle_n_max);
      CheckResult::Status st =
          rep.ok() ? (rep.checked > 0 ? CheckResult::Status::Pass
                                      : CheckResult::Status::Uncertified)
                   : CheckResult::Status::Fail;
      rows.push_back({"oracle", st,
                      std::to_string(rep.checked) + " checked, " +
                          std::to_string(rep.skipped) + " over cap, " +
                          std::to_string(rep.mismatches.size()) +
                          " mismatches"});
    } else {
      throw std::runtime_error("unknown check '" + check + "'");
    }
  }

  int failed = 0, uncertified = 0;
  if (flags.format == "structured") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"check", r.check},
                     {"status", status_name(r.status)},
                     {"detail", r.detail}});
    std::cout << out.dump(2) << "\n";
  }
  for (const auto& r : rows) {
    if (flags.format == "text")
      std::cout << r.check << ": " << status_name(r.status)
                << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    if (r.status == CheckResult::Status::Fail) ++failed;
    if (r.status == CheckResult::Status::Uncertified) ++uncertified;
  }
  if (failed > 0) return 3;
  if (uncertified > 0) return 2;
  return 0;
}

int write_examples(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const SuiteCase& c : shipped_suite()) {
    SystemFile sys{c.endo.space(), c.endo, c.invariant, c.inverse};
    std::filesystem::path path = std::filesystem::path(dir) / (c.name + ".sys");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << print_system(sys);
    std::cout << path.string() << "\n";
  }
  return 0;
}

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t comma = item.find(',', start);
      std::string piece = item.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      if (!piece.empty()) out.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact topological and algebraic entropy of banded endomorphisms over "
      "prime fields"};
  app.require_subcommand(1);

  std::string file;
  CommonFlags flags;
  bool of_dual = false;
  std::vector<std::string> checks;
  std::string out_dir;

  CLI::App* topological = app.add_subcommand(
      "topological", "cotrajectory entropy of the system's endomorphism");
  topological->add_option("file", file, "system description")->required();
  add_common(topological, flags);

  CLI::App* algebraic = app.add_subcommand(
      "algebraic", "trajectory entropy (of the dual with --of-dual)");
  algebraic->add_option("file", file, "system description")->required();
  algebraic->add_flag("--of-dual", of_dual,
                      "dualize the endomorphism before computing");
  add_common(algebraic, flags);

  CLI::App* verify =
      app.add_subcommand("verify", "verify structural identities on the system");
  verify->add_option("file", file, "system description")->required();
  verify->add_option(
      "--check", checks,
      "bridge | addition | modulus | loglaw | weak-addition | monotonicity | "
      "conjugation | compact-reduction | oracle (repeatable, default: all "
      "applicable)");
  add_common(verify, flags);

  CLI::App* examples = app.add_subcommand(
      "examples", "write the bundled example systems to a directory");
  examples->add_option("dir", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (examples->parsed()) return write_examples(out_dir);

    SystemFile sys = load_system(file);
    if (topological->parsed()) {
      EntropyReport rep = ent_star(sys.endo, sweep_of(flags));
      return finish_entropy_command(rep, sys, sys.endo, flags, "topological",
                                    "ent*");
    }
    if (algebraic->parsed()) {
      BandedEndo g = of_dual ? dualize(sys.endo) : sys.endo;
      EntropyReport rep = ent_alg(g, sweep_of(flags));
      return finish_entropy_command(rep, sys, g, flags, "algebraic", "ent");
    }
    // verify
    std::vector<std::string> which = split_checks(checks);
    if (which.empty()) {
      which = {"bridge", "loglaw", "conjugation", "compact-reduction",
               "oracle"};
      if (sys.invariant_tracks) {
        which.push_back("addition");
        which.push_back("monotonicity");
        TrackSubspace comp(sys.invariant_tracks->complement(sys.space.tracks));
        if (check_invariant(sys.endo, *sys.invariant_tracks) &&
            check_invariant(sys.endo, comp))
          which.push_back("weak-addition");
      }
      if (sys.inverse) which.push_back("modulus");
    }
    return run_verify(sys, which, flags);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
