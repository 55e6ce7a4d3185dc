// mubtomo — mutually unbiased bases for qutrit registers: construction,
// decomposition-table verification, measurement simulation and state
// reconstruction, nonlocal-gate complexity, and entanglement census.
//
// Summaries go to stderr; data goes to --out files or stdout. Exit code 0
// means the subcommand's verification or validation succeeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mubtomo/ent.hpp"
#include "mubtomo/gates.hpp"
#include "mubtomo/io.hpp"
#include "mubtomo/mub.hpp"
#include "mubtomo/tomo.hpp"

using namespace mubtomo;

namespace {

int dim_for_qutrits(int n) { return n == 1 ? 3 : n == 2 ? 9 : 27; }

void emit(const io::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    io::save_json(j, out_path);
}

std::optional<gates::Convention> parse_convention(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "left-first") return gates::Convention::left_applied_first;
  return gates::Convention::left_applied_last;
}

gates::PhaseVariant parse_phase(const std::string& s) {
  return s == "paper" ? gates::PhaseVariant::standard
                      : gates::PhaseVariant::clock;
}

std::optional<long long> parse_shots(const std::string& s) {
  if (s == "exact") return std::nullopt;
  long long shots = 0;
  try {
    size_t used = 0;
    shots = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shots", "expected a count or 'exact'");
  }
  if (shots < 1) throw CLI::ValidationError("--shots", "shots must be >= 1");
  return shots;
}

int cmd_mub_gen(int n_qutrits, const std::string& out_path) {
  const auto& spec = gf::FieldSpec::gf(dim_for_qutrits(n_qutrits));
  const auto set = mub::build_field_mubs(spec);
  const auto report = mub::verify_unbiased(set);
  emit(io::mub_set_to_json(set), out_path);
  std::fprintf(stderr, "%zu bases, max deviation %.3e (%s)\n", set.bases.size(),
               report.max_deviation, report.all_pass ? "pass" : "FAIL");
  return report.all_pass ? 0 : 1;
}

int cmd_verify_table(int table_id, const std::string& convention,
                     const std::string& phase, const std::string& out_path) {
  const auto& table = gates::builtin_table(table_id);
  const auto report = gates::verify_table(table, parse_convention(convention),
                                          parse_phase(phase));
  if (!out_path.empty()) io::save_json(io::table_report_to_json(report), out_path);
  std::fprintf(stderr,
               "table %s: %d bases, %d/%d pairs unbiased, max deviation %.3e\n"
               "convention %s%s, phase gate %s -> %s\n",
               report.table_id.c_str(), report.basis_count, report.pairs_passed,
               report.pairs_checked, report.max_deviation,
               gates::to_string(report.convention_used).c_str(),
               report.convention_auto_detected ? " (auto)" : "",
               gates::to_string(report.phase_variant).c_str(),
               report.all_pass ? "all rows pass" : "some rows FAIL");
  if (report.rows_unbiased_to_standard)
    std::fprintf(stderr, "rows unbiased to the computational basis: %d of %d\n",
                 *report.rows_unbiased_to_standard, report.basis_count);
  if (out_path.empty()) emit(io::table_report_to_json(report), "");
  return report.all_pass ? 0 : 1;
}

int cmd_complexity(int table_id) {
  const auto& table = gates::builtin_table(table_id);
  for (const auto& row : table.rows) {
    int count = 0;
    for (const auto& tok : gates::parse_word(row.word, table.n_qutrits).tokens)
      if (tok.kind == gates::GateKind::X) ++count;
    std::printf("%s: %d\n", row.label.c_str(), count);
  }
  std::printf("total: %d\n", gates::count_nonlocal(table));
  return 0;
}

int cmd_tomo(const std::string& state_path, const std::string& method,
             const std::string& shots_text, uint64_t seed, bool project,
             const std::string& out_path) {
  const auto rho = io::density_from_json(io::load_json(state_path));
  const int n = rho.dim == 3 ? 1 : rho.dim == 9 ? 2 : rho.dim == 27 ? 3 : 0;
  if (n == 0) throw CLI::ValidationError("--state", "dimension must be 3, 9 or 27");

  tomo::TomographyResult result;
  if (method == "gellmann") {
    result = tomo::reconstruct_gellmann(rho, n);
  } else {
    const auto set = mub::build_field_mubs(gf::FieldSpec::gf(rho.dim));
    result = tomo::run_experiment(rho, set, parse_shots(shots_text), seed, project);
  }
  emit(io::result_to_json(result), out_path);

  const int mub_count = rho.dim + 1;
  const int gm_count = rho.dim * rho.dim - 1;
  if (n <= 2)
    std::fprintf(stderr, "measurements: %d (mub) vs %d (gellmann baseline)\n",
                 mub_count, gm_count);
  else
    std::fprintf(stderr, "measurements: %d (mub)\n", mub_count);
  std::fprintf(stderr, "method %s, frobenius error %.3e", method.c_str(),
               result.metrics.frobenius_error);
  if (result.metrics.pure_state_fidelity)
    std::fprintf(stderr, ", fidelity %.12f", *result.metrics.pure_state_fidelity);
  std::fprintf(stderr, "\n");
  return 0;
}

int cmd_census(int n_qutrits, int table_id, const std::string& convention,
               const std::string& phase, const std::string& out_path) {
  ent::StructureCensus primary;
  io::json j;
  if (table_id > 0) {
    const auto& table = gates::builtin_table(table_id);
    auto conv = parse_convention(convention);
    if (!conv)
      conv = gates::verify_table(table, std::nullopt, parse_phase(phase))
                 .convention_used;
    const auto set = gates::table_mub_set(table, *conv, parse_phase(phase));
    primary = ent::census(set);
    j = io::census_to_json(primary);
    if (!table.includes_standard) {
      auto with_std = set.bases;
      with_std.insert(with_std.begin(), mub::standard_basis(set.dim, "std"));
      const auto second = ent::census(with_std, primary.n_qutrits);
      j["with_standard"] = {
          {"structure",
           {second.separable, second.biseparable, second.genuinely_entangled}}};
      std::fprintf(stderr, "structure (rows only): (%d,%d,%d); with the "
                           "computational basis: (%d,%d,%d)\n",
                   primary.separable, primary.biseparable,
                   primary.genuinely_entangled, second.separable,
                   second.biseparable, second.genuinely_entangled);
    } else {
      std::fprintf(stderr, "structure: (%d,%d,%d)\n", primary.separable,
                   primary.biseparable, primary.genuinely_entangled);
    }
  } else {
    if (n_qutrits < 2)
      throw CLI::ValidationError("--qutrits",
                                 "census needs 2 or 3 qutrits (no bipartition "
                                 "for a single qutrit)");
    const auto set = mub::build_field_mubs(gf::FieldSpec::gf(dim_for_qutrits(n_qutrits)));
    primary = ent::census(set);
    j = io::census_to_json(primary);
    if (n_qutrits == 2)
      std::fprintf(stderr, "structure: (%d,%d)\n", primary.separable,
                   primary.genuinely_entangled);
    else
      std::fprintf(stderr, "structure: (%d,%d,%d)\n", primary.separable,
                   primary.biseparable, primary.genuinely_entangled);
  }
  emit(j, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutually unbiased bases for qutrit registers"};
  app.require_subcommand(1);

  int n_qutrits = 1;
  int table_id = 0;
  std::string out_path;
  std::string state_path;
  std::string method = "mub";
  std::string shots = "exact";
  std::string convention = "auto";
  std::string phase = "paper";
  uint64_t seed = 0;
  bool project = false;

  auto* gen = app.add_subcommand("mub-gen", "construct and verify a MUB set");
  gen->add_option("--qutrits", n_qutrits, "register size")
      ->required()
      ->check(CLI::Range(1, 3));
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify-table",
                                    "verify a built-in decomposition table");
  verify->add_option("--table", table_id, "table id")->required()->check(CLI::Range(1, 3));
  verify->add_option("--convention", convention)
      ->check(CLI::IsMember({"auto", "left-first", "left-last"}));
  verify->add_option("--phase-gate", phase)
      ->check(CLI::IsMember({"paper", "diag-1-w-w2"}));
  verify->add_option("--out", out_path, "report file");

  auto* complexity =
      app.add_subcommand("complexity", "count nonlocal gates per table row");
  complexity->add_option("--table", table_id, "table id")
      ->required()
      ->check(CLI::Range(1, 3));

  auto* tomo_cmd = app.add_subcommand("tomo", "simulate measurements and reconstruct");
  tomo_cmd->add_option("--state", state_path, "density matrix file")->required();
  tomo_cmd->add_option("--method", method)->check(CLI::IsMember({"mub", "gellmann"}));
  tomo_cmd->add_option("--shots", shots, "per-basis shot count or 'exact'");
  tomo_cmd->add_option("--seed", seed);
  tomo_cmd->add_flag("--project", project, "project the estimate to a physical state");
  tomo_cmd->add_option("--out", out_path, "result file");

  auto* census_cmd = app.add_subcommand("census", "entanglement structure of a MUB set");
  auto* q_opt = census_cmd->add_option("--qutrits", n_qutrits, "field-constructed set")
                    ->check(CLI::Range(1, 3));
  census_cmd->add_option("--table", table_id, "decomposition-table set")
      ->check(CLI::Range(1, 3))
      ->excludes(q_opt);
  census_cmd->add_option("--convention", convention)
      ->check(CLI::IsMember({"auto", "left-first", "left-last"}));
  census_cmd->add_option("--phase-gate", phase)
      ->check(CLI::IsMember({"paper", "diag-1-w-w2"}));
  census_cmd->add_option("--out", out_path, "census file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_mub_gen(n_qutrits, out_path);
    if (verify->parsed())
      return cmd_verify_table(table_id, convention, phase, out_path);
    if (complexity->parsed()) return cmd_complexity(table_id);
    if (tomo_cmd->parsed())
      return cmd_tomo(state_path, method, shots, seed, project, out_path);
    if (census_cmd->parsed()) {
      if (table_id == 0 && !q_opt->count())
        throw CLI::ValidationError("census", "give --qutrits or --table");
      return cmd_census(q_opt->count() ? n_qutrits : 0, table_id, convention,
                        phase, out_path);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
