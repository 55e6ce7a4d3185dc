#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mubtomo/exec.hpp"
#include "mubtomo/mub.hpp"

// Qutrit gate primitives (F, R, X), a parser for decomposition words, word
// evaluation, and verification of the built-in decomposition tables.
namespace mubtomo::gates {

using cxla::Matrix;

enum class GateKind { F, R, X };

struct GateToken {
  GateKind kind = GateKind::F;
  int q1 = 1;          // wire for F/R; source (control) for X
  int q2 = 0;          // target for X, unused otherwise
  bool inverse = false;

  bool operator==(const GateToken&) const = default;
};

struct GateWord {
  std::vector<GateToken> tokens;
  int n_qutrits = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Grammar: word := token*; token := ("F"|"R") index inv? | "X" index index
// inv?; index := "1".."3"; inv := "^-1". Whitespace, underscores and braces
// are ignored. Errors carry the offending position in the original text.
GateWord parse_word(std::string_view text, int n_qutrits);
std::string render(const GateWord& word);

// Composition order for a word written token1 token2 ... tokenM:
//   left_applied_first: U = U_M * ... * U_1   (reading order = circuit order)
//   left_applied_last:  U = U_1 * ... * U_M   (reading order = product order)
enum class Convention { left_applied_first, left_applied_last };

// R as defined here is diag(1, w, w). The clock variant diag(1, w, w^2) is
// available for comparison; verify_table reports which one validates a table.
enum class PhaseVariant { standard, clock };

std::string to_string(Convention c);
std::string to_string(PhaseVariant v);

// 3^n x 3^n unitary embedding the gate on its wires, identity elsewhere.
Matrix gate_unitary(const GateToken& token, int n_qutrits,
                    PhaseVariant phase = PhaseVariant::standard);

Matrix evaluate(const GateWord& word, Convention convention,
                PhaseVariant phase = PhaseVariant::standard);

// Basis whose k-th vector is the image of the standard vector |k>.
mub::Basis basis_from_word(std::string label, const GateWord& word,
                           Convention convention,
                           PhaseVariant phase = PhaseVariant::standard);

struct TableRow {
  std::string label;
  std::string word;
};

struct DecompositionTable {
  std::string table_id;  // "I", "II", "III"
  int n_qutrits = 1;
  // Tables I and II count the computational basis as basis 1 and list the
  // remaining d bases; table III lists a complete set of 28 on its own.
  bool includes_standard = true;
  std::vector<TableRow> rows;
};

// The decomposition tables embedded verbatim, id in {1, 2, 3}.
const DecompositionTable& builtin_table(int id);

// "label: word" lines, one row per line; blank lines ignored.
DecompositionTable parse_table(std::istream& in, std::string table_id,
                               int n_qutrits, bool includes_standard);
std::string table_text(const DecompositionTable& table);

// Total count of X tokens (inverse or not) across all rows.
int count_nonlocal(const DecompositionTable& table);

struct RowVerdict {
  std::string label;
  bool unbiased_vs_all = false;
  std::string worst_pair;  // partner basis label of the worst cross pair
  double deviation = 0.0;
};

struct TableReport {
  std::string table_id;
  Convention convention_used = Convention::left_applied_first;
  bool convention_auto_detected = false;
  PhaseVariant phase_variant = PhaseVariant::standard;
  int basis_count = 0;
  int pairs_checked = 0;
  int pairs_passed = 0;
  double max_deviation = 0.0;
  bool all_pass = false;
  std::vector<RowVerdict> per_row;  // table rows only, in table order
  // For tables verified without the computational basis: how many rows are
  // unbiased to it (a complete set of d+1 cannot leave room for one more).
  std::optional<int> rows_unbiased_to_standard;
};

// Builds every row basis (plus the computational basis when the table counts
// it), sweeps all pairs, and reports per-row verdicts. Rows that fail are
// reported, never repaired. With no convention given, both are tried and the
// one passing more pairs wins (ties go to left_applied_first).
TableReport verify_table(const DecompositionTable& table,
                         std::optional<Convention> convention = std::nullopt,
                         PhaseVariant phase = PhaseVariant::standard,
                         double tolerance = tol::kEq, Exec exec = Exec::parallel);

// The verified bases as a MubSet (for census and downstream checks).
mub::MubSet table_mub_set(const DecompositionTable& table, Convention convention,
                          PhaseVariant phase = PhaseVariant::standard);

}  // namespace mubtomo::gates
