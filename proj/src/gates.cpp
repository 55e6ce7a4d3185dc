#include "mubtomo/gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mubtomo::gates {

using cxla::Cx;
using cxla::kOmega;

namespace {

// F|j> = (1/sqrt 3) sum_l omega^(l*j) |l>
Matrix fourier3() {
  Matrix f(3, 3);
  const double amp = 1.0 / std::sqrt(3.0);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j) f(l, j) = amp * kOmega[(l * j) % 3];
  return f;
}

Matrix phase3(PhaseVariant variant) {
  Matrix r = Matrix::identity(3);
  r(1, 1) = kOmega[1];
  r(2, 2) = variant == PhaseVariant::standard ? kOmega[1] : kOmega[2];
  return r;
}

// index of |b_1 ... b_n> with qutrit 1 the most significant base-3 digit
int digit(int index, int wire, int n) {
  int shift = n - wire;
  while (shift-- > 0) index /= 3;
  return index % 3;
}

Matrix embed_local(const Matrix& g, int wire, int n) {
  Matrix out = Matrix::identity(1);
  for (int q = 1; q <= n; ++q)
    out = cxla::kron(out, q == wire ? g : Matrix::identity(3));
  return out;
}

// X|i>|j> = |i>|j - i mod 3> on (source, target); a basis permutation
Matrix controlled_x(int source, int target, int n) {
  const int dim = static_cast<int>(std::pow(3, n) + 0.5);
  Matrix out(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const int src = digit(b, source, n);
    const int tgt = digit(b, target, n);
    const int wire_weight = static_cast<int>(std::pow(3, n - target) + 0.5);
    const int image = b + (((tgt - src + 3) % 3) - tgt) * wire_weight;
    out(image, b) = 1.0;
  }
  return out;
}

}  // namespace

std::string to_string(Convention c) {
  return c == Convention::left_applied_first ? "left-first" : "left-last";
}

std::string to_string(PhaseVariant v) {
  return v == PhaseVariant::standard ? "paper" : "diag-1-w-w2";
}

Matrix gate_unitary(const GateToken& token, int n_qutrits, PhaseVariant phase) {
  if (token.q1 < 1 || token.q1 > n_qutrits ||
      (token.kind == GateKind::X && (token.q2 < 1 || token.q2 > n_qutrits)))
    throw std::invalid_argument("gates: qutrit index out of range");
  Matrix u;
  switch (token.kind) {
    case GateKind::F:
      u = embed_local(fourier3(), token.q1, n_qutrits);
      break;
    case GateKind::R:
      u = embed_local(phase3(phase), token.q1, n_qutrits);
      break;
    case GateKind::X:
      if (token.q1 == token.q2)
        throw std::invalid_argument("gates: X source equals target");
      u = controlled_x(token.q1, token.q2, n_qutrits);
      break;
  }
  return token.inverse ? cxla::dagger(u) : u;
}

GateWord parse_word(std::string_view text, int n_qutrits) {
  GateWord word;
  word.n_qutrits = n_qutrits;

  const auto ignorable = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '_' || ch == '{' || ch == '}';
  };
  const auto fail = [&](const std::string& what, size_t pos) -> ParseError {
    std::ostringstream os;
    os << "gates: " << what << " at position " << pos;
    return ParseError(os.str(), pos);
  };

  size_t i = 0;
  const size_t len = text.size();
  auto skip = [&] {
    while (i < len && ignorable(text[i])) ++i;
  };
  auto read_index = [&]() -> int {
    skip();
    if (i >= len || text[i] < '1' || text[i] > '3')
      throw fail("expected qutrit index 1..3", i);
    const int idx = text[i] - '0';
    ++i;
    if (idx > n_qutrits) throw fail("qutrit index out of range", i - 1);
    return idx;
  };

  while (true) {
    skip();
    if (i >= len) break;
    GateToken tok;
    const size_t start = i;
    switch (text[i]) {
      case 'F': tok.kind = GateKind::F; break;
      case 'R': tok.kind = GateKind::R; break;
      case 'X': tok.kind = GateKind::X; break;
      default: throw fail("unknown gate", start);
    }
    ++i;
    tok.q1 = read_index();
    if (tok.kind == GateKind::X) {
      tok.q2 = read_index();
      if (tok.q1 == tok.q2) throw fail("X source equals target", start);
    }
    skip();
    if (i < len && text[i] == '^') {
      if (i + 2 >= len || text[i + 1] != '-' || text[i + 2] != '1')
        throw fail("expected ^-1", i);
      tok.inverse = true;
      i += 3;
    }
    word.tokens.push_back(tok);
  }
  return word;
}

std::string render(const GateWord& word) {
  std::string out;
  for (const auto& tok : word.tokens) {
    if (!out.empty()) out += ' ';
    switch (tok.kind) {
      case GateKind::F: out += 'F'; break;
      case GateKind::R: out += 'R'; break;
      case GateKind::X: out += 'X'; break;
    }
    out += static_cast<char>('0' + tok.q1);
    if (tok.kind == GateKind::X) out += static_cast<char>('0' + tok.q2);
    if (tok.inverse) out += "^-1";
  }
  return out;
}

Matrix evaluate(const GateWord& word, Convention convention, PhaseVariant phase) {
  const int dim = static_cast<int>(std::pow(3, word.n_qutrits) + 0.5);
  Matrix acc = Matrix::identity(dim);
  for (const auto& tok : word.tokens) {
    const Matrix u = gate_unitary(tok, word.n_qutrits, phase);
    acc = convention == Convention::left_applied_first ? cxla::matmul(u, acc)
                                                       : cxla::matmul(acc, u);
  }
  return acc;
}

mub::Basis basis_from_word(std::string label, const GateWord& word,
                           Convention convention, PhaseVariant phase) {
  Matrix u = evaluate(word, convention, phase);
  return mub::Basis{std::move(label), u.rows(), std::move(u),
                    mub::Provenance::gate_decomposition};
}

namespace {

constexpr const char* kTable1 =
    "2: F1^-1\n"
    "3: F1^-1 R1\n"
    "4: F1^-1 R1^-1\n";

constexpr const char* kTable2 =
    "2: F1^-1 F2^-1\n"
    "3: F1^-1 R1 F2^-1 R2\n"
    "4: F1^-1 X12 F2^-1 R2^-1\n"
    "5: F1^-1 X12^-1 R1 F2^-1 R2^-1\n"
    "6: F1^-1 X12^-1 F2^-1 R1^-1\n"
    "7: F1^-1 R1^-1 F2^-1 R2^-1\n"
    "8: F1^-1 X12^-1 F2^-1 R2\n"
    "9: F1^-1 R1^-1 X12 F2^-1 R2\n"
    "10: F1^-1 R1 X12 F2^-1\n";

constexpr const char* kTable3 =
    "1: F2^-1 X23 F1^-1 F3^-1\n"
    "2: F1^-1 R1^-1 F2^-1 R2^-1 X23 F3^-1 R3^-1\n"
    "3: F1^-1 X13 R3\n"
    "4: F2^-1 R2 X23^-1 F1^-1 X12 R2 F3^-1\n"
    "5: F1^-1 X12^-1 F3^-1\n"
    "6: F2^-1 R2 X23 F1^-1 R1 X13^-1 R3 F3^-1 R3\n"
    "7: F2^-1 X23^-1 R3^-1 F1^-1 R1^-1 X12^-1 R3^-1\n"
    "8: F1^-1 R1^-1 X13^-1 F2^-1 R2 F3^-1 R3^-1\n"
    "9: F1^-1 X13^-1 F2^-1 R2 X23^-1 F3^-1 R3\n"
    "10: F1^-1 R2 X12 X13^-1 F2^-1\n"
    "11: F1^-1 R1 X12^-1 F2^-1 R2 X23^-1 F3^-1\n"
    "12: F1^-1 R1^-1 X13 X12^-1 F2^-1 F3^-1 R3^-1\n"
    "13: F1^-1 X12 F2^-1 R2^-1 X23^-1 F3^-1 R3^-1\n"
    "14: F1^-1 R1 X12 F2^-1 X23 F3^-1 R3\n"
    "15: F2^-1 R2 X23\n"
    "16: F1^-1 R1 X13 F2^-1 R2 X23 F3^-1 R3^-1\n"
    "17: F1^-1 R1^-1 X13 F2^-1 F3^-1\n"
    "18: F1^-1 R1^-1 X13^-1 F2^-1 R2^-1 X23^-1 R3 F3^-1 R3^-1\n"
    "19: F1^-1 R1 X13^-1 F2^-1 R2^-1 F3^-1 R3\n"
    "20: F1^-1 X12 F3^-1 R3^-1\n"
    "21: F1^-1 R1^-1 X12^-1 F2^-1 R2 F3^-1 R3\n"
    "22: F1^-1 X12^-1 F2^-1 X23^-1 F3^-1 R3\n"
    "23: F1^-1 R1^-1 X13 F2^-1 R2^-1 X23^-1\n"
    "24: F1^-1 R1^-1 X13^-1 F2^-1 X23 R3 F3^-1\n"
    "25: F1^-1 R1 X12^-1 X23^-1 F2^-1 R2^-1\n"
    "26: F1^-1 R1 X12 X23^-1 F2^-1 R2^-1 F3^-1\n"
    "27: F1^-1 R1^-1 X12 F2^-1 R2\n"
    "28: F1^-1 R1 F2^-1 X23^-1\n";

}  // namespace

DecompositionTable parse_table(std::istream& in, std::string table_id,
                               int n_qutrits, bool includes_standard) {
  DecompositionTable table;
  table.table_id = std::move(table_id);
  table.n_qutrits = n_qutrits;
  table.includes_standard = includes_standard;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("gates: table row without 'label:' prefix");
    TableRow row;
    row.label = line.substr(first, colon - first);
    const auto start = line.find_first_not_of(" \t", colon + 1);
    const auto end = line.find_last_not_of(" \t\r");
    row.word = start == std::string::npos ? "" : line.substr(start, end - start + 1);
    parse_word(row.word, n_qutrits);  // reject malformed rows up front
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string table_text(const DecompositionTable& table) {
  std::string out;
  for (const auto& row : table.rows) out += row.label + ": " + row.word + "\n";
  return out;
}

const DecompositionTable& builtin_table(int id) {
  static const auto make = [](const char* text, const char* table_id, int n,
                              bool includes_standard) {
    std::istringstream in(text);
    return parse_table(in, table_id, n, includes_standard);
  };
  static const DecompositionTable t1 = make(kTable1, "I", 1, true);
  static const DecompositionTable t2 = make(kTable2, "II", 2, true);
  static const DecompositionTable t3 = make(kTable3, "III", 3, false);
  switch (id) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    default:
      throw std::invalid_argument("gates: table id must be 1, 2 or 3");
  }
}

int count_nonlocal(const DecompositionTable& table) {
  int count = 0;
  for (const auto& row : table.rows)
    for (const auto& tok : parse_word(row.word, table.n_qutrits).tokens)
      if (tok.kind == GateKind::X) ++count;
  return count;
}

mub::MubSet table_mub_set(const DecompositionTable& table, Convention convention,
                          PhaseVariant phase) {
  const int dim = static_cast<int>(std::pow(3, table.n_qutrits) + 0.5);
  mub::MubSet set;
  set.dim = dim;
  const int offset = table.includes_standard ? 1 : 0;
  set.bases.resize(table.rows.size() + offset);
  if (table.includes_standard) set.bases[0] = mub::standard_basis(dim, "1");

  const int rows = static_cast<int>(table.rows.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < rows; ++r) {
    const auto& row = table.rows[r];
    set.bases[r + offset] = basis_from_word(
        row.label, parse_word(row.word, table.n_qutrits), convention, phase);
  }
  return set;
}

namespace {

TableReport report_for(const DecompositionTable& table, Convention convention,
                       PhaseVariant phase, double tolerance, Exec exec) {
  TableReport report;
  report.table_id = table.table_id;
  report.convention_used = convention;
  report.phase_variant = phase;

  const mub::MubSet set = table_mub_set(table, convention, phase);
  const auto scan = mub::verify_unbiased(set, tolerance, exec);

  report.basis_count = scan.basis_count;
  report.pairs_checked = static_cast<int>(scan.cross.size());
  report.max_deviation = scan.max_deviation;
  report.all_pass = scan.all_pass;
  for (const auto& chk : scan.cross)
    if (chk.pass) ++report.pairs_passed;

  const int offset = table.includes_standard ? 1 : 0;
  report.per_row.resize(table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    auto& verdict = report.per_row[r];
    verdict.label = table.rows[r].label;
    verdict.unbiased_vs_all = true;
    const int self = static_cast<int>(r) + offset;
    for (const auto& chk : scan.cross) {
      if (chk.i != self && chk.j != self) continue;
      verdict.unbiased_vs_all = verdict.unbiased_vs_all && chk.pass;
      if (chk.deviation >= verdict.deviation) {
        verdict.deviation = chk.deviation;
        verdict.worst_pair = set.bases[chk.i == self ? chk.j : chk.i].label;
      }
    }
  }

  if (!table.includes_standard) {
    const auto std_basis = mub::standard_basis(set.dim);
    int unbiased = 0;
    for (const auto& basis : set.bases)
      if (mub::pair_deviation(std_basis.vectors, basis.vectors, false) <= tolerance)
        ++unbiased;
    report.rows_unbiased_to_standard = unbiased;
  }
  return report;
}

}  // namespace

TableReport verify_table(const DecompositionTable& table,
                         std::optional<Convention> convention,
                         PhaseVariant phase, double tolerance, Exec exec) {
  if (convention)
    return report_for(table, *convention, phase, tolerance, exec);
  TableReport first =
      report_for(table, Convention::left_applied_first, phase, tolerance, exec);
  TableReport last =
      report_for(table, Convention::left_applied_last, phase, tolerance, exec);
  TableReport& winner = last.pairs_passed > first.pairs_passed ? last : first;
  winner.convention_auto_detected = true;
  return winner;
}

}  // namespace mubtomo::gates
