#include "mubtomo/io.hpp"

#include <fstream>
#include <stdexcept>

namespace mubtomo::io {

using cxla::Cx;
using cxla::Matrix;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw std::invalid_argument("io: empty matrix");
  const int cols = static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(r).size()) != cols)
      throw std::invalid_argument("io: ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const auto& e = j.at(r).at(c);
      m(r, c) = Cx{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

json columns_to_json(const Matrix& m) {
  json cols = json::array();
  for (int k = 0; k < m.cols(); ++k) {
    json v = json::array();
    for (int r = 0; r < m.rows(); ++r)
      v.push_back({m(r, k).real(), m(r, k).imag()});
    cols.push_back(std::move(v));
  }
  return cols;
}

Matrix columns_from_json(const json& j) {
  const int cols = static_cast<int>(j.size());
  if (cols == 0) throw std::invalid_argument("io: empty basis");
  const int rows = static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int k = 0; k < cols; ++k)
    for (int r = 0; r < rows; ++r) {
      const auto& e = j.at(k).at(r);
      m(r, k) = Cx{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  return m;
}

json field_spec_to_json(const gf::FieldSpec& spec) {
  json enumeration = json::array();
  for (const auto& e : spec.enumeration()) {
    json coeffs = json::array();
    for (int i = 0; i < spec.degree(); ++i) coeffs.push_back(e.c[i]);
    enumeration.push_back(std::move(coeffs));
  }
  return json{{"order", spec.order()},
              {"modulus", spec.modulus()},
              {"enumeration", std::move(enumeration)}};
}

gf::FieldSpec field_spec_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  std::vector<gf::FieldElement> enumeration;
  for (const auto& coeffs : j.at("enumeration")) {
    gf::FieldElement e;
    e.order = order;
    for (size_t i = 0; i < coeffs.size() && i < 3; ++i)
      e.c[i] = coeffs.at(i).get<int>();
    enumeration.push_back(e);
  }
  return gf::FieldSpec(order, j.at("modulus").get<std::vector<int>>(),
                       std::move(enumeration));
}

json mub_set_to_json(const mub::MubSet& set) {
  json bases = json::array();
  for (const auto& basis : set.bases)
    bases.push_back(
        {{"label", basis.label}, {"vectors", columns_to_json(basis.vectors)}});
  json out{{"dim", set.dim}, {"bases", std::move(bases)}};
  if (set.field) out["field"] = field_spec_to_json(*set.field);
  return out;
}

mub::MubSet mub_set_from_json(const json& j) {
  mub::MubSet set;
  set.dim = j.at("dim").get<int>();
  if (j.contains("field") && !j.at("field").is_null())
    set.field = field_spec_from_json(j.at("field"));
  for (const auto& b : j.at("bases")) {
    mub::Basis basis;
    basis.label = b.at("label").get<std::string>();
    basis.vectors = columns_from_json(b.at("vectors"));
    basis.dim = basis.vectors.rows();
    basis.provenance = set.field ? mub::Provenance::field_construction
                                 : mub::Provenance::gate_decomposition;
    if (basis.dim != set.dim)
      throw std::invalid_argument("io: basis dimension does not match set");
    set.bases.push_back(std::move(basis));
  }
  return set;
}

json density_to_json(const tomo::DensityMatrix& rho) {
  return json{{"dim", rho.dim}, {"matrix", matrix_to_json(rho.m)}};
}

tomo::DensityMatrix density_from_json(const json& j) {
  Matrix m = matrix_from_json(j.at("matrix"));
  if (j.contains("dim") && j.at("dim").get<int>() != m.rows())
    throw std::invalid_argument("io: declared dim does not match matrix size");
  return tomo::make_density(std::move(m));
}

json unbiasedness_report_to_json(const mub::UnbiasednessReport& report,
                                 const mub::MubSet& set) {
  json pairs = json::array();
  for (const auto& chk : report.cross)
    pairs.push_back({{"pair", {set.bases[chk.i].label, set.bases[chk.j].label}},
                     {"deviation", chk.deviation},
                     {"pass", chk.pass}});
  return json{{"dim", report.dim},
              {"bases", report.basis_count},
              {"tolerance", report.tolerance},
              {"max_deviation", report.max_deviation},
              {"worst_pair",
               {set.bases[report.worst_i].label, set.bases[report.worst_j].label}},
              {"all_pass", report.all_pass},
              {"pairs", std::move(pairs)}};
}

json table_report_to_json(const gates::TableReport& report) {
  json per_row = json::array();
  for (const auto& row : report.per_row)
    per_row.push_back({{"label", row.label},
                       {"unbiased_vs_all", row.unbiased_vs_all},
                       {"worst_pair", {row.label, row.worst_pair}},
                       {"deviation", row.deviation}});
  json out{{"table", report.table_id},
           {"convention_used", gates::to_string(report.convention_used)},
           {"convention_auto_detected", report.convention_auto_detected},
           {"phase_gate_variant", gates::to_string(report.phase_variant)},
           {"bases", report.basis_count},
           {"pairs_checked", report.pairs_checked},
           {"pairs_passed", report.pairs_passed},
           {"max_deviation", report.max_deviation},
           {"all_pass", report.all_pass},
           {"per_row", std::move(per_row)}};
  if (report.rows_unbiased_to_standard)
    out["rows_unbiased_to_standard"] = *report.rows_unbiased_to_standard;
  return out;
}

json census_to_json(const ent::StructureCensus& census) {
  json per_basis = json::array();
  for (const auto& bc : census.per_basis) {
    json ranks = json::object();
    for (const auto& [key, count] : bc.ranks_summary) ranks[key] = count;
    per_basis.push_back({{"label", bc.label},
                         {"class", ent::to_string(bc.cls)},
                         {"uniform", bc.uniform},
                         {"ranks_summary", std::move(ranks)}});
  }
  return json{{"structure",
               {census.separable, census.biseparable, census.genuinely_entangled}},
              {"n_qutrits", census.n_qutrits},
              {"per_basis", std::move(per_basis)}};
}

json result_to_json(const tomo::TomographyResult& result) {
  json metrics{{"frobenius_error", result.metrics.frobenius_error}};
  if (result.metrics.pure_state_fidelity)
    metrics["pure_state_fidelity"] = *result.metrics.pure_state_fidelity;

  json out{{"method", result.method == tomo::Method::mub ? "mub" : "gellmann"},
           {"measurement_count", result.measurement_count},
           {"metrics", std::move(metrics)},
           {"raw_estimate", matrix_to_json(result.raw_estimate)}};
  out["shots"] = result.shots ? json(*result.shots) : json("exact");
  if (result.seed) out["seed"] = *result.seed;
  out["projected_estimate"] = result.projected_estimate
                                  ? matrix_to_json(*result.projected_estimate)
                                  : json();
  if (!result.probabilities.rows.empty())
    out["probabilities"] = result.probabilities.rows;
  if (!result.expectation_values.empty())
    out["expectation_values"] = result.expectation_values;
  return out;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("io: cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("io: write to " + path + " failed");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io: cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace mubtomo::io
