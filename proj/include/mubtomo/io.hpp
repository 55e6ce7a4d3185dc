#pragma once

#include <string>

#include <json.hpp>

#include "mubtomo/ent.hpp"
#include "mubtomo/gates.hpp"
#include "mubtomo/mub.hpp"
#include "mubtomo/tomo.hpp"

// JSON file formats. Complex entries are [re, im] pairs at full double
// precision; all files are UTF-8.
namespace mubtomo::io {

using nlohmann::json;

json matrix_to_json(const cxla::Matrix& m);          // rows of [re, im]
cxla::Matrix matrix_from_json(const json& j);
json columns_to_json(const cxla::Matrix& m);         // list of column vectors
cxla::Matrix columns_from_json(const json& j);

json field_spec_to_json(const gf::FieldSpec& spec);
gf::FieldSpec field_spec_from_json(const json& j);

// {"dim": d, "field": {...}, "bases": [{"label": ..., "vectors": [...]}]}
json mub_set_to_json(const mub::MubSet& set);
mub::MubSet mub_set_from_json(const json& j);

// {"dim": d, "matrix": [[[re,im],...],...]}; validates the loaded state.
json density_to_json(const tomo::DensityMatrix& rho);
tomo::DensityMatrix density_from_json(const json& j);

json unbiasedness_report_to_json(const mub::UnbiasednessReport& report,
                                 const mub::MubSet& set);
json table_report_to_json(const gates::TableReport& report);
json census_to_json(const ent::StructureCensus& census);
json result_to_json(const tomo::TomographyResult& result);

void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

}  // namespace mubtomo::io
