#pragma once
//
// Serialization of computation reports.
//
//   compute  -> {"rank", "class", "matrix", "layers": [{"degree", "matrix", "q"}], "R"}
//   spectrum -> CSV "value,witness" or JSON with the same rows plus counts
//
// Matrices are arrays of rows of integers; q and R are integers or the
// string "infinity". Integers beyond 64 bits are written as decimal strings.
//

#include <string>

#include "json.hpp"
#include "rspec/reidemeister.hpp"

namespace rspec::report {

using json = nlohmann::ordered_json;

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json index_to_json(const intmat::IndexValue& v);
intmat::IndexValue index_from_json(const json& j);
json matrix_to_json(const intmat::Matrix& m);
intmat::Matrix matrix_from_json(const json& j);

json result_to_json(const reidemeister::AutoSpec& spec, const reidemeister::ReidemeisterResult& r);
// Inverse of result_to_json; validates the schema.
reidemeister::ReidemeisterResult result_from_json(const json& j, reidemeister::AutoSpec* spec = nullptr);

std::string spectrum_to_csv(const reidemeister::SpectrumReport& r);
json spectrum_to_json(const reidemeister::SpectrumReport& r);

}  // namespace rspec::report
