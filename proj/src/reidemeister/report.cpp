#include "rspec/report.hpp"

namespace rspec::report {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  throw ParseError("expected an integer");
}

json index_to_json(const intmat::IndexValue& v) {
  if (v.is_infinite()) return "infinity";
  return integer_to_json(v.value());
}

intmat::IndexValue index_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return intmat::IndexValue::infinite();
  return intmat::IndexValue(integer_from_json(j));
}

json matrix_to_json(const intmat::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

intmat::Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    IntVector r;
    for (const auto& e : row) r.push_back(integer_from_json(e));
    rows.push_back(std::move(r));
  }
  return intmat::Matrix::from_rows(rows);
}

json result_to_json(const reidemeister::AutoSpec& spec, const reidemeister::ReidemeisterResult& r) {
  json out;
  out["rank"] = spec.rank;
  out["class"] = spec.nil_class;
  out["matrix"] = matrix_to_json(spec.a);
  json layers = json::array();
  for (const auto& layer : r.layers) {
    json l;
    l["degree"] = layer.degree;
    l["matrix"] = matrix_to_json(layer.matrix);
    l["q"] = index_to_json(layer.q);
    layers.push_back(std::move(l));
  }
  out["layers"] = std::move(layers);
  out["R"] = index_to_json(r.r_value);
  return out;
}

reidemeister::ReidemeisterResult result_from_json(const json& j, reidemeister::AutoSpec* spec) {
  try {
    if (spec) {
      spec->rank = j.at("rank").get<int>();
      spec->nil_class = j.at("class").get<int>();
      spec->a = matrix_from_json(j.at("matrix"));
    }
    reidemeister::ReidemeisterResult r;
    for (const auto& l : j.at("layers")) {
      reidemeister::LayerReport layer;
      layer.degree = l.at("degree").get<int>();
      layer.matrix = matrix_from_json(l.at("matrix"));
      layer.q = index_from_json(l.at("q"));
      r.layers.push_back(std::move(layer));
    }
    r.r_value = index_from_json(j.at("R"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report schema: ") + e.what());
  }
}

std::string spectrum_to_csv(const reidemeister::SpectrumReport& r) {
  std::string out = "value,witness\n";
  for (const auto& [value, witness] : r.attained)
    out += value.get_str() + ",\"" + intmat::format_matrix(witness) + "\"\n";
  return out;
}

json spectrum_to_json(const reidemeister::SpectrumReport& r) {
  json out;
  out["rank"] = r.rank;
  out["class"] = r.nil_class;
  out["bound"] = r.entry_bound;
  out["det_filter"] = r.det_filter ? json(*r.det_filter) : json(nullptr);
  out["candidates"] = r.candidates;
  out["automorphisms"] = r.automorphisms;
  out["infinite"] = r.infinite;
  json values = json::array();
  for (const auto& [value, witness] : r.attained) {
    json row;
    row["value"] = integer_to_json(value);
    row["witness"] = intmat::format_matrix(witness);
    values.push_back(std::move(row));
  }
  out["values"] = std::move(values);
  out["predictions_checked"] = r.predictions_checked;
  out["violations"] = r.violations;
  return out;
}

}  // namespace rspec::report
