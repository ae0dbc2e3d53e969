#include "permspec/serialize.hpp"

#include <fstream>

namespace permspec {

Json json_of(const ExactValue& v) { return {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}}; }

ExactValue exact_from_json(const Json& j) {
  if (j.is_number_integer()) return ExactValue(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_exact(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto text = [](const Json& part) { return part.is_string() ? part.get<std::string>() : part.dump(); };
    return parse_exact(text(j.at("num")) + "/" + text(j.at("den")));
  }
  throw Error(Errc::parse_error, "expected a rational, got " + j.dump());
}

Json json_of(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& v : s.values()) out.push_back(json_of(v));
  return out;
}

Json json_of(const Partition& p) { return Json(p.parts); }

Json json_of(const Weights& w) {
  return {{"alpha", json_of(w.alpha)}, {"beta", json_of(w.beta)}, {"gamma", json_of(w.gamma)}};
}

Json json_of(const SpectrumReport& r) {
  Json attaining = Json::object();
  for (const auto& [value, parts] : r.attaining) {
    Json list = Json::array();
    for (const auto& p : parts) list.push_back(json_of(p));
    attaining[to_string(value)] = list;
  }
  return {{"n", r.n},
          {"weights", r.weights ? json_of(*r.weights) : Json(nullptr)},
          {"values", json_of(r.spectrum)},
          {"attaining_partitions", attaining}};
}

Json json_of(const SequenceTable& t) {
  Json values = Json::array();
  for (const auto& [n, v] : t.values) values.push_back({{"n", n}, {"value", json_of(v)}});
  return {{"name", t.name},
          {"source", t.source == SequenceSource::ClosedForm ? "closed-form" : "recursion"},
          {"values", values}};
}

Json json_of(const ExtremalReport& r) {
  Json conditions = Json::array();
  for (const auto& c : r.conditions_checked) conditions.push_back({{"name", c.name}, {"holds", c.holds}});
  Json parts = Json::array();
  for (const auto& p : r.attaining_partitions) parts.push_back(json_of(p));
  Json out{{"n", r.n},
           {"class", to_string(r.spec.kind())},
           {"weights", r.spec.weights() ? json_of(*r.spec.weights()) : Json(nullptr)},
           {"max_value", json_of(r.max_value)},
           {"attaining_partitions", parts},
           {"conditions_checked", conditions},
           {"closed_form", to_string(r.closed_form)}};
  out["closed_form_value"] = r.closed_form_value ? json_of(*r.closed_form_value) : Json(nullptr);
  return out;
}

Json json_of(const RankedMagnitudes& r) {
  Json values = Json::array();
  for (const auto& e : r.values) {
    Json prov = Json::array();
    for (const auto& p : e.provenance) prov.push_back(json_of(p));
    values.push_back({{"value", json_of(e.value)}, {"coefficient", json_of(e.coefficient)}, {"provenance", prov}});
  }
  return {{"kind", to_string(r.kind)},
          {"n", r.n},
          {"t", r.t},
          {"j", r.j},
          {"floor", json_of(r.floor)},
          {"conditional_on_mci", r.conditional_on_mci},
          {"unknown_ceiling", r.unknown_ceiling ? json_of(*r.unknown_ceiling) : Json(nullptr)},
          {"missing_sizes", r.missing_sizes},
          {"values", values}};
}

Json json_of(const CirculantReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"offsets", c.offsets.offsets}, {"permanent", json_of(ExactValue(c.permanent))}});
  return {{"n", r.n}, {"classes", classes}, {"spectrum", json_of(r.spectrum)}, {"bound", r.bound}};
}

Json json_of(const ParityReport& r) {
  Json contributing = Json::object();
  for (const auto& [size, count] : r.contributing_subsets) contributing[std::to_string(size)] = count;
  return {{"id", r.id},
          {"parity", r.odd ? "odd" : "even"},
          {"distinct_columns", r.distinct_columns},
          {"testing_sequence", r.testing_sequence},
          {"contributing_subsets", contributing}};
}

Json json_of(const ParityCensus& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"offsets", e.offsets.offsets},
                       {"parity", e.odd_ryser ? "odd" : "even"},
                       {"determinant_parity", e.odd_det ? "odd" : "even"}});
  return {{"n", c.n}, {"odd", c.odd}, {"even", c.even}, {"agreements", c.agreements}, {"entries", entries}};
}

Json json_of(const ScanResult& r) {
  return {{"count", r.count.get_str()},
          {"spectrum", json_of(r.spectrum)},
          {"indecomposable_spectrum", json_of(r.indecomposable)}};
}

Json json_of(const MciReport& r) {
  Json mu = Json::object();
  for (const auto& [n, v] : r.mu1) mu[std::to_string(n)] = json_of(v);
  auto pair_json = [](const MciPair& p) {
    return Json{{"n1", p.n1}, {"n2", p.n2}, {"lhs", json_of(p.lhs)}, {"rhs", json_of(p.rhs)}, {"holds", p.holds}};
  };
  Json pairs = Json::array(), violations = Json::array(), bounds = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(pair_json(p));
  for (const auto& p : r.violations) violations.push_back(pair_json(p));
  for (const auto& b : r.bounds) bounds.push_back({{"n", b.n}, {"mu1", json_of(b.mu1)}, {"holds", b.holds}});
  return {{"n_max", r.n_max}, {"mu1", mu}, {"pairs", pairs}, {"violations", violations}, {"mu1_bounds", bounds}};
}

Json json_of(const ClaimCheck& c) {
  Json claimed_only = Json::array(), computed_only = Json::array();
  for (const auto& v : c.claimed_only) claimed_only.push_back(json_of(v));
  for (const auto& v : c.computed_only) computed_only.push_back(json_of(v));
  return {{"n", c.n},
          {"computed", json_of(c.computed)},
          {"claimed", json_of(c.claimed)},
          {"agrees", c.agrees},
          {"claimed_only", claimed_only},
          {"computed_only", computed_only}};
}

Json json_of(const WeightedMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json spectra_to_json(const SmallSpectra& spectra) {
  Json out = Json::object();
  for (const auto& [size, s] : spectra) out[std::to_string(size)] = json_of(s);
  return out;
}

SmallSpectra spectra_from_json(const Json& j) {
  // enumerate output wraps the map
  if (j.is_object() && j.contains("spectra")) return spectra_from_json(j.at("spectra"));
  if (!j.is_object()) throw Error(Errc::parse_error, "spectra must be a JSON object keyed by size");
  SmallSpectra out;
  for (const auto& [key, list] : j.items()) {
    long size = 0;
    try {
      size = std::stol(key);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "spectrum key '" + key + "' is not a size");
    }
    if (!list.is_array()) throw Error(Errc::parse_error, "spectrum for size " + key + " must be an array");
    std::vector<ExactValue> values;
    for (const auto& v : list) values.push_back(exact_from_json(v));
    out[size] = Spectrum(std::move(values));
  }
  return out;
}

SmallSpectra load_spectra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return spectra_from_json(j);
}

void save_spectra(const std::string& path, const SmallSpectra& spectra) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << spectra_to_json(spectra).dump(2) << '\n';
}

}  // namespace permspec
