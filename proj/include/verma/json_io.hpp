#pragma once

// JSON forms of module vectors and analysis reports. Every number that is not
// a small count is an exact rational string. Reports carry "schema":"verma/1".

#include <string>
#include <vector>

#include <json.hpp>

#include "verma/errors.hpp"
#include "verma/exact.hpp"
#include "verma/gl2_verma.hpp"
#include "verma/recurrence.hpp"
#include "verma/rootsys.hpp"
#include "verma/shapovalov.hpp"
#include "verma/singular.hpp"
#include "verma/text.hpp"

namespace verma {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "verma/1";

inline json rat_list_json(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const Rat& x : xs) a.push_back(x.str());
  return a;
}

inline json to_json(const ModuleVector& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms()) terms.push_back({{"mono", m.indices()}, {"coef", c.str()}});
  return {{"terms", terms}};
}

inline ModuleVector module_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw invalid_input("module vector JSON needs a \"terms\" array");
  ModuleVector v;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("mono") || !t.contains("coef") || !t["mono"].is_array() ||
        !t["coef"].is_string())
      throw invalid_input("each term needs \"mono\" (integer array) and \"coef\" (rational string)");
    std::vector<unsigned> idx;
    for (const auto& x : t["mono"]) {
      if (!x.is_number_integer() || x.get<long>() < 1) throw invalid_input("monomial indices must be positive integers");
      idx.push_back(x.get<unsigned>());
    }
    Monomial m(idx);
    if (m.indices() != idx) throw invalid_input("monomial indices must be ascending");
    v.add(m, Rat::parse(t["coef"].get<std::string>()));
  }
  return v;
}

inline json to_json(const FCombination& fc) {
  json terms = json::array();
  for (const auto& [f, c] : fc) terms.push_back({{"f", f}, {"coef", c.str()}});
  return terms;
}

inline json to_json(const RecurrenceWitness& w) {
  return {{"c", rat_list_json(w.c)}, {"N", w.N}};
}

inline json to_json(const RationalityVerdict& v) {
  json j = {{"kind", to_string(v.kind)}, {"budget", v.budget}};
  if (v.rational) j["rational"] = format_rational_fn(*v.rational);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

inline json to_json(const SingularSearchResult& r) {
  json basis = json::array();
  for (std::size_t i = 0; i < r.basis.size(); ++i)
    basis.push_back({{"f_terms", to_json(r.f_basis[i])}, {"vector", to_json(r.basis[i])}});
  return {{"level", r.level},
          {"degree_bound", r.degree_bound},
          {"relation_bound", r.relation_bound},
          {"stabilized", r.stabilized},
          {"candidates", r.candidates.size()},
          {"basis", basis}};
}

inline json to_json(const GramReport& g) {
  return {{"level", g.level}, {"spanning_size", g.spanning_size}, {"rank", g.rank}};
}

inline json to_json(const CharacterResult& c) {
  json dims = json::array();
  for (const Integer& d : c.dims) dims.push_back(d.fits_slong_p() ? json(d.get_si()) : json(d.get_str()));
  return {{"l", c.l},
          {"dims", dims},
          {"alphas", rat_list_json(c.alphas)},
          {"betas", rat_list_json(c.betas)},
          {"tie_break", reorder_tie_break()}};
}

inline json to_json(const RootSystem& rs) {
  return {{"count", rs.positive_roots.size()}, {"positive_roots", rs.positive_roots}, {"highest", rs.highest()}};
}

/// Cartan matrix from a JSON array of integer rows.
inline IntMatrix cartan_from_json(const json& j) {
  if (!j.is_array()) throw invalid_input("Cartan matrix JSON must be an array of rows");
  IntMatrix a;
  for (const auto& row : j) {
    if (!row.is_array()) throw invalid_input("Cartan matrix JSON must be an array of rows");
    std::vector<long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw invalid_input("Cartan matrix entries must be integers");
      r.push_back(x.get<long>());
    }
    a.push_back(std::move(r));
  }
  return a;
}

/// "[[2,-1],[-1,2]]" or a type label such as "G2".
inline IntMatrix parse_cartan(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw invalid_input(std::string("malformed Cartan matrix JSON: ") + e.what());
    }
    return cartan_from_json(j);
  }
  return cartan_of_type(text);
}

}  // namespace verma
