#include "model_file.hpp"

#include <fstream>

#include "mcc/hirzebruch.hpp"
#include "mcc/motives.hpp"

namespace mcc::cli {

namespace {

const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(where) + ": missing key '" + key + "'");
  }
  return j.at(key);
}

std::string require_string(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) throw InputError(std::string(where) + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

long require_int(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw InputError(std::string(where) + ": '" + key + "' must be an integer");
  return v.get<long>();
}

Rational parse_rational(const Json& v, const char* where) {
  if (!v.is_string()) throw InputError(std::string(where) + ": rationals are written as \"p/q\" strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw InputError(std::string(where) + ": " + e.what());
  }
}

Json genus_terms(const LPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json{{"yNum", e[0]}, {"c", c.to_string()}});
  return arr;
}

LPoly genus_from_terms(const Json& arr, const char* where) {
  if (!arr.is_array()) throw InputError(std::string(where) + ": expected an array of {yNum, c}");
  LPoly p(vars::genus());
  for (const auto& t : arr) {
    const long e = require_int(t, "yNum", where);
    p += LPoly::monomial(vars::genus(), Exponents{static_cast<int>(e)}, parse_rational(require(t, "c", where), where));
  }
  return p;
}

Json class_to_json(const HomologyModel& m, const HClass& c, bool rational_only) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (rational_only) {
      obj[m.basis[i].id] = c[i].to_rational().to_string();
    } else {
      obj[m.basis[i].id] = genus_terms(c[i]);
    }
  }
  return obj;
}

}  // namespace

Json model_to_json(const HomologyModel& m) {
  Json j;
  j["name"] = m.name;
  j["dim"] = m.dim;
  j["proper"] = m.proper;
  Json basis = Json::array();
  for (const auto& b : m.basis) basis.push_back(Json{{"id", b.id}, {"deg", b.deg}});
  j["basis"] = basis;
  j["zeroDegreeBasisId"] = m.zero_degree_index ? m.basis[*m.zero_degree_index].id : std::string();
  j["ty_class"] = class_to_json(m, m.ty_class, false);
  Json e = Json::array();
  for (const auto& [ex, c] : m.e_poly.terms()) {
    e.push_back(Json{{"u", ex[0] / 2}, {"v", ex[1] / 2}, {"c", c.numerator().get_si()}});
  }
  j["e_poly"] = e;
  if (m.chern_class) j["c_class"] = class_to_json(m, *m.chern_class, true);
  return j;
}

HomologyModel model_from_json(const Json& j) {
  constexpr const char* where = "model";
  if (!j.is_object()) throw InputError("model file must contain a JSON object");
  HomologyModel m;
  m.name = require_string(j, "name", where);
  m.dim = static_cast<int>(require_int(j, "dim", where));
  const Json& proper = require(j, "proper", where);
  if (!proper.is_boolean()) throw InputError("model: 'proper' must be a boolean");
  m.proper = proper.get<bool>();

  const Json& basis = require(j, "basis", where);
  if (!basis.is_array()) throw InputError("model: 'basis' must be an array");
  for (const auto& b : basis) {
    m.basis.push_back({require_string(b, "id", "basis element"), static_cast<int>(require_int(b, "deg", "basis element"))});
  }

  const std::string zero_id = require_string(j, "zeroDegreeBasisId", where);
  if (!zero_id.empty()) {
    m.zero_degree_index = m.index_of(zero_id);
    if (!m.zero_degree_index) throw InputError("model: zeroDegreeBasisId '" + zero_id + "' is not a basis id");
  }

  const Json& ty = require(j, "ty_class", where);
  if (!ty.is_object()) throw InputError("model: 'ty_class' must be an object keyed by basis id");
  m.ty_class = HClass(m.size());
  for (const auto& [id, terms] : ty.items()) {
    const auto idx = m.index_of(id);
    if (!idx) throw InputError("model: ty_class refers to unknown basis id '" + id + "'");
    try {
      m.ty_class.set(*idx, genus_from_terms(terms, "ty_class"));
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError(std::string("ty_class: ") + e.what());
    }
  }

  const Json& e_poly = require(j, "e_poly", where);
  if (!e_poly.is_array()) throw InputError("model: 'e_poly' must be an array of {u, v, c}");
  m.e_poly = LPoly(vars::hodge());
  for (const auto& t : e_poly) {
    const auto u = static_cast<int>(require_int(t, "u", "e_poly"));
    const auto v = static_cast<int>(require_int(t, "v", "e_poly"));
    m.e_poly += LPoly::monomial(vars::hodge(), Exponents{2 * u, 2 * v}, Rational(require_int(t, "c", "e_poly")));
  }

  if (j.contains("c_class")) {
    const Json& cc = j.at("c_class");
    if (!cc.is_object()) throw InputError("model: 'c_class' must be an object keyed by basis id");
    HClass c(m.size());
    for (const auto& [id, value] : cc.items()) {
      const auto idx = m.index_of(id);
      if (!idx) throw InputError("model: c_class refers to unknown basis id '" + id + "'");
      c.set(*idx, LPoly(vars::genus(), parse_rational(value, "c_class")));
    }
    m.chern_class = c;
  }

  try {
    m.validate();
  } catch (const Error& e) {
    throw InputError(std::string("model: ") + e.what());
  }
  if (m.proper && !(degree(m, m.ty_class) == hodge_to_chi_minus_y(m.e_poly))) {
    throw InputError("model: degree of ty_class (" + degree(m, m.ty_class).to_string() +
                     ") differs from chi_{-y} of e_poly (" + hodge_to_chi_minus_y(m.e_poly).to_string() + ")");
  }
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

HomologyModel resolve_model(const std::string& builtin, const std::string& file) {
  if (builtin.empty() == file.empty()) throw InputError("give exactly one of --builtin and --model");
  if (!builtin.empty()) {
    try {
      return builtin_model(builtin);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }
  return model_from_json(read_json_file(file));
}

PSeries series_from_json(const Json& j) {
  constexpr const char* where = "series";
  const std::string var = require_string(j, "var", where);
  VarSet vs;
  if (var == "L") {
    vs = vars::motive();
  } else if (var == "y") {
    vs = vars::genus();
  } else {
    throw InputError("series: 'var' must be \"L\" or \"y\"");
  }
  const long order = require_int(j, "order", where);
  if (order < 0) throw InputError("series: 'order' must be nonnegative");
  const Json& coeffs = require(j, "coefficients", where);
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
    throw InputError("series: 'coefficients' must list order + 1 entries");
  }
  std::vector<LPoly> c;
  for (const auto& terms : coeffs) {
    if (!terms.is_array()) throw InputError("series: each coefficient is an array of {e, c}");
    LPoly p(vs);
    for (const auto& t : terms) {
      try {
        p += LPoly::monomial(vs, Exponents{static_cast<int>(require_int(t, "e", where))},
                             parse_rational(require(t, "c", where), where));
      } catch (const InputError&) {
        throw;
      } catch (const Error& e) {
        throw InputError(std::string("series: ") + e.what());
      }
    }
    c.push_back(p);
  }
  return PSeries::from_coeffs(std::move(c));
}

Json series_to_json(const PSeries& s) {
  Json j;
  j["var"] = s[0].vars() == vars::genus() ? "y" : "L";
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (const auto& p : s.coeffs()) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"e", e[0]}, {"c", c.to_string()}});
    coeffs.push_back(terms);
  }
  j["coefficients"] = coeffs;
  return j;
}

}  // namespace mcc::cli
