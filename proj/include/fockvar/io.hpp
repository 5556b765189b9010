#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockvar/error.hpp"
#include "fockvar/exponents.hpp"
#include "fockvar/functions.hpp"
#include "fockvar/modular.hpp"
#include "fockvar/operators.hpp"
#include "fockvar/report.hpp"

namespace fockvar::io {

using json = nlohmann::json;

inline json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_text(s.str(), path);
}

namespace detail {

inline double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(what + " must be finite");
  return v;
}

inline double field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + " needs \"" + key + "\"");
  return number(j.at(key), what + "." + key);
}

inline void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw InputError(what + ": unknown key \"" + k + "\"");
  }
}

}  // namespace detail

inline cplx complex_from(const json& j, const std::string& what = "complex") {
  if (j.is_number()) return {detail::number(j, what), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError(what + " must be [re, im]");
  return {detail::number(j[0], what + "[0]"), detail::number(j[1], what + "[1]")};
}

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

// {"const": v} | {"log_decay": {"base", "amp"}} | {"radial_bump": {"base",
// "amp", "radius"}} | {"expr": s, "p_minus", "p_plus", "p_inf"?}.
inline VariableExponent exponent_from(const json& j) {
  if (!j.is_object()) throw InputError("exponent must be a JSON object");
  if (j.contains("const")) {
    detail::only_keys(j, {"const"}, "exponent");
    return VariableExponent::constant(detail::number(j.at("const"), "exponent.const"));
  }
  if (j.contains("log_decay")) {
    detail::only_keys(j, {"log_decay"}, "exponent");
    const auto& b = j.at("log_decay");
    return VariableExponent::log_decay(detail::field(b, "base", "log_decay"), detail::field(b, "amp", "log_decay"));
  }
  if (j.contains("radial_bump")) {
    detail::only_keys(j, {"radial_bump"}, "exponent");
    const auto& b = j.at("radial_bump");
    return VariableExponent::radial_bump(detail::field(b, "base", "radial_bump"), detail::field(b, "amp", "radial_bump"),
                                         detail::field(b, "radius", "radial_bump"));
  }
  if (j.contains("expr")) {
    detail::only_keys(j, {"expr", "p_minus", "p_plus", "p_inf"}, "exponent");
    if (!j.at("expr").is_string()) throw InputError("exponent.expr must be a string");
    std::optional<double> inf;
    if (j.contains("p_inf")) inf = detail::number(j.at("p_inf"), "exponent.p_inf");
    return VariableExponent::expression(j.at("expr").get<std::string>(), detail::field(j, "p_minus", "exponent"),
                                        detail::field(j, "p_plus", "exponent"), inf);
  }
  throw InputError("exponent needs one of const, log_decay, radial_bump, expr");
}

// {"poly": [[re,im],...], "kernels": [{"c": [re,im], "a": [re,im]},...]}.
inline EntireFunction function_from(const json& j) {
  if (!j.is_object()) throw InputError("function must be a JSON object");
  detail::only_keys(j, {"poly", "kernels"}, "function");
  std::vector<cplx> poly;
  std::vector<KernelTerm> kernels;
  if (j.contains("poly")) {
    if (!j.at("poly").is_array()) throw InputError("function.poly must be an array");
    for (const auto& c : j.at("poly")) poly.push_back(complex_from(c, "function.poly entry"));
  }
  if (j.contains("kernels")) {
    if (!j.at("kernels").is_array()) throw InputError("function.kernels must be an array");
    for (const auto& k : j.at("kernels")) {
      if (!k.is_object() || !k.contains("c") || !k.contains("a")) throw InputError("kernel term needs \"c\" and \"a\"");
      detail::only_keys(k, {"c", "a"}, "kernel term");
      kernels.push_back({complex_from(k.at("c"), "kernel c"), complex_from(k.at("a"), "kernel a")});
    }
  }
  return EntireFunction(std::move(poly), std::move(kernels));
}

// Function JSON plus "conj_monomials": [{"c": [re,im], "m": int, "n": int}]
// for non-holomorphic inputs to the projection.
inline Integrand integrand_from(const json& j) {
  if (!j.is_object()) throw InputError("integrand must be a JSON object");
  json entire = j;
  entire.erase("conj_monomials");
  const EntireFunction f = function_from(entire);
  std::vector<Integrand> terms;
  if (j.contains("conj_monomials")) {
    if (!j.at("conj_monomials").is_array()) throw InputError("conj_monomials must be an array");
    for (const auto& t : j.at("conj_monomials")) {
      if (!t.is_object()) throw InputError("conj_monomials entry must be an object");
      detail::only_keys(t, {"c", "m", "n"}, "conj_monomials entry");
      const cplx c = t.contains("c") ? complex_from(t.at("c"), "conj_monomials c") : cplx{1.0, 0.0};
      if (!t.contains("m") || !t.contains("n") || !t.at("m").is_number_integer() || !t.at("n").is_number_integer())
        throw InputError("conj_monomials entry needs integer m and n");
      terms.push_back(conj_monomial(t.at("m").get<int>(), t.at("n").get<int>(), c));
    }
  }
  if (terms.empty()) return Integrand(f);
  GrowthBound g = f.growth();
  std::string label = f.describe();
  for (const auto& t : terms) {
    const auto b = t.growth();
    g = {g.scale + b.scale, std::max(g.degree, b.degree), g.linear, g.quadratic};
    label += "+" + t.label();
  }
  return Integrand(
      label,
      [f, terms](cplx w) {
        cplx v = f(w);
        for (const auto& t : terms) v += t(w);
        return v;
      },
      g);
}

// {"const": c} | {"gaussian": beta, "scale"?: s} | {"power": gamma, "scale"?: s}.
inline WeightSpec weight_from(const json& j) {
  if (!j.is_object()) throw InputError("weight must be a JSON object");
  const double s = j.contains("scale") ? detail::number(j.at("scale"), "weight.scale") : 1.0;
  if (j.contains("const")) {
    detail::only_keys(j, {"const"}, "weight");
    return WeightSpec::constant(detail::number(j.at("const"), "weight.const"));
  }
  if (j.contains("gaussian")) {
    detail::only_keys(j, {"gaussian", "scale"}, "weight");
    return WeightSpec::gaussian(detail::number(j.at("gaussian"), "weight.gaussian"), s);
  }
  if (j.contains("power")) {
    detail::only_keys(j, {"power", "scale"}, "weight");
    return WeightSpec::power(detail::number(j.at("power"), "weight.power"), s);
  }
  throw InputError("weight needs one of const, gaussian, power");
}

inline std::vector<cplx> points_from(const json& j) {
  if (!j.is_array()) throw InputError("points must be an array of [re, im]");
  std::vector<cplx> out;
  for (const auto& p : j) out.push_back(complex_from(p, "point"));
  return out;
}

inline json to_json(const CaseRecord& c) {
  json j = {{"id", digest(c.inputs)}, {"inputs", c.inputs}, {"lhs", c.lhs}, {"tolerance", c.tolerance},
            {"passed", c.passed()}};
  if (c.rhs) {
    j["rhs"] = *c.rhs;
    j["margin"] = *c.margin();
  }
  for (const auto& [k, v] : c.extras) j[k] = v;
  return j;
}

inline json to_json(const VerificationReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  json j = {{"property", r.property}, {"anchor", r.anchor},       {"passed", r.passed()},
            {"cases", r.cases.size()}, {"failures", r.failures()}, {"records", std::move(cases)}};
  const double w = r.worst_margin();
  j["worst_margin"] = std::isfinite(w) ? json(w) : json(nullptr);
  if (r.measured) j["measured"] = *r.measured;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// property,id,inputs,lhs,rhs,margin,tolerance,passed
inline std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "property,id,inputs,lhs,rhs,margin,tolerance,passed\n";
  for (const auto& r : reports)
    for (const auto& c : r.cases) {
      out += csv_escape(r.property) + "," + digest(c.inputs) + "," + csv_escape(c.inputs) + "," + to_text(c.lhs) + ",";
      out += (c.rhs ? to_text(*c.rhs) : "") + "," + (c.rhs ? to_text(*c.margin()) : "") + ",";
      out += to_text(c.tolerance) + "," + (c.passed() ? "1" : "0") + "\n";
    }
  return out;
}

}  // namespace fockvar::io
