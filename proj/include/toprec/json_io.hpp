#pragma once

// JSON forms of coefficients, series, multi-forms, tables and curve files.
//
//   Rat         "a/b" (or "a")
//   Poly        ["c0", "c1", ...] ascending in degree
//   Coeff       {"num": Poly, "den": Poly}; a Rat string is accepted on input
//   Series      {"var": "ζ", "lo": -3, "hi": 8, "coeffs": {"-3": Coeff, ...}}
//               hi is omitted for exact (polynomial) series
//   MultiForm   {"n": 1, "terms": [{"slots": [{"bp": 0, "order": 4}], "coeff": "1/8" | Coeff, "text": "1/8"}]}
//   Curve file  {"name", "x": {"num", "den", "log"?}, "y": {"type": "rational", "num", "den"}
//                | {"type": "germs", "series": [Series, ...]}, "branchpoints": [{"a": Coeff,
//                "involution": {"type": "global", "num", "den"} | {"type": "solve"}}],
//                "parameter": "p", "params": {name: Coeff}}

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/extract.hpp"
#include "toprec/multiform.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"
#include "toprec/upoly.hpp"

namespace toprec {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars.

inline json to_json(const Rat& r) { return r.str(); }

inline json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

inline json to_json(const Coeff& c) { return json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ValidationError("expected a rational string, got " + j.dump());
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected a coefficient list, got " + j.dump());
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

inline Coeff coeff_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("num")) throw ValidationError("Coeff object lacks \"num\"");
    Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
    return coeff_normalize(poly_from_json(j.at("num")), den);
  }
  return Coeff(rat_from_json(j));
}

template <Field F>
F field_from_json(const json& j);
template <>
inline Rat field_from_json<Rat>(const json& j) {
  if (j.is_object()) return coeff_from_json(j).as_rat();
  return rat_from_json(j);
}
template <>
inline Coeff field_from_json<Coeff>(const json& j) {
  return coeff_from_json(j);
}

// ---------------------------------------------------------------------------
// Series.

template <Field F>
json to_json(const LaurentSeries<F>& s) {
  json j;
  j["var"] = s.var();
  j["lo"] = s.is_known_zero() ? (s.exact() ? 0 : s.hi()) : s.lo();
  if (!s.exact()) j["hi"] = s.hi();
  json c = json::object();
  for (int e = s.lo(); e < s.stored_end(); ++e) {
    F v = s.coeff(e);
    if (!v.is_zero()) c[std::to_string(e)] = to_json(v);
  }
  j["coeffs"] = c;
  return j;
}

template <Field F>
LaurentSeries<F> series_from_json(const json& j) {
  std::string var = j.value("var", std::string("z"));
  int hi = j.contains("hi") ? j.at("hi").get<int>() : kExact;
  const json& c = j.at("coeffs");
  if (c.empty()) return hi >= kExact ? LaurentSeries<F>(0, {}, kExact, var) : LaurentSeries<F>::unknown_from(hi, var);
  int lo = kExact, top = -kExact;
  for (const auto& [k, v] : c.items()) {
    int e = std::stoi(k);
    lo = std::min(lo, e);
    top = std::max(top, e);
  }
  if (j.contains("lo")) lo = std::min(lo, j.at("lo").get<int>());
  if (top >= hi) throw ValidationError("series coefficient at or beyond hi");
  std::vector<F> out(static_cast<std::size_t>(top - lo + 1), F(0L));
  for (const auto& [k, v] : c.items()) out[static_cast<std::size_t>(std::stoi(k) - lo)] = field_from_json<F>(v);
  return LaurentSeries<F>(lo, std::move(out), hi, var);
}

// ---------------------------------------------------------------------------
// Multi-forms.  Rational coefficients are written as strings, others as Coeff
// objects; "text" is a human-readable copy.

inline bool is_rational(const Rat&) { return true; }
inline bool is_rational(const Coeff& c) { return c.is_constant(); }

/// A rational value as a string, anything else as its structured form.
template <Field F>
json scalar_json(const F& c) {
  return is_rational(c) ? json(to_string(c)) : to_json(c);
}

template <Field F>
json to_json(const MultiForm<F>& m) {
  json terms = json::array();
  for (const auto& [slots, c] : m.terms()) {
    json sl = json::array();
    for (const auto& s : slots) sl.push_back(json{{"bp", s.bp}, {"order", s.order}});
    terms.push_back(json{{"slots", sl}, {"coeff", scalar_json(c)}, {"text", to_string(c)}});
  }
  return json{{"n", m.n()}, {"terms", terms}};
}

template <Field F>
MultiForm<F> multiform_from_json(const json& j) {
  MultiForm<F> m(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Slots s;
    for (const auto& x : t.at("slots")) s.push_back(Slot{x.at("bp").get<int>(), x.at("order").get<int>()});
    m.add(s, field_from_json<F>(t.at("coeff")));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Tables.

inline json to_json(const MapCountTable& t) {
  json rows = json::array();
  for (const auto& [f, v] : t.by_faces)
    rows.push_back(json{{"g", t.g}, {"faces", f}, {"value", v.str()}, {"normalization", "rooted, marked face size " + std::to_string(t.marked_size)}});
  return json{{"kind", "quadrangulations"}, {"g", t.g}, {"marked_face_size", t.marked_size}, {"t4", t.t4.str()}, {"rows", rows}};
}

inline json to_json(const HurwitzTable& t) {
  json rows = json::array();
  for (const auto& e : t.entries)
    rows.push_back(json{{"g", t.g},
                        {"mu", e.mu},
                        {"value", e.number.str()},
                        {"coefficient", e.coefficient.str()},
                        {"normalization", "H = (2g-2+n+|mu|)! * coefficient; stabilizer " + e.symmetry.str() + " not divided out"}});
  return json{{"kind", "hurwitz"}, {"g", t.g}, {"n", t.n}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Curve files.

inline RatMap<Coeff> ratmap_from_json(const json& j) {
  std::vector<Coeff> num, den;
  for (const auto& e : j.at("num")) num.push_back(coeff_from_json(e));
  if (j.contains("den"))
    for (const auto& e : j.at("den")) den.push_back(coeff_from_json(e));
  else
    den.push_back(Coeff(1L));
  return RatMap<Coeff>(UPoly<Coeff>(std::move(num)), UPoly<Coeff>(std::move(den)));
}

inline json to_json(const UPoly<Coeff>& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

inline json to_json(const RatMap<Coeff>& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline SpectralCurve<Coeff> curve_from_json(const json& j) {
  SpectralCurve<Coeff> c;
  try {
    c.name = j.value("name", std::string("custom"));
    c.x.rational = ratmap_from_json(j.at("x"));
    if (j.at("x").contains("log")) c.x.log_coeff = coeff_from_json(j.at("x").at("log"));
    const json& y = j.at("y");
    std::string type = y.value("type", std::string("rational"));
    if (type == "rational") {
      c.y = ratmap_from_json(y);
    } else if (type == "germs") {
      std::vector<Germ<Coeff>> germs;
      for (const auto& s : y.at("series")) germs.push_back(fixed_germ(series_from_json<Coeff>(s).rename(kLocalVar)));
      c.y = std::move(germs);
    } else {
      throw ValidationError("unknown y type '" + type + "'");
    }
    if (j.contains("bergman") && j.at("bergman") != "standard")
      throw ValidationError("only the standard Bergman kernel dz1 dz2/(z1-z2)^2 is supported");
    for (const auto& b : j.at("branchpoints")) {
      Branchpoint<Coeff> bp{coeff_from_json(b.at("a")), std::nullopt};
      const json& inv = b.contains("involution") ? b.at("involution") : json{{"type", "solve"}};
      std::string it = inv.value("type", std::string("solve"));
      if (it == "global") bp.rho = ratmap_from_json(inv);
      else if (it != "solve") throw ValidationError("unknown involution type '" + it + "'");
      c.branchpoints.push_back(std::move(bp));
    }
    c.param = j.value("parameter", std::string("p"));
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items()) c.params[k] = coeff_from_json(v);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("curve file: ") + e.what());
  }
  return c;
}

}  // namespace toprec
