#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ricochet/pascal.hpp"
#include "ricochet/quad_ext.hpp"

namespace ricochet {

using Json = nlohmann::ordered_json;

/// Six conic points as stored on disk:
///   {"points": [[p, q], ...], "field": {"d": 5}}
/// Scalars are strings such as "-3/2"; a coordinate a + b sqrt(d) is the
/// pair ["a", "b"] and needs the field label. [1, 0] is infinity.
struct SextupleDocument {
  std::vector<ConicPoint<QuadExt>> points;
  Integer d = 0;

  /// Coordinatewise equality of the stored pairs, not projective equality.
  friend bool operator==(const SextupleDocument& x, const SextupleDocument& y) {
    if (x.d != y.d || x.points.size() != y.points.size()) return false;
    for (std::size_t k = 0; k < x.points.size(); ++k)
      if (!(x.points[k].p() == y.points[k].p()) || !(x.points[k].q() == y.points[k].q())) return false;
    return true;
  }
};

namespace detail {

[[noreturn]] inline void bad_field(const std::string& field, const std::string& what) {
  throw Error(Errc::malformed_document, field + ": " + what);
}

inline QuadExt scalar_from_json(const Json& j, const std::string& field, const Integer& d) {
  auto rational = [&](const Json& x, const std::string& where) {
    if (!x.is_string()) bad_field(where, "expected a string such as \"3\" or \"-1/2\"");
    try {
      return Rational::parse(x.get<std::string>());
    } catch (const Error& e) {
      bad_field(where, e.what());
    }
  };
  if (j.is_array()) {
    if (j.size() != 2) bad_field(field, "an extension coordinate is a pair [a, b]");
    if (d == 0) bad_field("field.d", "required when a coordinate is a pair");
    return QuadExt(rational(j[0], field + "[0]"), rational(j[1], field + "[1]"), d);
  }
  return QuadExt(rational(j, field));
}

inline Json scalar_to_json(const QuadExt& x) {
  if (x.is_rational()) return x.a().to_string();
  return Json::array({x.a().to_string(), x.b().to_string()});
}

}  // namespace detail

inline SextupleDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::malformed_document, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) detail::bad_field("document", "expected an object");
  SextupleDocument doc;
  bool has_field = false;
  if (j.contains("field")) {
    const Json& f = j["field"];
    if (!f.is_object() || !f.contains("d") || !f["d"].is_number_integer()) detail::bad_field("field.d", "expected an integer");
    doc.d = Integer(f["d"].get<long>());
    if (doc.d == 0 || doc.d == 1 || squarefree_part(doc.d) != doc.d) detail::bad_field("field.d", "must be squarefree and not 0 or 1");
    has_field = true;
  }
  if (!j.contains("points")) detail::bad_field("points", "missing");
  const Json& pts = j["points"];
  if (!pts.is_array() || pts.size() != 6) detail::bad_field("points", "expected an array of six [p, q] pairs");
  bool irrational = false;
  for (std::size_t k = 0; k < 6; ++k) {
    const std::string where = "points[" + std::to_string(k) + "]";
    const Json& pq = pts[k];
    if (!pq.is_array() || pq.size() != 2) detail::bad_field(where, "expected a pair [p, q]");
    QuadExt p = detail::scalar_from_json(pq[0], where + "[0]", doc.d);
    QuadExt q = detail::scalar_from_json(pq[1], where + "[1]", doc.d);
    irrational = irrational || !p.is_rational() || !q.is_rational();
    if (p.is_zero() && q.is_zero()) detail::bad_field(where, "[0, 0] is not a point");
    doc.points.emplace_back(std::move(p), std::move(q));
  }
  if (has_field && !irrational) detail::bad_field("field", "given but no coordinate is a pair");
  if (auto [i, k] = first_collision<QuadExt>(doc.points); i >= 0)
    throw Error(Errc::invalid_sextuple, "points[" + std::to_string(i) + "] and points[" + std::to_string(k) + "] coincide");
  return doc;
}

inline Json document_json(const SextupleDocument& doc) {
  Json pts = Json::array();
  for (const auto& p : doc.points) pts.push_back(Json::array({detail::scalar_to_json(p.p()), detail::scalar_to_json(p.q())}));
  Json j;
  j["points"] = std::move(pts);
  if (doc.d != 0) j["field"] = {{"d", doc.d.get_si()}};
  return j;
}

inline std::string emit_document(const SextupleDocument& doc) { return document_json(doc).dump(2) + "\n"; }

/// Document of six points; the field label is read off the coordinates.
inline SextupleDocument make_document(std::span<const ConicPoint<QuadExt>> pts) {
  SextupleDocument doc;
  for (const auto& p : pts) {
    for (const auto* x : {&p.p(), &p.q()})
      if (x->d() != 0) {
        if (doc.d != 0 && doc.d != x->d()) throw Error(Errc::domain_mismatch, "coordinates from two different fields");
        doc.d = x->d();
      }
    doc.points.push_back(p);
  }
  return doc;
}

}  // namespace ricochet
