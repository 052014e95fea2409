#include "kw/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace kw {

std::string flavor_str(Flavor f) { return f == Flavor::A ? "a" : "bc"; }

Flavor flavor_parse(const std::string& s) {
  if (s == "a") return Flavor::A;
  if (s == "bc") return Flavor::BC;
  throw std::invalid_argument("flavor must be 'a' or 'bc', got '" + s + "'");
}

Json to_json(const Rat& x) { return rat_str(x); }

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exponents"] =
        std::vector<int>(e.begin(), e.begin() + std::max(p.nvars(), 1));
    term["coeff"] = rat_str(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json to_json(const RatFunc& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den_expanded());
  return j;
}

Json to_json(const OpTerm& t) {
  Json j;
  j["shift"] = t.shift;
  j["num"] = to_json(t.coeff.num());
  j["den"] = to_json(t.coeff.den_expanded());
  return j;
}

Json to_json(const DiffOperator& op) {
  Json j;
  j["flavor"] = flavor_str(op.flavor());
  j["r"] = op.r();
  j["n"] = op.n();
  Json terms = Json::array();
  for (const OpTerm& t : op.terms()) terms.push_back(to_json(t));
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const ModelParams& p) {
  Json j;
  j["n"] = p.n();
  j["qh"] = rat_str(p.qh());
  j["th"] = rat_str(p.th());
  j["k0"] = rat_str(p.k0());
  j["k1"] = rat_str(p.k1());
  j["k0p"] = rat_str(p.k0p());
  j["k1p"] = rat_str(p.k1p());
  j["q"] = rat_str(p.q());
  j["t"] = rat_str(p.t());
  j["a"] = rat_str(p.a());
  j["b"] = rat_str(p.b());
  j["c"] = rat_str(p.c());
  j["d"] = rat_str(p.d());
  j["kappa"] = rat_str(p.kappa());
  return j;
}

Json to_json(const OrthoPolynomial& poly, const ModelParams& params) {
  Json j;
  j["flavor"] = flavor_str(poly.flavor);
  j["lambda"] = to_json(poly.lam);
  j["params"] = to_json(params);
  Json coeffs = Json::array();
  for (const auto& [mu, c] : poly.coeffs) {
    Json entry;
    entry["mu"] = to_json(mu);
    entry["coeff"] = rat_str(c);
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  Json eigs = Json::array();
  for (int r = 1; r <= params.n(); ++r)
    eigs.push_back(rat_str(poly.flavor == Flavor::BC
                               ? params.eigenvalue_bc(r, poly.lam)
                               : params.eigenvalue_a(r, poly.lam)));
  j["eigenvalues"] = std::move(eigs);
  return j;
}

Json to_json(const CheckItem& item) {
  Json j;
  j["name"] = item.name;
  j["pass"] = item.pass;
  if (!item.detail.empty()) j["detail"] = item.detail;
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass();
  Json items = Json::array();
  for (const CheckItem& it : report.items) items.push_back(to_json(it));
  j["items"] = std::move(items);
  return j;
}

Json to_json(const GramEntry& e) {
  Json j;
  j["a"] = to_json(e.a);
  j["b"] = to_json(e.b);
  j["value"] = e.value;
  j["ratio"] = e.ratio;
  return j;
}

Json to_json(const GramReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["worst_ratio"] = report.worst_ratio;
  Json entries = Json::array();
  for (const GramEntry& e : report.offdiag) entries.push_back(to_json(e));
  j["offdiag"] = std::move(entries);
  return j;
}

Json to_json(const LimitPoint& point) {
  Json j;
  j["lambda"] = to_json(point.lam);
  j["limit"] = point.limit;
  j["reference"] = point.reference;
  j["ratio"] = point.ratio;
  j["extrap_error"] = point.extrap_error;
  j["samples"] = point.samples;
  return j;
}

Json to_json(const LimitReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["constant"] = report.constant;
  Json points = Json::array();
  for (const LimitPoint& p : report.points) points.push_back(to_json(p));
  j["points"] = std::move(points);
  return j;
}

Rat rat_from_json(const Json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected a \"p/q\" string, got " + j.dump());
  return rat_parse(j.get<std::string>());
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("expected an integer array, got " + j.dump());
  return Partition(j.get<std::vector<int>>());
}

PolysDocument polys_document_from_json(const Json& j) {
  PolysDocument doc;
  doc.flavor = flavor_parse(j.at("flavor").get<std::string>());
  const Json& pj = j.at("params");
  doc.params = ModelParams(pj.at("n").get<int>(), rat_from_json(pj.at("qh")),
                           rat_from_json(pj.at("th")), rat_from_json(pj.at("k0")),
                           rat_from_json(pj.at("k1")), rat_from_json(pj.at("k0p")),
                           rat_from_json(pj.at("k1p")));
  for (const Json& pjson : j.at("polys")) {
    OrthoPolynomial poly;
    poly.flavor = doc.flavor;
    poly.lam = partition_from_json(pjson.at("lambda"));
    for (const Json& entry : pjson.at("coeffs"))
      poly.coeffs.emplace_back(partition_from_json(entry.at("mu")),
                               rat_from_json(entry.at("coeff")));
    doc.polys.push_back(std::move(poly));
  }
  return doc;
}

}  // namespace kw
