#pragma once

#include "kw/diagonalize.hpp"
#include "kw/params.hpp"
#include "kw/quadrature.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kw {

// All output goes through ordered_json so a fixed insertion order yields
// byte-identical documents for identical configs.
using Json = nlohmann::ordered_json;

std::string flavor_str(Flavor f);
Flavor flavor_parse(const std::string& s);  // "a" or "bc"

Json to_json(const Rat& x);        // "p/q" string
Json to_json(const Partition& p);  // plain integer array
// Array of {exponents, coeff} in grlex order; exponents are truncated to
// the polynomial's variable count.
Json to_json(const LaurentPoly& p);
// Debug shape {num, den} with the denominator expanded to a polynomial.
Json to_json(const RatFunc& f);
Json to_json(const OpTerm& t);
Json to_json(const DiffOperator& op);
Json to_json(const ModelParams& p);

// {flavor, lambda, params, coeffs, eigenvalues} with eigenvalues for
// r = 1..n attached.
Json to_json(const OrthoPolynomial& poly, const ModelParams& params);

Json to_json(const CheckItem& item);
Json to_json(const CheckReport& report);
Json to_json(const GramEntry& e);
Json to_json(const GramReport& report);
Json to_json(const LimitPoint& point);
Json to_json(const LimitReport& report);

Rat rat_from_json(const Json& j);
Partition partition_from_json(const Json& j);

// Reads back a full polys document (the cmd_polys output shape): flavor,
// parameters and the polynomial list, for re-verification runs.
struct PolysDocument {
  Flavor flavor = Flavor::BC;
  ModelParams params = ModelParams::trivial(1, Rat(1, 2));
  std::vector<OrthoPolynomial> polys;
};
PolysDocument polys_document_from_json(const Json& j);

}  // namespace kw
