#include "kw/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kw;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitCollision = 2;
constexpr int kExitBadInput = 3;

struct Options {
  std::string flavor = "bc";
  int n = 2;
  std::string qh = "1/2", th = "1/3", k0 = "2/3", k1 = "3/5", k0p = "5/7",
              k1p = "1/2";
  bool additive = false;
  double alpha = 1.0, beta = 1.0;
  double g = 0.0, g0 = 0.0, g1 = 0.0, g0p = 0.0, g1p = 0.0;
  std::string lambda;
  int max_weight = 2;
  int grid = 64;
  double tol = 1e-8;
  std::string out;
  std::string in;
  std::string suite;
};

ModelParams exact_params(const Options& o) {
  if (o.additive)
    throw std::invalid_argument(
        "this command computes exactly; float (--additive) parameters are "
        "not accepted");
  return ModelParams(o.n, rat_parse(o.qh), rat_parse(o.th), rat_parse(o.k0),
                     rat_parse(o.k1), rat_parse(o.k0p), rat_parse(o.k1p));
}

AdditiveParams additive_params(const Options& o) {
  AdditiveParams add;
  add.alpha = o.alpha;
  add.beta = o.beta;
  add.g = o.g;
  add.g0 = o.g0;
  add.g1 = o.g1;
  add.g0p = o.g0p;
  add.g1p = o.g1p;
  add.validate();
  return add;
}

Partition parse_lambda(const std::string& s, int n, Flavor flavor) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    size_t used = 0;
    parts.push_back(std::stoi(piece, &used));
    if (used != piece.size())
      throw std::invalid_argument("bad --lambda entry '" + piece + "'");
  }
  Partition lam(std::move(parts));
  if (lam.n() != n)
    throw std::invalid_argument("--lambda needs exactly n entries");
  if (!lam.valid(flavor))
    throw std::invalid_argument("--lambda is not a valid weight: " + lam.str());
  return lam;
}

std::vector<Partition> lambda_set(const Options& o, Flavor flavor) {
  if (!o.lambda.empty()) return {parse_lambda(o.lambda, o.n, flavor)};
  return weights_up_to(o.n, o.max_weight, flavor);
}

void emit(const Json& doc, const std::string& out) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + out);
  f << text;
}

int run_polys(const Options& o) {
  Flavor flavor = flavor_parse(o.flavor);
  ModelParams params = exact_params(o);
  OperatorSession session(flavor, params);
  Json doc;
  doc["command"] = "polys";
  doc["flavor"] = flavor_str(flavor);
  doc["n"] = o.n;
  doc["params"] = to_json(params);
  Json polys = Json::array();
  for (const Partition& lam : lambda_set(o, flavor))
    polys.push_back(to_json(ortho_poly(session, lam), params));
  doc["polys"] = std::move(polys);
  emit(doc, o.out);
  return kExitPass;
}

int report_result(const CheckReport& rep, const std::string& out) {
  emit(to_json(rep), out);
  return rep.pass() ? kExitPass : kExitCheckFail;
}

CheckReport check_triangular(OperatorSession& session, const Options& o) {
  CheckReport rep;
  rep.suite = "triangular";
  for (const Partition& lam : lambda_set(o, session.flavor())) {
    std::vector<Partition> ideal = order_ideal(lam, session.flavor());
    for (int r = 1; r <= session.n(); ++r) {
      CheckItem item;
      item.name = "triangular r=" + std::to_string(r) + " lambda=" + lam.str();
      try {
        const auto& ex = session.expansion(r, lam);
        item.pass = true;
        for (const auto& [mu, c] : ex)
          if (!dominance_leq(mu, lam, session.flavor())) {
            item.pass = false;
            item.detail = "support escapes the ideal at " + mu.str();
          }
      } catch (const TriangularityViolation& e) {
        item.pass = false;
        item.detail = e.what();
      }
      rep.items.push_back(std::move(item));
    }
  }
  return rep;
}

CheckReport check_eigen(const Options& o) {
  if (!o.in.empty()) {
    std::ifstream f(o.in);
    if (!f) throw std::invalid_argument("cannot open input file " + o.in);
    Json doc = Json::parse(f);
    PolysDocument parsed = polys_document_from_json(doc);
    OperatorSession session(parsed.flavor, parsed.params);
    CheckReport rep;
    rep.suite = "eigen";
    for (const OrthoPolynomial& poly : parsed.polys) {
      CheckReport one = verify_eigen_poly(session, poly);
      for (auto& item : one.items) rep.items.push_back(std::move(item));
    }
    return rep;
  }
  Flavor flavor = flavor_parse(o.flavor);
  OperatorSession session(flavor, exact_params(o));
  CheckReport rep;
  rep.suite = "eigen";
  for (const Partition& lam : lambda_set(o, flavor)) {
    CheckReport one = verify_joint_eigen(session, lam);
    for (auto& item : one.items) rep.items.push_back(std::move(item));
  }
  return rep;
}

CheckReport check_commute(OperatorSession& session, const Options& o) {
  CheckReport rep;
  rep.suite = "commute";
  if (session.n() < 2) {
    CheckItem item;
    item.name = "commute n=1";
    item.pass = true;
    item.detail = "single operator, nothing to commute";
    rep.items.push_back(std::move(item));
    return rep;
  }
  std::vector<Partition> lams = lambda_set(o, session.flavor());
  for (int r = 1; r <= session.n(); ++r)
    for (int s = r + 1; s <= session.n(); ++s) {
      CheckReport one = verify_commutators(session, r, s, lams);
      for (auto& item : one.items) rep.items.push_back(std::move(item));
    }
  return rep;
}

CheckReport check_limit(const Options& o) {
  if (!o.additive)
    throw std::invalid_argument(
        "the limit suite extrapolates float data; pass --additive with the "
        "additive couplings");
  Flavor flavor = flavor_parse(o.flavor);
  AdditiveParams add = additive_params(o);
  std::vector<double> betas = {1e-1, 1e-2, 1e-3};
  CheckReport rep;
  rep.suite = "limit";
  for (int r = 1; r <= o.n; ++r) {
    // Degenerate reference eigenvalues can vanish when parts of lambda are
    // zero (a zero part for the hyperoctahedral flavor, a symmetric
    // lambda + rho for the other), so the fit set keeps every part positive.
    std::vector<Partition> lams;
    for (Partition mu : weights_up_to(o.n, 2, flavor)) {
      for (int& part : mu.parts) part += 1;
      lams.push_back(std::move(mu));
    }
    LimitReport lr = limit_check(flavor, add, o.n, r, lams, betas, o.tol);
    CheckItem item;
    item.name = "limit r=" + std::to_string(r);
    item.pass = lr.pass;
    std::ostringstream detail;
    detail << "constant " << lr.constant << ", ratios";
    for (const LimitPoint& pt : lr.points) detail << " " << pt.ratio;
    item.detail = detail.str();
    rep.items.push_back(std::move(item));
  }
  return rep;
}

CheckReport check_tilde(const Options& o) {
  ModelParams params = exact_params(o);
  CheckReport rep;
  rep.suite = "tilde";
  for (int r = 1; r <= o.n; ++r)
    for (const Partition& lam : lambda_set(o, Flavor::A)) {
      CheckItem item;
      item.name = "tilde r=" + std::to_string(r) + " lambda=" + lam.str();
      item.pass = transform_tilde_check(params, r, lam, Rat(1, 10));
      rep.items.push_back(std::move(item));
    }
  return rep;
}

int run_check(const Options& o) {
  if (o.suite == "eigen") return report_result(check_eigen(o), o.out);
  if (o.suite == "limit") return report_result(check_limit(o), o.out);
  if (o.suite == "tilde") return report_result(check_tilde(o), o.out);
  Flavor flavor = flavor_parse(o.flavor);
  if (o.suite == "identity")
    return report_result(verify_u_identity(exact_params(o), o.n), o.out);
  if (o.suite == "selfadjoint")
    return report_result(verify_conjugation(exact_params(o)), o.out);
  if (o.suite == "ortho") {
    ModelParams params = exact_params(o);
    std::vector<int> top(o.n, 0);
    top[0] = o.max_weight;
    Partition lam = o.lambda.empty() ? Partition(std::move(top))
                                     : parse_lambda(o.lambda, o.n, flavor);
    std::vector<Partition> ideal = order_ideal(lam, flavor);
    QuadratureGrid grid{o.n, o.grid};
    GramReport rep = gram_check(flavor, ideal, params, grid, o.tol);
    emit(to_json(rep), o.out);
    return rep.pass ? kExitPass : kExitCheckFail;
  }
  OperatorSession session(flavor, exact_params(o));
  if (o.suite == "triangular")
    return report_result(check_triangular(session, o), o.out);
  if (o.suite == "commute")
    return report_result(check_commute(session, o), o.out);
  throw std::invalid_argument("unknown suite '" + o.suite + "'");
}

int run_spectrum(const Options& o) {
  Flavor flavor = flavor_parse(o.flavor);
  Json doc;
  doc["command"] = "spectrum";
  doc["flavor"] = flavor_str(flavor);
  doc["n"] = o.n;
  Json rows = Json::array();
  if (o.additive) {
    AdditiveParams add = additive_params(o);
    doc["mode"] = "additive";
    for (const Partition& lam : weights_up_to(o.n, o.max_weight, flavor)) {
      Json row;
      row["lambda"] = to_json(lam);
      Json eigs = Json::array();
      for (int r = 1; r <= o.n; ++r) {
        double value = 0;
        if (flavor == Flavor::BC) {
          std::vector<double> tv, pv;
          for (int j = 1; j <= o.n; ++j)
            tv.push_back(std::cosh(add.alpha * add.beta *
                                   (lam.parts[j - 1] + add.rho_bc(o.n, j))));
          for (int l = r; l <= o.n; ++l)
            pv.push_back(std::cosh(add.alpha * add.beta * add.rho_bc(o.n, l)));
          value = std::ldexp(spectral_combination<double>(r, tv, pv, 0.0, 1.0), r);
        } else {
          std::vector<double> vs;
          for (int j = 1; j <= o.n; ++j)
            vs.push_back(std::exp(-add.alpha * add.beta *
                                  (lam.parts[j - 1] + add.rho_a(o.n, j))));
          value = elementary_all<double>(vs, 0.0, 1.0)[r];
        }
        eigs.push_back(value);
      }
      row["E"] = std::move(eigs);
      rows.push_back(std::move(row));
    }
  } else {
    ModelParams params = exact_params(o);
    doc["mode"] = "exact";
    doc["params"] = to_json(params);
    for (const Partition& lam : weights_up_to(o.n, o.max_weight, flavor)) {
      Json row;
      row["lambda"] = to_json(lam);
      Json eigs = Json::array();
      for (int r = 1; r <= o.n; ++r)
        eigs.push_back(rat_str(flavor == Flavor::BC
                                   ? params.eigenvalue_bc(r, lam)
                                   : params.eigenvalue_a(r, lam)));
      row["E"] = std::move(eigs);
      rows.push_back(std::move(row));
    }
  }
  doc["rows"] = std::move(rows);
  emit(doc, o.out);
  return kExitPass;
}

void add_common_flags(CLI::App* cmd, Options& o, bool with_additive) {
  cmd->add_option("--flavor", o.flavor, "root system flavor: a or bc")
      ->check(CLI::IsMember({"a", "bc"}));
  cmd->add_option("--n", o.n, "number of variables")->check(CLI::Range(1, 8));
  cmd->add_option("--qh", o.qh, "q^{1/2} as p/q");
  cmd->add_option("--th", o.th, "t^{1/2} as p/q");
  cmd->add_option("--k0", o.k0, "field half power k0 as p/q");
  cmd->add_option("--k1", o.k1, "field half power k1 as p/q");
  cmd->add_option("--k0p", o.k0p, "field half power k0' as p/q");
  cmd->add_option("--k1p", o.k1p, "field half power k1' as p/q");
  if (with_additive) {
    cmd->add_flag("--additive", o.additive, "use additive float parameters");
    cmd->add_option("--alpha", o.alpha, "period scale, > 0");
    cmd->add_option("--beta", o.beta, "shift step, > 0");
    cmd->add_option("--g", o.g, "interaction coupling, >= 0");
    cmd->add_option("--g0", o.g0, "field coupling g0, >= 0");
    cmd->add_option("--g1", o.g1, "field coupling g1, >= 0");
    cmd->add_option("--g0p", o.g0p, "field coupling g0', >= 0");
    cmd->add_option("--g1p", o.g1p, "field coupling g1', >= 0");
  }
  cmd->add_option("--lambda", o.lambda, "single weight, e.g. 2,1");
  cmd->add_option("--max-weight", o.max_weight, "weight bound for sweeps");
  cmd->add_option("--grid", o.grid, "quadrature grid points per dimension");
  cmd->add_option("--tol", o.tol, "numeric tolerance");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commuting difference operators and their joint "
               "eigenpolynomials"};
  app.set_config("--config");
  app.require_subcommand(1);

  Options opt;
  CLI::App* polys = app.add_subcommand("polys", "compute eigenpolynomials");
  add_common_flags(polys, opt, false);
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  add_common_flags(check, opt, true);
  check
      ->add_option("--suite", opt.suite,
                   "triangular|eigen|commute|identity|selfadjoint|ortho|"
                   "limit|tilde")
      ->required();
  check->add_option("--in", opt.in, "re-verify a polys output document");
  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate eigenvalues");
  add_common_flags(spectrum, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitBadInput;
  }

  try {
    if (polys->parsed()) return run_polys(opt);
    if (check->parsed()) return run_check(opt);
    return run_spectrum(opt);
  } catch (const EigenvalueCollision& e) {
    std::cerr << "eigenvalue collision: " << e.what() << "\n";
    return kExitCollision;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFail;
  }
}
