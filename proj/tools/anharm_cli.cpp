// Command-line front end: reproducible verification runs with JSON/CSV output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anharm/asymptotics.hpp"
#include "anharm/errors.hpp"
#include "anharm/jsonw.hpp"
#include "anharm/line_complex.hpp"
#include "anharm/qes.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/trees.hpp"
#include "anharm/verify.hpp"
#include "anharm/zeros.hpp"

namespace {

using namespace anharm;

struct PotentialArgs {
  std::string expr;
  std::string coeffs;
  std::string qes;
};

void add_potential_flags(CLI::App* cmd, PotentialArgs& args) {
  cmd->add_option("--potential", args.expr, "potential as a formula, e.g. z^6-7z^2");
  cmd->add_option("--coeffs", args.coeffs, "even coefficients c0,c1,... of sum c_j z^{2j}");
  cmd->add_option("--qes", args.qes, "QES spec m=..,p=..,b=..");
}

std::optional<QesSpec> parse_qes_spec(const std::string& s) {
  QesSpec spec;
  int found = 0;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return std::nullopt;
    std::string key = item.substr(0, eq);
    double value = std::stod(item.substr(eq + 1));
    if (key == "m") spec.m = static_cast<int>(value);
    else if (key == "p") spec.p = static_cast<int>(value);
    else if (key == "b") spec.b = value;
    else return std::nullopt;
    ++found;
  }
  if (found != 3) return std::nullopt;
  return spec;
}

EvenPolynomial resolve_potential(const PotentialArgs& args, std::optional<QesSpec>* qes_out) {
  int given = !args.expr.empty() + !args.coeffs.empty() + !args.qes.empty();
  if (given != 1)
    throw std::invalid_argument("exactly one of --potential/--coeffs/--qes is required");
  if (!args.expr.empty()) return parse_potential(args.expr);
  if (!args.coeffs.empty()) {
    std::vector<double> c;
    std::stringstream ss(args.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stod(item));
    return EvenPolynomial(c);
  }
  auto spec = parse_qes_spec(args.qes);
  if (!spec) throw std::invalid_argument("cannot parse --qes (expected m=..,p=..,b=..)");
  if (qes_out) *qes_out = spec;
  return qes_potential(spec->m, spec->p, spec->b);
}

Box parse_box(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) {
    double v = std::stod(s);
    return {v, v};
  }
  return {std::stod(s.substr(0, x)), std::stod(s.substr(x + 1))};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(path, std::ios::binary);
    out << text;
    out << "\n";
  }
}

jsonw::Object census_json(const ZeroCensus& c) {
  jsonw::Object o;
  o.put("k", c.k);
  o.put("lambda", c.lambda);
  o.put("box", jsonw::Object().put("x_max", c.box.x_max).put("y_max", c.box.y_max));
  o.put("real_zeros", jsonw::Array::of(c.real_zeros));
  o.put("imaginary_zeros", jsonw::Array::of(c.imaginary_zeros));
  o.put("offaxis_count", c.offaxis_count);
  o.put("quadrant_counts", jsonw::Array::of(c.quadrant_counts));
  o.put("quadrant_zeros", jsonw::Array::of_complex(c.quadrant_zeros));
  o.put("whole_box_count", c.whole_box_count);
  o.put("consistent", c.consistent);
  return o;
}

std::string suite_json(const SuiteReport& rep) {
  jsonw::Object o;
  o.put("suite", rep.suite);
  jsonw::Array checks;
  for (const auto& c : rep.checks) {
    jsonw::Object co;
    co.put("name", c.name);
    co.put("pass", c.pass);
    if (!c.detail.empty()) co.put("detail", c.detail);
    checks.push(co);
  }
  o.put("checks", checks);
  o.put("pass", rep.pass);
  return o.dump();
}

int finish_suite(const SuiteReport& rep, const std::string& out_path) {
  emit(suite_json(rep), out_path);
  if (!rep.pass) {
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "FAIL " << c.name << " " << c.detail << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra, zero censuses and tree combinatorics of even polynomial oscillators"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("-o,--output", out_path, "write the result to a file instead of stdout");

  // ---- spectrum ----
  auto* sp = app.add_subcommand("spectrum", "eigenvalues with certified indices");
  PotentialArgs sp_pot;
  add_potential_flags(sp, sp_pot);
  int sp_K = 0;
  double sp_tol = defaults::kEigenTol;
  sp->add_option("--K", sp_K, "largest eigenvalue index");
  sp->add_option("--tol", sp_tol, "eigenvalue tolerance");

  // ---- zeros ----
  auto* zc = app.add_subcommand("zeros", "zero census of the k-th eigenfunction");
  PotentialArgs zc_pot;
  add_potential_flags(zc, zc_pot);
  int zc_k = 0;
  std::string zc_box = "3x3";
  double zc_tol = defaults::kZeroTol;
  zc->add_option("--k", zc_k, "eigenvalue index");
  zc->add_option("--box", zc_box, "census box, e.g. 3x3");
  zc->add_option("--tol", zc_tol, "zero position tolerance");

  // ---- qes ----
  auto* qs = app.add_subcommand("qes", "closed-form sextic eigenpairs");
  std::string qs_spec;
  qs->add_option("--qes", qs_spec, "spec m=..,p=..,b=..")->required();

  // ---- asymptotic ----
  auto* as = app.add_subcommand("asymptotic", "sector asymptotic values of y/y1");
  PotentialArgs as_pot;
  add_potential_flags(as, as_pot);
  int as_k = 0;
  double as_tol = 1e-8;
  as->add_option("--k", as_k, "eigenvalue index");
  as->add_option("--tol", as_tol, "stabilization tolerance");

  // ---- gscan ----
  auto* gs = app.add_subcommand("gscan", "sample g_{k,m,p}(b) over a b grid (CSV)");
  int gs_k = 0, gs_m = 0, gs_p = 0;
  double gs_bmin = -3.0, gs_bmax = 3.0;
  int gs_n = 13;
  gs->add_option("--k", gs_k);
  gs->add_option("--m", gs_m);
  gs->add_option("--p", gs_p);
  gs->add_option("--bmin", gs_bmin);
  gs->add_option("--bmax", gs_bmax);
  gs->add_option("--steps", gs_n, "number of grid points");

  // ---- trees ----
  auto* tr = app.add_subcommand("trees", "tree enumeration and line complex validation");
  auto* tr_enum = tr->add_subcommand("enumerate", "double-symmetric trees");
  int tr_ends = 8;
  bool tr_axes = false;
  tr_enum->add_option("--ends", tr_ends, "number of unbounded ends");
  tr_enum->add_flag("--axes", tr_axes, "allow ends on the coordinate axes");
  auto* tr_val = tr->add_subcommand("validate", "validate a line complex JSON file");
  std::string tr_input;
  tr_val->add_option("--input", tr_input, "line complex JSON file")->required();
  auto* tr_sample = tr->add_subcommand("sample", "write a sample line complex");
  std::string tr_what = "exp";
  tr_sample->add_option("--what", tr_what, "exp | theorem3");

  // ---- verify ----
  auto* vf = app.add_subcommand("verify", "theorem verification suites");
  vf->require_subcommand(1);
  auto* vf1 = vf->add_subcommand("theorem1");
  PotentialArgs vf1_pot;
  add_potential_flags(vf1, vf1_pot);
  int vf1_K = 3;
  std::string vf1_box = "3x3";
  double vf1_tol = defaults::kZeroTol;
  vf1->add_option("--K", vf1_K);
  vf1->add_option("--box", vf1_box);
  vf1->add_option("--tol", vf1_tol);
  auto* vf2 = vf->add_subcommand("theorem2");
  std::string vf2_spec;
  std::string vf2_box = "3x3";
  double vf2_tol = defaults::kZeroTol;
  vf2->add_option("--qes", vf2_spec)->required();
  vf2->add_option("--box", vf2_box);
  vf2->add_option("--tol", vf2_tol);
  auto* vfc = vf->add_subcommand("corollary");
  int vfc_m = 1;
  std::string vfc_b = "-2,0,2";
  double vfc_tol = 1e-6;
  vfc->add_option("--mmax", vfc_m);
  vfc->add_option("--b", vfc_b, "comma-separated b values");
  vfc->add_option("--tol", vfc_tol);
  auto* vft = vf->add_subcommand("trees");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) {
      EvenPolynomial P = resolve_potential(sp_pot, nullptr);
      auto pairs = eigenvalues(P, sp_K, sp_tol);
      jsonw::Array arr;
      for (const auto& e : pairs) {
        jsonw::Object o;
        o.put("k", e.k);
        o.put("lambda", e.lambda);
        o.put("real_zero_count", e.real_zero_count);
        arr.push(o);
      }
      emit(arr.dump(), out_path);
      return 0;
    }
    if (zc->parsed()) {
      EvenPolynomial P = resolve_potential(zc_pot, nullptr);
      Eigenpair pair = eigenvalue_k(P, zc_k, defaults::kEigenTol);
      ZeroCensus c = census(P, pair.lambda, pair.parity, parse_box(zc_box), zc_tol, zc_k);
      emit(census_json(c).dump(), out_path);
      return verify_axis_confinement(c) ? 0 : 2;
    }
    if (qs->parsed()) {
      auto spec = parse_qes_spec(qs_spec);
      if (!spec) throw std::invalid_argument("cannot parse --qes");
      auto sols = qes_solve(*spec);
      jsonw::Object top;
      top.put("m", spec->m);
      top.put("p", spec->p);
      top.put("b", spec->b);
      jsonw::Array arr;
      for (const auto& s : sols) {
        auto [m_tree, n_tree] = classify(s, spec->p);
        jsonw::Object o;
        o.put("k", s.k);
        o.put("lambda", s.lambda);
        o.put("q_coeffs", jsonw::Array::of(s.q_coeffs));
        o.put("u_roots", jsonw::Array::of(s.u_roots));
        o.put("residual", s.residual);
        o.put("m_tree", m_tree);
        o.put("n_tree", n_tree);
        arr.push(o);
      }
      top.put("solutions", arr);
      emit(top.dump(), out_path);
      return 0;
    }
    if (as->parsed()) {
      std::optional<QesSpec> spec;
      EvenPolynomial P = resolve_potential(as_pot, &spec);
      double lambda;
      Parity parity;
      if (spec) {
        int k = as_k;
        auto sols = qes_solve(*spec);
        if (k < 0 || k > spec->m)
          throw std::invalid_argument("asymptotic: k out of range for the QES spec");
        lambda = sols[k].lambda;
        parity = parity_of_index(2 * k + spec->p);
      } else {
        Eigenpair pair = eigenvalue_k(P, as_k, defaults::kEigenTol);
        lambda = pair.lambda;
        parity = pair.parity;
      }
      AsymptoticTable t = asymptotic_table(P, lambda, parity, as_tol);
      jsonw::Object o;
      o.put("d", t.d);
      o.put("k", as_k);
      o.put("lambda", lambda);
      o.put("radius", t.radius);
      o.put("values", jsonw::Array::of_complex(t.values));
      emit(o.dump(), out_path);
      return 0;
    }
    if (gs->parsed()) {
      std::vector<double> grid;
      for (int i = 0; i < gs_n; ++i)
        grid.push_back(gs_n == 1 ? gs_bmin
                                 : gs_bmin + (gs_bmax - gs_bmin) * i / (gs_n - 1));
      GScan scan = surjectivity_scan(gs_k, gs_m, gs_p, grid);
      std::string csv = "b,g\n";
      char buf[80];
      for (std::size_t i = 0; i < scan.b_values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", scan.b_values[i],
                      scan.g_values[i]);
        csv += buf;
      }
      emit(csv, out_path);
      return 0;
    }
    if (tr->parsed()) {
      if (tr_enum->parsed()) {
        auto forms = trees::enumerate_double_symmetric(tr_ends, tr_axes);
        jsonw::Object o;
        o.put("ends", tr_ends);
        o.put("ends_on_axes", tr_axes);
        o.put("count", static_cast<int>(forms.size()));
        o.put("forms", jsonw::Array::of(forms));
        emit(o.dump(), out_path);
        return 0;
      }
      if (tr_val->parsed()) {
        std::ifstream in(tr_input);
        if (!in) throw std::invalid_argument("cannot open " + tr_input);
        std::stringstream ss;
        ss << in.rdbuf();
        auto L = lc::from_json(ss.str());
        auto rep = lc::validate_line_complex(L);
        jsonw::Object o;
        o.put("structure_ok", rep.structure_ok);
        o.put("bipartite_ok", rep.bipartite_ok);
        o.put("degree_ok", rep.degree_ok);
        o.put("faces_ok", rep.faces_ok);
        o.put("labels_ok", rep.labels_ok);
        o.put("cyclic_order_ok", rep.cyclic_order_ok);
        o.put("propagation_ok", rep.propagation_ok);
        o.put("pass", rep.pass);
        jsonw::Array viol;
        for (const auto& v : rep.violations) viol.push(v);
        o.put("violations", viol);
        emit(o.dump(), out_path);
        return rep.pass ? 0 : 2;
      }
      if (tr_sample->parsed()) {
        if (tr_what == "exp") {
          emit(lc::to_json(lc::exp_chain(4)), out_path);
          return 0;
        }
        if (tr_what == "theorem3") {
          auto instances = lc::theorem3_instances(2, 1);
          if (instances.empty()) throw std::runtime_error("no instance generated");
          emit(lc::to_json(instances.front()), out_path);
          return 0;
        }
        throw std::invalid_argument("unknown sample kind " + tr_what);
      }
      std::cerr << "trees: expected a subcommand (enumerate | validate | sample)\n";
      return 1;
    }
    if (vf->parsed()) {
      if (vf1->parsed()) {
        EvenPolynomial P = resolve_potential(vf1_pot, nullptr);
        return finish_suite(verify_theorem1(P, vf1_K, parse_box(vf1_box), vf1_tol), out_path);
      }
      if (vf2->parsed()) {
        auto spec = parse_qes_spec(vf2_spec);
        if (!spec) throw std::invalid_argument("cannot parse --qes");
        return finish_suite(verify_theorem2(*spec, parse_box(vf2_box), vf2_tol), out_path);
      }
      if (vfc->parsed()) {
        std::vector<double> bs;
        std::stringstream ss(vfc_b);
        std::string item;
        while (std::getline(ss, item, ',')) bs.push_back(std::stod(item));
        return finish_suite(verify_corollary(vfc_m, bs, vfc_tol), out_path);
      }
      if (vft->parsed()) return finish_suite(verify_trees(), out_path);
    }
  } catch (const ConvergenceFailure& e) {
    std::cerr << "convergence failure: " << e.what() << " bracket [" << e.bracket_lo << ", "
              << e.bracket_hi << "]\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
