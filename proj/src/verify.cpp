#include "anharm/verify.hpp"

#include <cmath>
#include <numbers>

#include "anharm/asymptotics.hpp"
#include "anharm/line_complex.hpp"
#include "anharm/spectrum.hpp"
#include "anharm/trees.hpp"

namespace anharm {

void SuiteReport::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok, detail});
  pass = pass && ok;
}

SuiteReport verify_theorem1(const EvenPolynomial& P, int K, Box box, double tol) {
  SuiteReport rep;
  rep.suite = "theorem1";
  if (P.degree() != 4) {
    rep.add("degree is 4", false, "degree " + std::to_string(P.degree()));
    return rep;
  }
  auto pairs = eigenvalues(P, K, defaults::kEigenTol);
  for (const auto& pair : pairs) {
    ZeroCensus c = census(P, pair.lambda, pair.parity, box, tol, pair.k);
    std::string tag = "k=" + std::to_string(pair.k);
    rep.add(tag + " axis confinement", verify_axis_confinement(c),
            "off-axis count " + std::to_string(c.offaxis_count));
    rep.add(tag + " index law", static_cast<int>(c.real_zeros.size()) == pair.k,
            std::to_string(c.real_zeros.size()) + " real zeros");
    rep.add(tag + " winding consistency", c.consistent);
    rep.add(tag + " imaginary zeros present", !c.imaginary_zeros.empty());
  }
  return rep;
}

SuiteReport verify_theorem2(const QesSpec& spec, Box box, double tol) {
  SuiteReport rep;
  rep.suite = "theorem2";
  auto sols = qes_solve(spec);
  EvenPolynomial P = qes_potential(spec.m, spec.p, spec.b);
  for (const auto& sol : sols) {
    std::string tag = "k=" + std::to_string(sol.k);
    auto [lift_real, lift_imag] = lift_zeros(sol, spec.p);
    // The box is grown to hold every lifted zero and clipped to edges whose
    // decay-sector action the contour arithmetic can still resolve.
    double need_x = lift_real.empty() ? 0.3 : std::abs(lift_real.back()) + 0.05;
    double need_y = lift_imag.empty() ? 0.3 : std::abs(lift_imag.back()) + 0.05;
    Box use = safe_census_box(P, sol.lambda, need_x, need_y);
    use.x_max = std::min(use.x_max, std::max(box.x_max, need_x));
    use.y_max = std::min(use.y_max, std::max(box.y_max, need_y));
    ZeroCensus c = census(P, sol.lambda, parity_of_index(2 * sol.k + spec.p), use, tol,
                          2 * sol.k + spec.p);
    rep.add(tag + " axis confinement", verify_axis_confinement(c),
            "off-axis count " + std::to_string(c.offaxis_count));
    auto match = [&](const std::vector<double>& a, const std::vector<double>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-5) return false;
      return true;
    };
    rep.add(tag + " real zeros match", match(lift_real, c.real_zeros));
    rep.add(tag + " imaginary zeros match", match(lift_imag, c.imaginary_zeros));
    auto [m_tree, n_tree] = classify(sol, spec.p);
    rep.add(tag + " tree constraints",
            0 <= n_tree && n_tree <= m_tree && (m_tree - n_tree) % 2 == 0,
            "(m,n)=(" + std::to_string(m_tree) + "," + std::to_string(n_tree) + ")");
  }
  return rep;
}

SuiteReport verify_corollary(int m_max, const std::vector<double>& b_values, double tol) {
  SuiteReport rep;
  rep.suite = "corollary";
  const double half_pi = std::numbers::pi / 2.0;
  for (int m = 0; m <= m_max; ++m)
    for (int p = 0; p <= 1; ++p)
      for (double b : b_values)
        for (int k = 0; k <= m; ++k) {
          QesSpec spec{m, p, b};
          std::string tag = "m=" + std::to_string(m) + ",p=" + std::to_string(p) +
                            ",b=" + std::to_string(b) + ",k=" + std::to_string(k);
          CrossCheckReport cc = cross_check(spec, k, tol);
          rep.add(tag + " lambda", cc.lambda_ok,
                  "qes " + std::to_string(cc.lambda_qes) + " vs shooting " +
                      std::to_string(cc.lambda_shoot));
          double g = g_angle(k, m, p, b);
          bool in_interval = p == 1 ? (g > 0.0 && g < half_pi) : (g > -half_pi && g < 0.0);
          rep.add(tag + " Arg a interval", in_interval, "g=" + std::to_string(g));
        }
  return rep;
}

SuiteReport verify_trees() {
  SuiteReport rep;
  rep.suite = "trees";
  rep.add("rooted symmetric, 4 ends = 6",
          trees::enumerate_rooted_symmetric(4).size() == 6);
  rep.add("double symmetric, 8 ends, none on axes = 11",
          trees::enumerate_double_symmetric(8, false).size() == 11);
  rep.add("quartic topological types = 2", trees::count_topological_types(4) == 2);
  rep.add("quartic decorated types = 3", trees::count_decorated_types(4) == 3);
  rep.add("sextic filtered types = 5", trees::count_decorated_types(6) == 5);
  for (int n : {0, 1, 2, 3, 4}) {
    auto t = trees::model_tree_quartic(n);
    rep.add("quartic model n=" + std::to_string(n) + " passes clauses",
            trees::check_proposition1(t, 4).pass);
  }
  {
    auto L = lc::exp_chain(4);
    rep.add("exponential chain complex valid", lc::validate_line_complex(L).pass);
    auto instances = lc::theorem3_instances(2);
    bool all_valid = !instances.empty();
    for (const auto& inst : instances)
      all_valid = all_valid && lc::validate_line_complex(inst).pass;
    rep.add("degree-5 twelve-sector complexes valid", all_valid,
            std::to_string(instances.size()) + " instances");
  }
  return rep;
}

}  // namespace anharm
