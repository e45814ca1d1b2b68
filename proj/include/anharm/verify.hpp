#pragma once

#include <string>
#include <vector>

#include "anharm/polynomial.hpp"
#include "anharm/qes.hpp"
#include "anharm/zeros.hpp"

namespace anharm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

/// Quartic axis confinement: spectrum, censuses, winding consistency and
/// the index law for k = 0..K.
SuiteReport verify_theorem1(const EvenPolynomial& P, int K, Box box, double tol);

/// Sextic closed-form eigenfunctions: lifted zeros against the census,
/// confinement, and the tree-parameter constraints for every k.
SuiteReport verify_theorem2(const QesSpec& spec, Box box, double tol);

/// Closed form vs shooting and the argument-interval checks over a small
/// (m, p, b) family.
SuiteReport verify_corollary(int m_max, const std::vector<double>& b_values, double tol);

/// Exact combinatorial counts, the quartic model-tree clauses, and the line
/// complex property suite.
SuiteReport verify_trees();

}  // namespace anharm
