// Named verification suites driving the library end to end.  Each criterion
// function runs one acceptance check and reports per-case pass/fail with the
// expected and observed values; the CLI groups them under suite names.
#pragma once

#include <string>
#include <vector>

namespace thetaq {

struct CheckCase {
  std::string description;
  bool pass;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string name;
  std::vector<CheckCase> cases;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  void add(std::string description, bool pass, std::string expected,
           std::string actual);
  void merge(const Report& other);
};

// the ten acceptance criteria
Report criterion_counterexample_levels();   // first failures at 20 and 68
Report criterion_base_change_high_weight(); // k >= 5 always holds, 4N <= 400
Report criterion_t_l2_oracle();             // geometric == closed, 60 powers
Report criterion_theta_eigenform();         // T_{l^2} theta = (1 + 1/l) theta
Report criterion_gauss_identities();        // g^2 and g(z^j), l <= 97
Report criterion_u_l();                     // closed == geometric; squared scalar
Report criterion_u_p2();                    // theta fixed; valuation monotone
Report criterion_integrality();             // p in {5,7}, 200 coefficients
Report criterion_degree_identities();       // levels <= 200
Report criterion_transformation_law();      // 25 matrices, 3 points, 400 terms

// suite names accepted by `verify`: gauss, oracle, eigen, degrees,
// integrality, transform, all
Report run_suite(const std::string& name);

}  // namespace thetaq
