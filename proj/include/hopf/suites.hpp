#ifndef HOPF_SUITES_HPP
#define HOPF_SUITES_HPP

#include <string>
#include <vector>

namespace hopf {

// One verified property: "ok" or "FAIL" with a short summary.
struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  std::string table;  // diagram table, when the suite has one

  bool ok() const;
  // Check lines, the table, then "PASS" or "FAIL".
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// Hopf axioms on every basis element up to the bound (vertices for
// unlabeled and planar structures, weight for words and labeled forests).
CheckLine check_ck_axioms(int max_vertices);
CheckLine check_labeled_ck_axioms(long max_weight);
CheckLine check_gl_axioms(int max_vertices);
CheckLine check_word_axioms(long max_weight, bool additive);
CheckLine check_concat_axioms(long max_weight);
CheckLine check_foissy_axioms(int max_vertices);
CheckLine check_planar_axioms(int max_vertices);

// <x o y, f> = <x (x) y, D f> and <D x, f (x) g> = <x, fg>, degree <= n.
CheckLine check_gl_ck_duality(int max_degree);
// psi tau = tau psi = id and tau(u * v) = tau(u) *' tau(v) (additive pairing).
CheckLine check_hoffman(long max_weight);
// psi* tau* = id on the dual basis; letter formulas agree with the scans.
CheckLine check_hoffman_duals(long max_weight);

CheckLine check_pi_cocycle(long max_weight);
CheckLine check_pi_product(long max_weight);
CheckLine check_pi_coalgebra(long max_weight);
CheckLine check_pi_kernel(long max_weight);
CheckLine check_pi_universal(long max_weight);

CheckLine check_prop53(long max_weight);
CheckLine check_beta_support(long max_weight);
CheckLine check_frame_oracle(long max_weight);

// Throws DomainError for an unknown suite name. "all" runs every suite.
std::vector<SuiteReport> run_suite(const std::string& name, long max_weight);

}  // namespace hopf

#endif
