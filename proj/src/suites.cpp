#include "hopf/suites.hpp"

#include <sstream>

#include "hopf/diagrams.hpp"
#include "hopf/error.hpp"
#include "hopf/singular_frame.hpp"

namespace hopf {

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  os << table;
  os << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf-axioms", "duality", "pi-kernel", "diagrams", "prop53"};
  return names;
}

namespace {

// Collects failures; reports the first few.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void probe() { ++probes_; }
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  CheckLine line() const {
    if (failures_ == 0) return {name_, true, std::to_string(probes_) + " probes"};
    return {name_, false, std::to_string(failures_) + " of " + std::to_string(probes_) + " failed: " + notes_};
  }

 private:
  std::string name_;
  std::size_t probes_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

template <class B>
CheckLine axioms_line(const std::string& name, const HopfStructure<B>& h, const std::vector<B>& probes) {
  Tally t(name);
  auto failures = check_hopf_axioms(h, probes);
  for (std::size_t i = 0; i < probes.size(); ++i) t.probe();
  for (const auto& f : failures) t.fail(f.axiom + " on " + f.probe);
  return t.line();
}

std::vector<Word> words_with_empty(long max_weight) {
  std::vector<Word> out{Word()};
  auto ws = words_up_to_weight(max_weight);
  out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

std::vector<RootedTree> trees_up_to(int max_vertices) {
  std::vector<RootedTree> out;
  for (int v = 1; v <= max_vertices; ++v) {
    auto ts = unlabeled_trees(v);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::vector<PlanarTree> planar_up_to(int max_vertices) {
  std::vector<PlanarTree> out;
  for (int v = 1; v <= max_vertices; ++v) {
    auto ts = planar_trees(v);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

}  // namespace

CheckLine check_ck_axioms(int max_vertices) {
  return axioms_line("H_CK forests <= " + std::to_string(max_vertices) + " vertices", ck_hopf(),
                     unlabeled_forests_up_to(max_vertices));
}

CheckLine check_labeled_ck_axioms(long max_weight) {
  return axioms_line("labeled H_CK forests of weight <= " + std::to_string(max_weight), ck_poset_hopf(),
                     labeled_forests_up_to(max_weight));
}

CheckLine check_gl_axioms(int max_vertices) {
  return axioms_line("H_GL trees <= " + std::to_string(max_vertices) + " vertices", gl_hopf(),
                     trees_up_to(max_vertices));
}

CheckLine check_word_axioms(long max_weight, bool additive) {
  Pairing p = additive ? Pairing::Additive : Pairing::Zero;
  return axioms_line(std::string(additive ? "quasi-shuffle (additive)" : "shuffle") + " words of weight <= " +
                         std::to_string(max_weight),
                     word_hopf(p), words_with_empty(max_weight));
}

CheckLine check_concat_axioms(long max_weight) {
  return axioms_line("concatenation dual (additive) words of weight <= " + std::to_string(max_weight),
                     concat_hopf(Pairing::Additive), words_with_empty(max_weight));
}

CheckLine check_foissy_axioms(int max_vertices) {
  return axioms_line("H_F ordered forests <= " + std::to_string(max_vertices) + " vertices", foissy_hopf(),
                     ordered_forests_up_to(max_vertices));
}

CheckLine check_planar_axioms(int max_vertices) {
  return axioms_line("H_P planar trees <= " + std::to_string(max_vertices) + " vertices", planar_hopf(),
                     planar_up_to(max_vertices));
}

CheckLine check_gl_ck_duality(int max_degree) {
  Tally t("GL/CK duality, degree <= " + std::to_string(max_degree));
  auto trees = trees_up_to(max_degree + 1);
  auto forests = unlabeled_forests_up_to(max_degree);
  for (const auto& x : trees)
    for (const auto& y : trees) {
      int deg = static_cast<int>(x.size() + y.size()) - 2;
      if (deg > max_degree) continue;
      GLElement xy = gl_product(x, y);
      LinComb<Tensor<RootedTree>> xt(Tensor<RootedTree>{x, y});
      for (const auto& f : forests) {
        if (static_cast<int>(f.size()) != deg) continue;
        t.probe();
        if (ck_gl_pairing(xy, CKElement(f)) != ck_gl_pairing(xt, ck_coproduct(f)))
          t.fail("<x o y, f> with x=" + x.code() + " y=" + y.code() + " f=" + to_string(f));
      }
    }
  for (const auto& x : trees) {
    if (static_cast<int>(x.size()) - 1 > max_degree) continue;
    auto dx = gl_coproduct(x);
    for (const auto& f : forests)
      for (const auto& g : forests) {
        if (f.size() + g.size() + 1 != x.size()) continue;
        t.probe();
        LinComb<Tensor<Forest>> fg(Tensor<Forest>{f, g});
        if (ck_gl_pairing(dx, fg) != ck_gl_pairing(GLElement(x), CKElement(f * g)))
          t.fail("<D x, f (x) g> with x=" + x.code() + " f=" + to_string(f) + " g=" + to_string(g));
      }
  }
  return t.line();
}

CheckLine check_hoffman(long max_weight) {
  Tally t("Hoffman tau/psi, weight <= " + std::to_string(max_weight));
  const Pairing p = Pairing::Additive;
  auto words = words_up_to_weight(max_weight);
  for (const Word& w : words) {
    t.probe();
    WordElement x(w);
    if (hoffman_psi(hoffman_tau(x, p), p) != x) t.fail("psi tau " + to_string(w));
    if (hoffman_tau(hoffman_psi(x, p), p) != x) t.fail("tau psi " + to_string(w));
  }
  for (const Word& u : words)
    for (const Word& v : words) {
      if (u.weight() + v.weight() > max_weight) continue;
      t.probe();
      if (hoffman_tau(shuffle(u, v), p) !=
          quasi_shuffle(hoffman_tau(WordElement(u), p), hoffman_tau(WordElement(v), p), p))
        t.fail("tau(u sh v) for " + to_string(u) + ", " + to_string(v));
    }
  return t.line();
}

CheckLine check_hoffman_duals(long max_weight) {
  Tally t("tau*/psi* on the dual basis, weight <= " + std::to_string(max_weight));
  const Pairing p = Pairing::Additive;
  for (const Word& w : words_up_to_weight(max_weight)) {
    t.probe();
    WordElement x(w);
    if (psi_star(tau_star(x, p), p) != x) t.fail("psi* tau* " + to_dual_string(w));
    if (tau_star(psi_star(x, p), p) != x) t.fail("tau* psi* " + to_dual_string(w));
    if (tau_star(x, p) != tau_star_by_duality(x, p)) t.fail("tau* letter formula " + to_dual_string(w));
    if (psi_star(x, p) != psi_star_by_duality(x, p)) t.fail("psi* letter formula " + to_dual_string(w));
  }
  return t.line();
}

CheckLine check_pi_cocycle(long max_weight) {
  Tally t("pi(B+_a(u)) = pi(u) a, weight <= " + std::to_string(max_weight));
  for (const Forest& u : labeled_forests_up_to(max_weight - 1))
    for (int a = 1; a + u.weight() <= max_weight; ++a) {
      t.probe();
      WordElement expected = linear_map(pi(u), [a](const Word& w) { return WordElement(w + Word{a}); });
      if (pi(Forest{bplus(u, a)}) != expected) t.fail("a=" + std::to_string(a) + " u=" + to_string(u));
    }
  return t.line();
}

CheckLine check_pi_product(long max_weight) {
  Tally t("pi(uv) = pi(u) sh pi(v), weight <= " + std::to_string(max_weight));
  auto forests = labeled_forests_up_to(max_weight);
  for (const Forest& u : forests)
    for (const Forest& v : forests) {
      if (u.weight() + v.weight() > max_weight) continue;
      t.probe();
      if (pi(u * v) != quasi_shuffle(pi(u), pi(v), Pairing::Zero))
        t.fail("u=" + to_string(u) + " v=" + to_string(v));
    }
  return t.line();
}

CheckLine check_pi_coalgebra(long max_weight) {
  Tally t("pi is a coalgebra map, weight <= " + std::to_string(max_weight));
  for (const Forest& u : labeled_forests_up_to(max_weight)) {
    t.probe();
    LinComb<Tensor<Word>> lhs;
    for (const auto& [tt, c] : poset_coproduct(u)) lhs.add_scaled(tensor(pi(tt.left), pi(tt.right)), c);
    if (lhs != deconcat_coproduct(pi(u))) t.fail(to_string(u));
  }
  return t.line();
}

CheckLine check_pi_kernel(long max_weight) {
  Tally t("kernel generators annihilated, weight <= " + std::to_string(max_weight));
  for (const auto& g : kernel_generators(max_weight)) {
    t.probe();
    if (!pi(g.element).empty()) t.fail(g.family + ": " + to_string(g.element));
  }
  return t.line();
}

CheckLine check_pi_universal(long max_weight) {
  Tally t("pi from the universal cocycle map, weight <= " + std::to_string(max_weight));
  const auto target = pi_cocycle_target();
  for (const Forest& u : labeled_forests_up_to(max_weight)) {
    t.probe();
    if (universal_cocycle_map(target, u) != pi(u)) t.fail(to_string(u));
  }
  return t.line();
}

CheckLine check_prop53(long max_weight) {
  Tally t("exp of the Hall representation, N = 1.." + std::to_string(max_weight));
  for (long n = 1; n <= max_weight; ++n) {
    t.probe();
    auto r = prop53_check(n);
    if (!r.ok) t.fail("N=" + std::to_string(n) + " " + r.mismatches.front());
  }
  return t.line();
}

CheckLine check_beta_support(long max_weight) {
  Tally t("beta vanishes on proper forests, weight <= " + std::to_string(max_weight));
  ForestFunctional beta = betaU(max_weight);
  for (const auto& [u, v] : beta.values) {
    if (u.count() < 2) continue;
    t.probe();
    if (!v.is_zero()) t.fail(to_string(u) + " -> " + v.to_string());
  }
  return t.line();
}

CheckLine check_frame_oracle(long max_weight) {
  Tally t("frame coefficients vs iterated integrals, weight <= " + std::to_string(max_weight));
  for (const Word& w : words_up_to_weight(max_weight)) {
    t.probe();
    if (frame_coefficient(w) != iterated_integral(w)) t.fail(to_string(w));
  }
  for (const Forest& u : labeled_forests_up_to(max_weight)) {
    t.probe();
    if (alphaU(u) != alphaU_integral(u)) t.fail("alphaU " + to_string(u));
  }
  return t.line();
}

namespace {

SuiteReport run_one(const std::string& name, long n) {
  SuiteReport r{name, {}, {}};
  const int v = static_cast<int>(n);
  if (name == "hopf-axioms") {
    r.checks = {check_ck_axioms(v),       check_labeled_ck_axioms(n), check_word_axioms(n, false),
                check_word_axioms(n, true), check_concat_axioms(n),    check_foissy_axioms(v),
                check_planar_axioms(v),   check_gl_axioms(v)};
  } else if (name == "duality") {
    r.checks = {check_gl_ck_duality(v), check_hoffman(n), check_hoffman_duals(n)};
  } else if (name == "pi-kernel") {
    r.checks = {check_pi_cocycle(n), check_pi_product(n), check_pi_coalgebra(n), check_pi_kernel(n),
                check_pi_universal(n)};
  } else if (name == "diagrams") {
    std::vector<ProbeResult> rows;
    for (const auto& d : standard_diagrams(n)) {
      auto part = run_diagram(d, n);
      std::size_t bad = 0;
      for (const auto& p : part) bad += !p.agree;
      if (d.report_only)
        r.checks.push_back({d.name + " (report only)", true,
                            std::to_string(part.size() - bad) + " agree, " + std::to_string(bad) + " differ"});
      else
        r.checks.push_back({d.name, bad == 0, std::to_string(part.size()) + " probes, " + std::to_string(bad) +
                                                  " failed"});
      rows.insert(rows.end(), part.begin(), part.end());
    }
    r.table = format_report(rows);
  } else if (name == "prop53") {
    r.checks = {check_frame_oracle(n), check_beta_support(n), check_prop53(n)};
  } else {
    throw DomainError("unknown suite: " + name);
  }
  return r;
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& name, long max_weight) {
  if (max_weight < 1) throw DomainError("max weight must be >= 1");
  if (name != "all") return {run_one(name, max_weight)};
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names()) out.push_back(run_one(s, max_weight));
  return out;
}

}  // namespace hopf
