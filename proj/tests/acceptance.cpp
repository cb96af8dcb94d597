// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   acceptance <path to hopftrees-cli> <golden directory>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/diagrams.hpp"
#include "hopf/linalg.hpp"
#include "hopf/lyndon_hall.hpp"
#include "hopf/morphisms.hpp"
#include "hopf/singular_frame.hpp"
#include "hopf/suites.hpp"
#include "hopf/word_hopf.hpp"

using namespace hopf;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "ok " : "FAILED ") + what);
  }
  void require(const CheckLine& line) { require(line.ok, line.name + " (" + line.detail + ")"); }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << '\n';
  for (const auto& n : o.notes) std::cout << "      " << n << '\n';
  if (!o.ok) ++failures;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cli, const std::string& args) {
  Run r;
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Free Lie algebra dimensions from right-normed brackets of letters.
std::map<long, std::size_t> free_lie_dimensions(long max_weight) {
  std::map<long, std::vector<WordElement>> basis;
  std::map<long, std::size_t> dims;
  for (long n = 1; n <= max_weight; ++n) {
    RowEchelon<Word> ech;
    auto offer = [&](const WordElement& x) {
      if (ech.insert(x)) basis[n].push_back(x);
    };
    offer(WordElement(Word{static_cast<int>(n)}));
    for (long k = 1; k < n; ++k)
      for (const auto& x : basis[n - k]) offer(lie_bracket(WordElement(Word{static_cast<int>(k)}), x));
    dims[n] = ech.rank();
  }
  return dims;
}

Rational integral_oracle(const Word& w) {
  std::vector<Rational> poly{Rational(1)};
  for (int a : w.letters()) {
    std::vector<Rational> next(poly.size() + a);
    for (std::size_t d = 0; d < poly.size(); ++d) next[d + a] += poly[d] / Rational(static_cast<long>(d) + a);
    poly = std::move(next);
  }
  Rational total;
  for (const auto& c : poly) total += c;
  return total;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], golden = argv[2];

  {
    Outcome o;
    o.require(check_ck_axioms(6));
    o.require(check_labeled_ck_axioms(5));
    o.require(check_word_axioms(5, false));
    o.require(check_word_axioms(5, true));
    o.require(check_foissy_axioms(5));
    report(1, "Hopf axioms (CK <= 6 vertices, labeled CK <= 5, words <= 5, Foissy <= 5)", o);
  }
  {
    Outcome o;
    o.require(check_gl_ck_duality(5));
    report(2, "GL/CK duality up to degree 5", o);
  }
  {
    Outcome o;
    o.require(check_hoffman(5));
    o.require(check_hoffman_duals(4));
    report(3, "Hoffman isomorphism (words <= 5, duals <= 4)", o);
  }
  {
    Outcome o;
    o.require(check_pi_cocycle(5));
    o.require(check_pi_product(5));
    o.require(check_pi_kernel(5));
    o.require(check_pi_universal(4));
    report(4, "pi: cocycle, product, kernel generators, universal property", o);
  }
  {
    Outcome o;
    auto dims = free_lie_dimensions(6);
    const std::size_t expected[] = {1, 1, 2, 3, 6, 9};
    std::string counts;
    bool counts_ok = true;
    for (long n = 1; n <= 6; ++n) {
      std::size_t c = lyndon_of_weight(n).size();
      counts += (n > 1 ? " " : "") + std::to_string(c);
      counts_ok = counts_ok && c == expected[n - 1] && c == dims[n];
    }
    o.require(counts_ok, "lyndon counts " + counts + " equal free Lie dimensions");
    bool foliage = true;
    for (const auto& w : lyndon_generate(6)) foliage = foliage && hall_tree_of_lyndon(w).foliage == w;
    o.require(foliage, "foliage of hall_tree_of_lyndon is the identity up to weight 6");
    auto violations = check_hall_axioms(5);
    o.require(violations.empty(), "Hall set axioms up to weight 5 (" + std::to_string(violations.size()) +
                                      " violations)");
    report(5, "Lyndon words and Hall trees", o);
  }
  {
    Outcome o;
    for (long n = 1; n <= 5; ++n) {
      std::vector<WordElement> vs;
      for (const auto& u : hall_forests_of_weight(n)) vs.push_back(pbw_element(u));
      std::size_t r = rank_of(vs);
      o.require(r == (std::size_t{1} << (n - 1)), "weight " + std::to_string(n) + ": rank " + std::to_string(r));
    }
    report(6, "PBW rank 2^(n-1)", o);
  }
  {
    Outcome o;
    o.require(zhao_eps(1) == GLElement(ladder(2)), "eps_1 = " + to_string(zhao_eps(1)));
    GLElement half_cherry;
    half_cherry.add(parse_tree("[[],[]]"), Rational(1, 2));
    o.require(zhao_eps(2) == half_cherry, "eps_2 = " + to_string(zhao_eps(2)));
    QSymElement z;
    z.add(Word{1, 1, 1}, 2);
    z.add(Word{2, 1}, 1);
    auto got = zhao_Zstar(parse_forest("[[],[]]"));
    o.require(got == z, "Z*(cherry) = " + to_qsym_string(got));
    report(7, "Zhao homomorphism values", o);
  }
  {
    Outcome o;
    for (const auto& d : standard_diagrams(4)) {
      if (d.report_only) continue;
      auto rows = run_diagram(d, 4);
      o.require(all_strict_pass(rows), d.name + " on " + std::to_string(rows.size()) + " probes");
    }
    Run first = run(cli, "check --suite diagrams --max-weight 4");
    Run second = run(cli, "check --suite diagrams --max-weight 4");
    o.require(first.status == 0 && first.out == second.out, "diagram report is deterministic");
    o.require(first.out == slurp(golden + "/check_diagrams_4.txt"), "diagram report equals golden file");
    report(8, "diagram squares commute; hex reports stable", o);
  }
  {
    Outcome o;
    bool all = true;
    for (const auto& w : words_up_to_weight(6)) all = all && frame_coefficient(w) == integral_oracle(w);
    o.require(all, "frame_coefficient equals iterated integrals up to weight 6");
    auto spot = [&](const char* w, Rational v) {
      Rational c = frame_coefficient(parse_word(w));
      o.require(c == v, std::string(w) + " -> " + c.to_string());
    };
    spot("f1", Rational(1));
    spot("f2", Rational(1, 2));
    spot("f1.f1", Rational(1, 2));
    spot("f1.f2", Rational(1, 3));
    spot("f2.f1", Rational(1, 6));
    report(9, "frame coefficients", o);
  }
  {
    Outcome o;
    for (long n = 1; n <= 5; ++n) {
      auto r = prop53_check(n);
      o.require(r.ok, "N = " + std::to_string(n) + (r.ok ? "" : ": " + r.mismatches.front()));
    }
    auto beta = betaU(5);
    bool vanish = true;
    for (const auto& u : labeled_forests_up_to(5))
      if (u.count() != 1) vanish = vanish && beta(u).is_zero();
    o.require(vanish, "beta vanishes on proper forests of weight <= 5");
    Rational b21 = beta(parse_forest("f2[f1]"));
    o.require(b21 == Rational(1, 12), "beta(f2[f1]) = " + b21.to_string());
    auto literal = prop53_check(5, Orientation::Standard, true);
    o.notes.push_back("info: unnormalized coefficients at N = 5: " +
                      (literal.ok ? std::string("agree")
                                  : std::to_string(literal.mismatches.size()) + " mismatches, first " +
                                        literal.mismatches.front()));
    report(10, "frame series = exp(sum beta(t) E(t) / |sym(t)|) up to weight 5", o);
  }
  {
    Outcome o;
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"frame --max-weight 4 --format json", "frame_4.json"},
        {"lyndon --max-weight 5", "lyndon_5.txt"},
        {"hall --max-weight 4", "hall_4.txt"},
    };
    for (const auto& [args, file] : goldens) {
      Run r = run(cli, args);
      o.require(r.status == 0 && r.out == slurp(golden + "/" + file), args + " matches " + file);
    }
    Run all = run(cli, "check --suite all --max-weight 4");
    o.require(all.status == 0, "check --suite all --max-weight 4 exits " + std::to_string(all.status));
    report(11, "CLI determinism", o);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
