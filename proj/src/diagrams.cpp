#include "hopf/diagrams.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hopf/error.hpp"

namespace hopf {

std::string to_string(Space s) {
  switch (s) {
    case Space::NSym: return "NSYM";
    case Space::QSym: return "QSYM";
    case Space::Sym: return "SYM";
    case Space::HCK: return "H_CK";
    case Space::HF: return "H_F";
    case Space::HP: return "H_P";
    case Space::HGL: return "H_GL";
    case Space::HU: return "H_U";
    case Space::UL: return "U(L)";
  }
  return "?";
}

std::string to_string(const Value& v) {
  switch (v.space) {
    case Space::NSym: return to_nsym_string(std::get<LinComb<Word>>(v.data));
    case Space::QSym:
    case Space::Sym: return to_qsym_string(std::get<LinComb<Word>>(v.data));
    case Space::HU: return to_string(std::get<LinComb<Word>>(v.data));
    case Space::UL: return to_e_string(std::get<LinComb<Word>>(v.data));
    default: return std::visit([](const auto& x) { return to_string(x); }, v.data);
  }
}

namespace {

template <class B>
const LinComb<B>& as(const Value& v) {
  return std::get<LinComb<B>>(v.data);
}

template <class From, class To, class F>
Arrow make(std::string name, Space from, Space to, F f) {
  return {name, from, to, [to, f](const Value& v, long n) { return Value{to, ValueData(f(as<From>(v), n))}; }};
}

std::map<std::string, Arrow> build_registry() {
  std::vector<Arrow> arrows = {
      make<Word, OrderedForest>("alpha1", Space::NSym, Space::HF, [](const auto& x, long) { return alpha1(x); }),
      make<OrderedForest, Forest>("alpha2", Space::HF, Space::HCK, [](const auto& x, long) { return alpha2(x); }),
      make<Word, Word>("alpha3", Space::NSym, Space::Sym, [](const auto& x, long) { return alpha3(x); }),
      make<Word, Forest>("alpha4", Space::Sym, Space::HCK, [](const auto& x, long) { return alpha4(x); }),
      make<PlanarTree, Word>("alpha1*", Space::HP, Space::QSym, [](const auto& x, long) { return alpha1_star(x); }),
      make<RootedTree, PlanarTree>("alpha2*", Space::HGL, Space::HP,
                                   [](const auto& x, long) { return alpha2_star(x); }),
      make<Word, Word>("alpha3*", Space::Sym, Space::QSym, [](const auto& x, long) { return alpha3_star(x); }),
      make<RootedTree, Word>("alpha4*", Space::HGL, Space::Sym, [](const auto& x, long) { return alpha4_star(x); }),
      make<Word, OrderedForest>("beta1", Space::NSym, Space::HF, [](const auto& x, long) { return alpha1(x); }),
      make<OrderedForest, Word>("beta2", Space::HF, Space::HU, [](const auto& x, long n) { return beta2(x, n); }),
      make<Word, Word>("beta3", Space::NSym, Space::Sym, [](const auto& x, long) { return alpha3(x); }),
      make<Word, Word>("beta4", Space::Sym, Space::HU, [](const auto& x, long n) { return beta4(x, n); }),
      make<PlanarTree, Word>("beta1*", Space::HP, Space::QSym, [](const auto& x, long) { return alpha1_star(x); }),
      make<Word, PlanarTree>("beta2*", Space::UL, Space::HP, [](const auto& x, long) { return beta2_star(x); }),
      make<Word, Word>("beta3*", Space::Sym, Space::QSym, [](const auto& x, long) { return alpha3_star(x); }),
      make<Word, Word>("beta4*", Space::UL, Space::Sym, [](const auto& x, long) { return beta4_star(x); }),
      make<Forest, Word>("rho", Space::HCK, Space::HU, [](const auto& x, long n) { return rho(x, n); }),
      make<Word, RootedTree>("rho*", Space::UL, Space::HGL, [](const auto& x, long) { return rho_star(x); }),
      make<Word, Word>("Z_u", Space::HU, Space::QSym, [](const auto& x, long) { return zhao_Zu(x); }),
      make<Word, Word>("Z_u*", Space::NSym, Space::UL, [](const auto& x, long) { return zhao_Zu_star(x); }),
      make<Word, RootedTree>("Z", Space::NSym, Space::HGL, [](const auto& x, long) { return zhao_Z(x); }),
      make<Forest, Word>("Z*", Space::HCK, Space::QSym, [](const auto& x, long) { return zhao_Zstar(x); }),
      make<PlanarTree, OrderedForest>("planar-as-forest", Space::HP, Space::HF, [](const auto& x, long) {
        return linear_map(x, [](const PlanarTree& t) { return LinComb<OrderedForest>(OrderedForest{t}); });
      }),
  };
  std::map<std::string, Arrow> out;
  for (auto& a : arrows) out.emplace(a.name, std::move(a));
  return out;
}

Space path_target(Space source, const std::vector<std::string>& path, const std::string& diagram) {
  const auto& reg = arrow_registry();
  Space s = source;
  for (const auto& name : path) {
    auto it = reg.find(name);
    if (it == reg.end()) throw DomainError("diagram " + diagram + ": unknown arrow " + name);
    if (it->second.from != s)
      throw DomainError("diagram " + diagram + ": arrow " + name + " starts at " + to_string(it->second.from) +
                        ", not " + to_string(s));
    s = it->second.to;
  }
  return s;
}

Value follow(Value v, const std::vector<std::string>& path, long max_weight) {
  const auto& reg = arrow_registry();
  for (const auto& name : path) v = reg.at(name).apply(v, max_weight);
  return v;
}

Value word_value(Space s, const Word& w) { return {s, LinComb<Word>(w)}; }

std::vector<Value> nsym_probes(long n) {
  std::vector<Value> out;
  for (const Word& w : words_up_to_weight(n)) out.push_back(word_value(Space::NSym, w));
  return out;
}

std::vector<Word> all_partitions(long n) {
  std::vector<Word> out;
  for (long k = 0; k <= n; ++k)
    for (const Word& lambda : partitions(k)) out.push_back(lambda);
  return out;
}

std::vector<Value> sym_probes(long n) {
  std::vector<Value> out;
  for (const Word& lambda : all_partitions(n)) out.push_back({Space::Sym, monomial_symmetric(lambda)});
  return out;
}

std::vector<std::string> sym_labels(long n) {
  std::vector<std::string> out;
  for (const Word& lambda : all_partitions(n)) out.push_back("m" + qsym_basis_string(lambda).substr(1));
  return out;
}

std::vector<Value> gl_probes(long n) {
  std::vector<Value> out;
  for (int v = 1; v <= n + 1; ++v)
    for (const RootedTree& t : unlabeled_trees(v)) out.push_back({Space::HGL, LinComb<RootedTree>(t)});
  return out;
}

std::vector<Value> ul_probes(long n, bool generators) {
  std::vector<Value> out;
  for (const Word& w : words_up_to_weight(n))
    if ((w.length() == 1) == generators) out.push_back(word_value(Space::UL, w));
  return out;
}

}  // namespace

const std::map<std::string, Arrow>& arrow_registry() {
  static const std::map<std::string, Arrow> reg = build_registry();
  return reg;
}

std::vector<ProbeResult> run_diagram(const Diagram& d, long max_weight) {
  Space l = path_target(d.source, d.left, d.name), r = path_target(d.source, d.right, d.name);
  if (l != r) throw DomainError("diagram " + d.name + ": paths end in " + to_string(l) + " and " + to_string(r));
  std::vector<ProbeResult> out;
  for (std::size_t i = 0; i < d.probes.size(); ++i) {
    const Value& p = d.probes[i];
    if (p.space != d.source) throw DomainError("diagram " + d.name + ": probe outside " + to_string(d.source));
    Value a = follow(p, d.left, max_weight), b = follow(p, d.right, max_weight);
    std::string label = i < d.probe_labels.size() ? d.probe_labels[i] : to_string(p);
    if (label.rfind("1*", 0) == 0 && label.find(" + ") == std::string::npos) label.erase(0, 2);
    out.push_back({d.name, label, a == b, d.report_only, to_string(a), to_string(b)});
  }
  return out;
}

std::vector<Diagram> standard_diagrams(long n) {
  return {
      {"thm5-square", Space::NSym, nsym_probes(n), {"alpha1", "alpha2"}, {"alpha3", "alpha4"}, false},
      {"thm5-dual-square", Space::HGL, gl_probes(n), {"alpha2*", "alpha1*"}, {"alpha4*", "alpha3*"}, false},
      {"prop-diag-square", Space::NSym, nsym_probes(n), {"beta1", "beta2"}, {"beta3", "beta4"}, false},
      {"prop-diag-dual-square", Space::UL, ul_probes(n, true), {"beta2*", "beta1*"}, {"beta4*", "beta3*"}, false},
      {"prop-diag-dual-products", Space::UL, ul_probes(n, false), {"beta2*", "beta1*"}, {"beta4*", "beta3*"}, true},
      {"hex1-rho-alpha4", Space::Sym, sym_probes(n), {"alpha4", "rho"}, {"beta4"}, true, sym_labels(n)},
      {"hex1-theta2", Space::HGL, gl_probes(n - 1), {"alpha4*", "beta4"}, {"alpha2*", "planar-as-forest", "beta2"},
       true},
      {"hex1-zu", Space::Sym, sym_probes(n), {"alpha4", "rho", "Z_u"}, {"beta4", "Z_u"}, true, sym_labels(n)},
      {"hex2-rho-star", Space::UL, ul_probes(n, true), {"rho*", "alpha4*"}, {"beta4*"}, true},
      {"hex2-zu-star", Space::NSym, nsym_probes(n), {"Z_u*", "beta4*", "alpha3*"}, {"Z_u*", "beta2*", "beta1*"},
       true},
  };
}

std::vector<ProbeResult> f_structure_report(long max_weight) {
  std::vector<ProbeResult> out;
  std::vector<Word> words;
  for (const Word& w : words_up_to_weight(max_weight))
    if (!w.empty()) words.push_back(w);
  for (const Word& u : words)
    for (const Word& v : words) {
      if (u.weight() + v.weight() > max_weight) continue;
      GLElement a = F(shuffle(u, v));
      GLElement b = gl_product(F(WordElement(u)), F(WordElement(v)));
      out.push_back({"F-product", to_string(u) + " , " + to_string(v), a == b, true, to_string(a), to_string(b)});
    }
  std::vector<Forest> forests;
  for (const Forest& f : labeled_forests_up_to(max_weight))
    if (f.count() == 1) forests.push_back(f);
  for (const Forest& u : forests)
    for (const Forest& v : forests) {
      if (u.weight() + v.weight() > max_weight) continue;
      WordElement a = F_star(u * v);
      WordElement b = concat(F_star(u), F_star(v));
      out.push_back(
          {"F*-product", to_string(u) + " , " + to_string(v), a == b, true, to_e_string(a), to_e_string(b)});
    }
  return out;
}

bool all_strict_pass(const std::vector<ProbeResult>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ProbeResult& r) { return r.report_only || r.agree; });
}

std::string format_report(const std::vector<ProbeResult>& rows) {
  std::size_t wd = 7, wp = 5;
  for (const auto& r : rows) {
    wd = std::max(wd, r.diagram.size());
    wp = std::max(wp, r.probe.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wd)) << "diagram" << "  " << std::setw(static_cast<int>(wp))
     << "probe" << "  status\n";
  for (const auto& r : rows) {
    const char* status = r.report_only ? (r.agree ? "report:agree" : "report:differ") : (r.agree ? "pass" : "FAIL");
    os << std::setw(static_cast<int>(wd)) << r.diagram << "  " << std::setw(static_cast<int>(wp)) << r.probe << "  "
       << status << '\n';
    if (!r.agree) os << "    left:  " << r.left << "\n    right: " << r.right << '\n';
  }
  return os.str();
}

}  // namespace hopf
