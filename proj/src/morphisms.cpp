#include "hopf/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "cache.hpp"
#include "hopf/error.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

std::string qsym_basis_string(const Word& composition) {
  std::string out = "M(";
  for (std::size_t i = 0; i < composition.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(composition[i]);
  }
  return out + ")";
}

std::string nsym_basis_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int a : w.letters()) out += "z" + std::to_string(a);
  return out;
}

std::string to_qsym_string(const QSymElement& x) { return to_string(x, qsym_basis_string); }
std::string to_nsym_string(const NSymElement& x) { return to_string(x, nsym_basis_string); }

namespace {

// Digits starting at i; advances i.
int parse_index(std::string_view text, std::size_t& i) {
  std::size_t start = i;
  long value = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    value = value * 10 + (text[i] - '0');
    if (value > 1000000) throw ParseError("index too large", start);
    ++i;
  }
  if (i == start) throw ParseError("expected a positive integer", i);
  if (value == 0) throw ParseError("index must be positive", start);
  return static_cast<int>(value);
}

}  // namespace

Word parse_composition(std::string_view text) {
  if (text.size() < 3 || text.substr(0, 2) != "M(") throw ParseError("expected 'M('", 0);
  std::vector<int> parts;
  std::size_t i = 2;
  if (text[i] != ')') {
    for (;;) {
      parts.push_back(parse_index(text, i));
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  if (i >= text.size() || text[i] != ')') throw ParseError("expected ',' or ')'", i);
  if (i + 1 != text.size()) throw ParseError("unexpected trailing input", i + 1);
  return Word(std::move(parts));
}

Word parse_nsym_word(std::string_view text) {
  if (text == "1") return Word();
  if (text.empty()) throw ParseError("empty word", 0);
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'z') throw ParseError("expected letter 'z'", i);
    ++i;
    letters.push_back(parse_index(text, i));
  }
  return Word(std::move(letters));
}

// --- pi and alpha ---

WordElement pi(const Forest& u) {
  WordElement out;
  for (const Word& w : linear_extensions(u)) out.add(w, 1);
  return out;
}

WordElement pi(const CKElement& x) {
  return linear_map(x, [](const Forest& u) { return pi(u); });
}

CocycleTarget<Word> pi_cocycle_target() {
  return {Word(), [](const Word& a, const Word& b) { return shuffle(a, b); },
          [](const Word& w) { return deconcat_coproduct(w); },
          [](int label, const Word& w) {
            if (label <= 0) throw DomainError("pi needs labeled vertices");
            return WordElement(w + Word{label});
          }};
}

Rational alpha_of(const Forest& u, const WordCoefficients& coeffs) {
  Rational out;
  for (const Word& w : linear_extensions(u)) out += coeffs(w);
  return out;
}

Rational alpha_hat(const WordElement& x, const WordCoefficients& coeffs) { return linear_form(x, coeffs); }

namespace {

Forest single(const RootedTree& t) { return Forest{t}; }

}  // namespace

std::vector<KernelGenerator> kernel_generators(long max_weight) {
  std::vector<KernelGenerator> out;
  if (max_weight < 2) return out;
  std::vector<RootedTree> trees;
  for (long w = 1; w < max_weight; ++w) {
    auto ts = labeled_trees_of_weight(w);
    trees.insert(trees.end(), ts.begin(), ts.end());
  }
  const std::size_t n = trees.size();

  // Nondecreasing index tuples of length m with total weight <= max_weight.
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t, long, const std::function<void()>&)> tuples =
      [&](std::size_t m, std::size_t start, long budget, const std::function<void()>& emit) {
        if (idx.size() == m) {
          emit();
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          if (trees[i].weight() > budget) continue;
          idx.push_back(i);
          tuples(m, i, budget - trees[i].weight(), emit);
          idx.pop_back();
        }
      };

  for (std::size_t m = 2; m <= static_cast<std::size_t>(max_weight); ++m) {
    tuples(m, 0, max_weight, [&] {
      CKElement e;
      std::vector<RootedTree> all;
      for (std::size_t i : idx) all.push_back(trees[i]);
      e.add(Forest(all), 1);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<RootedTree> others;
        for (std::size_t j = 0; j < m; ++j)
          if (j != i) others.push_back(all[j]);
        e.add(single(graft(all[i], Forest(others))), -1);
      }
      out.push_back({"product", std::move(e)});
    });
  }

  tuples(2, 0, max_weight, [&] {
    const RootedTree &t = trees[idx[0]], &z = trees[idx[1]];
    CKElement e;
    e.add(single(graft(t, Forest{z})), 1);
    e.add(single(graft(z, Forest{t})), 1);
    e.add(Forest{t, z}, -1);
    out.push_back({"pair", std::move(e)});
  });

  for (std::size_t si = 0; si < n; ++si) {
    const RootedTree& s = trees[si];
    tuples(2, 0, max_weight - s.weight(), [&] {
      const RootedTree &t = trees[idx[0]], &z = trees[idx[1]];
      CKElement e;
      e.add(single(graft(s, Forest{graft(t, Forest{z})})), 1);
      e.add(single(graft(s, Forest{graft(z, Forest{t})})), 1);
      e.add(single(graft(s, Forest{t, z})), -1);
      out.push_back({"triple-graft", std::move(e)});
    });
  }

  tuples(3, 0, max_weight, [&] {
    const RootedTree &s = trees[idx[0]], &t = trees[idx[1]], &z = trees[idx[2]];
    CKElement e;
    e.add(single(graft(s, Forest{t, z})), 1);
    e.add(single(graft(z, Forest{t, s})), 1);
    e.add(single(graft(t, Forest{s, z})), 1);
    e.add(Forest{t, z, s}, -1);
    out.push_back({"triple-product", std::move(e)});
  });
  return out;
}

// --- QSYM / NSYM / SYM ---

QSymElement qsym_product(const Word& a, const Word& b) { return quasi_shuffle(a, b, Pairing::Additive); }

QSymElement qsym_product(const QSymElement& x, const QSymElement& y) {
  return quasi_shuffle(x, y, Pairing::Additive);
}

NSymElement nsym_product(const NSymElement& x, const NSymElement& y) { return concat(x, y); }

namespace {

void partitions_rec(long remaining, int max_part, std::vector<int>& cur, std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = static_cast<int>(std::min<long>(remaining, max_part)); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> partitions(long n) {
  std::vector<Word> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, static_cast<int>(n), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

QSymElement monomial_symmetric(const Word& lambda) {
  std::vector<int> parts = lambda.letters();
  std::sort(parts.begin(), parts.end());
  QSymElement out;
  do {
    out.add(Word(parts), 1);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

QSymElement elementary(const Word& lambda) {
  QSymElement out{Word()};
  for (int k : lambda.letters()) out = qsym_product(out, QSymElement(Word(std::vector<int>(k, 1))));
  return out;
}

LinComb<Word> to_elementary_basis(const QSymElement& x) {
  using Echelon = RowEchelon<Word>;
  static detail::SyncCache<long, std::shared_ptr<const Echelon>> cache;
  std::map<long, QSymElement> by_weight;
  for (const auto& [w, c] : x) by_weight[w.weight()].add(w, c);
  LinComb<Word> out;
  for (const auto& [n, part] : by_weight) {
    auto echelon = cache.get(n, [n = n] {
      auto e = std::make_shared<Echelon>();
      for (const Word& lambda : partitions(n)) e->insert(elementary(lambda));
      return std::shared_ptr<const Echelon>(e);
    });
    auto coeffs = echelon->express(part);
    if (!coeffs) throw DomainError("not a symmetric function: " + to_qsym_string(part));
    auto lambdas = partitions(n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) out.add(lambdas[i], (*coeffs)[i]);
  }
  return out;
}

// --- alpha maps: NSYM, QSYM and the tree algebras ---

LinComb<OrderedForest> alpha1(const NSymElement& x) {
  return linear_map(x, [](const Word& w) {
    std::vector<PlanarTree> trees;
    for (int a : w.letters()) trees.push_back(planar_ladder(a));
    return LinComb<OrderedForest>(OrderedForest(std::move(trees)));
  });
}

CKElement alpha2(const LinComb<OrderedForest>& x) {
  return linear_map(x, [](const OrderedForest& f) { return CKElement(canonicalize(f)); });
}

QSymElement alpha3(const NSymElement& x) {
  return linear_map(x, [](const Word& w) {
    QSymElement out{Word()};
    for (int a : w.letters()) out = qsym_product(out, QSymElement(Word(std::vector<int>(a, 1))));
    return out;
  });
}

CKElement alpha4(const QSymElement& x) {
  return linear_map(to_elementary_basis(x), [](const Word& lambda) {
    std::vector<RootedTree> ladders;
    for (int k : lambda.letters()) ladders.push_back(ladder(k));
    return CKElement(Forest(std::move(ladders)));
  });
}

namespace {

template <bool P>
bool is_unlabeled_ladder(const BasicTree<P>& t) {
  if (t.label() != 0 || t.children().size() > 1) return false;
  return t.children().empty() || is_unlabeled_ladder(t.children().front());
}

// Branch sizes when t = B+(l_{i_1}, ..., l_{i_k}) with an unlabeled root.
template <bool P>
std::optional<std::vector<int>> ladder_corolla_parts(const BasicTree<P>& t) {
  if (t.label() != 0) return std::nullopt;
  std::vector<int> parts;
  for (const auto& c : t.children()) {
    if (!is_unlabeled_ladder(c)) return std::nullopt;
    parts.push_back(static_cast<int>(c.size()));
  }
  return parts;
}

}  // namespace

QSymElement alpha1_star(const LinComb<PlanarTree>& x) {
  return linear_map(x, [](const PlanarTree& t) {
    auto parts = ladder_corolla_parts(t);
    return parts ? QSymElement(Word(*parts)) : QSymElement();
  });
}

LinComb<PlanarTree> alpha2_star(const GLElement& x) {
  return linear_map(x, [](const RootedTree& t) {
    LinComb<PlanarTree> out;
    Rational s(sym_order(t));
    for (const auto& p : planar_preimages(t)) out.add(p, s);
    return out;
  });
}

QSymElement alpha3_star(const QSymElement& x) { return x; }

QSymElement alpha4_star(const GLElement& x) {
  return linear_map(x, [](const RootedTree& t) {
    auto parts = ladder_corolla_parts(t);
    if (!parts) return QSymElement();
    std::sort(parts->rbegin(), parts->rend());
    return Rational(sym_order(t)) * monomial_symmetric(Word(*parts));
  });
}

// --- Zhao ---

GLElement zhao_k(int n) {
  if (n < 1) throw DomainError("k_n needs n >= 1");
  GLElement out;
  for (const auto& t : unlabeled_trees(n + 1)) out.add(t, Rational(1) / Rational(sym_order(t)));
  return out;
}

GLElement zhao_eps(int n) {
  if (n < 0) throw DomainError("eps_n needs n >= 0");
  static detail::SyncCache<int, GLElement> cache;
  return cache.get(n, [n] {
    if (n == 0) return GLElement(RootedTree());
    GLElement out;
    for (int i = 1; i <= n; ++i) out.add_scaled(gl_product(zhao_k(i), zhao_eps(n - i)), i % 2 ? 1 : -1);
    return out;
  });
}

GLElement zhao_Z(const NSymElement& x) {
  return linear_map(x, [](const Word& w) {
    GLElement out{RootedTree()};
    for (int a : w.letters()) out = gl_product(out, zhao_eps(a));
    return out;
  });
}

QSymElement aplus(const QSymElement& x) {
  return linear_map(x, [](const Word& I) { return QSymElement(I + Word{1}); });
}

CocycleTarget<Word> qsym_aplus_target() {
  return {Word(), [](const Word& a, const Word& b) { return qsym_product(a, b); },
          [](const Word& w) { return deconcat_coproduct(w); },
          [](int, const Word& I) { return aplus(QSymElement(I)); }};
}

QSymElement zhao_Zstar(const Forest& u) {
  static const CocycleTarget<Word> target = qsym_aplus_target();
  return universal_cocycle_map(target, u);
}

QSymElement zhao_Zstar(const CKElement& x) {
  return linear_map(x, [](const Forest& u) { return zhao_Zstar(u); });
}

QSymElement zhao_Zu(const WordElement& x) {
  return linear_map(x, [](const Word& w) {
    return w.empty() ? QSymElement(Word()) : zhao_Zstar(Forest{ladder(static_cast<int>(w.length()))});
  });
}

WordElement zhao_Zu_star(const NSymElement& x) { return x; }



GLElement rho_star(const WordElement& x) {
  return linear_map(x, [](const Word& w) {
    GLElement out{RootedTree()};
    for (int a : w.letters()) out = gl_product(out, GLElement(ladder(a)));
    return out;
  });
}

GLElement F(const WordElement& x) {
  return linear_map(x, [](const Word& w) {
    return w.empty() ? GLElement(RootedTree()) : GLElement(RootedTree(0, {labeled_ladder(w)}));
  });
}

WordElement F_star(const Forest& u) { return pi(u); }

// --- maps into H_U ---

WordElement truncate(const WordElement& x, long max_weight) {
  WordElement out;
  for (const auto& [w, c] : x)
    if (w.weight() <= max_weight) out.add(w, c);
  return out;
}

namespace {

// Every assignment of positive labels with total weight <= max_weight.
std::vector<Forest> label_assignments(const Forest& u, long max_weight) {
  FlatForest flat = flatten(u);
  const long n = static_cast<long>(flat.parent.size());
  std::vector<Forest> out;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::function<void(long, long)> rec = [&](long v, long budget) {
    if (v == n) {
      out.push_back(induced_forest(flat, all));
      return;
    }
    for (long a = 1; a <= budget - (n - v - 1); ++a) {
      flat.label[v] = static_cast<int>(a);
      rec(v + 1, budget - a);
    }
  };
  if (max_weight >= n) rec(0, max_weight);
  return out;
}

WordElement words_of_length(long length, long max_weight) {
  WordElement out;
  if (length == 0) return WordElement(Word());
  for (const Word& w : words_up_to_weight(max_weight))
    if (static_cast<long>(w.length()) == length) out.add(w, 1);
  return out;
}

}  // namespace

WordElement rho(const Forest& u, long max_weight) {
  if (u.any_labeled()) throw DomainError("rho takes an unlabeled forest");
  WordElement out;
  for (const Forest& v : label_assignments(u, max_weight)) out += pi(v);
  return out;
}

WordElement rho(const CKElement& x, long max_weight) {
  return linear_map(x, [max_weight](const Forest& u) { return rho(u, max_weight); });
}

WordElement beta2(const LinComb<OrderedForest>& x, long max_weight) {
  return linear_map(x, [max_weight](const OrderedForest& f) {
    WordElement out;
    for (const Forest& v : label_assignments(canonicalize(f), max_weight)) out += pi(v);
    return out;
  });
}

WordElement beta4(const QSymElement& x, long max_weight) {
  return linear_map(to_elementary_basis(x), [max_weight](const Word& lambda) {
    WordElement out{Word()};
    for (int k : lambda.letters())
      out = truncate(quasi_shuffle(out, words_of_length(k, max_weight), Pairing::Zero), max_weight);
    return out;
  });
}

LinComb<PlanarTree> beta2_star(const WordElement& x) {
  return linear_map(x, [](const Word& w) {
    LinComb<PlanarTree> out{PlanarTree()};
    for (int a : w.letters()) {
      LinComb<PlanarTree> img = alpha2_star(GLElement(ladder(a)));
      out = bilinear_map(out, img, [](const PlanarTree& s, const PlanarTree& t) { return planar_diamond(s, t); });
    }
    return out;
  });
}

QSymElement beta4_star(const WordElement& x) {
  return linear_map(x, [](const Word& w) {
    QSymElement out{Word()};
    for (int a : w.letters()) out = qsym_product(out, alpha4_star(GLElement(ladder(a))));
    return out;
  });
}

}  // namespace hopf
