#include "hopf/tree_hopf.hpp"

#include <functional>
#include <memory>

#include "cache.hpp"
#include "hopf/error.hpp"

namespace hopf {

namespace {

template <class F>
LinComb<Tensor<F>> tensor_multiply(const LinComb<Tensor<F>>& a, const LinComb<Tensor<F>>& b) {
  LinComb<Tensor<F>> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(Tensor<F>{x.left * y.left, x.right * y.right}, cx * cy);
  return out;
}

LinComb<Tensor<Forest>> tree_cut_coproduct(const RootedTree& t) {
  static detail::SyncCache<RootedTree, LinComb<Tensor<Forest>>> cache;
  return cache.get(t, [&] {
    LinComb<Tensor<Forest>> out;
    out.add({Forest{t}, Forest()}, 1);
    out.add({Forest(), Forest{t}}, 1);
    for (const auto& cut : admissible_cuts(t)) out.add({cut.pruned, Forest{cut.trunk}}, 1);
    return out;
  });
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

LinComb<Tensor<Forest>> cut_coproduct(const Forest& u) {
  LinComb<Tensor<Forest>> out(Tensor<Forest>{Forest(), Forest()});
  for (const auto& t : u.trees()) out = tensor_multiply(out, tree_cut_coproduct(t));
  return out;
}

LinComb<Tensor<Forest>> poset_coproduct(const Forest& u) {
  static detail::SyncCache<Forest, LinComb<Tensor<Forest>>> cache;
  return cache.get(u, [&] {
    FlatForest flat = flatten(u);
    const std::size_t n = flat.parent.size();
    if (n > 24) throw DomainError("poset_coproduct: forest too large");
    std::vector<std::uint64_t> child_mask(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (flat.parent[v] >= 0) child_mask[flat.parent[v]] |= std::uint64_t{1} << v;
    const std::uint64_t all = full_mask(n);
    LinComb<Tensor<Forest>> out;
    for (std::uint64_t s = 0; s <= all; ++s) {
      bool closed = true;
      for (std::size_t v = 0; v < n && closed; ++v)
        if ((s >> v & 1U) && (child_mask[v] & ~s)) closed = false;
      if (!closed) continue;
      out.add({induced_forest(flat, s), induced_forest(flat, all & ~s)}, 1);
    }
    return out;
  });
}

LinComb<Tensor<Forest>> ck_coproduct(const Forest& u) {
  return u.any_labeled() ? poset_coproduct(u) : cut_coproduct(u);
}

LinComb<Tensor<Forest>> ck_coproduct(const CKElement& x) {
  return linear_map(x, [](const Forest& u) { return ck_coproduct(u); });
}

LinComb<Forest> ck_product(const Forest& u, const Forest& v) { return LinComb<Forest>(u * v); }

CKElement ck_product(const CKElement& x, const CKElement& y) {
  return bilinear_map(x, y, [](const Forest& u, const Forest& v) { return ck_product(u, v); });
}

namespace {

CKElement tree_antipode(const RootedTree& t) {
  static detail::SyncCache<RootedTree, CKElement> cache;
  return cache.get(t, [&] {
    CKElement out(Forest{t}, -1);
    for (const auto& cut : admissible_cuts(t))
      out.add_scaled(ck_product(ck_antipode(cut.pruned), CKElement(Forest{cut.trunk})), -1);
    return out;
  });
}

}  // namespace

CKElement ck_antipode(const Forest& u) {
  CKElement out{Forest()};
  for (const auto& t : u.trees()) out = ck_product(out, tree_antipode(t));
  return out;
}

CKElement ck_antipode(const CKElement& x) {
  return linear_map(x, [](const Forest& u) { return ck_antipode(u); });
}

Rational ck_counit(const CKElement& x) { return x.coeff(Forest()); }

HopfStructure<Forest> ck_hopf() {
  return {Forest(), [](const Forest& a, const Forest& b) { return ck_product(a, b); },
          [](const Forest& u) { return ck_coproduct(u); }, [](const Forest& u) { return ck_antipode(u); }};
}

HopfStructure<Forest> ck_poset_hopf() {
  HopfStructure<Forest> h = ck_hopf();
  h.coproduct = [](const Forest& u) { return poset_coproduct(u); };
  return h;
}

LinComb<Tensor<Forest>> bplus_cocycle_defect(const Forest& u, int label) {
  RootedTree b = bplus(u, label);
  Forest bf{b};
  LinComb<Tensor<Forest>> out = ck_coproduct(bf);
  out.add({bf, Forest()}, -1);
  for (const auto& [t, c] : ck_coproduct(u)) out.add({t.left, Forest{bplus(t.right, label)}}, -c);
  return out;
}

// --- Grossman-Larson ---

namespace {

RootedTree attach(const FlatForest& flat, const std::vector<std::vector<RootedTree>>& extra, int v) {
  std::vector<RootedTree> kids = extra[v];
  for (std::size_t c = 0; c < flat.parent.size(); ++c)
    if (flat.parent[c] == v) kids.push_back(attach(flat, extra, static_cast<int>(c)));
  return RootedTree(flat.label[v], std::move(kids));
}

}  // namespace

GLElement gl_product(const RootedTree& x, const RootedTree& y) {
  const auto& bs = x.children();
  FlatForest flat = flatten(y);
  const std::size_t n = flat.parent.size();
  GLElement out;
  std::vector<std::vector<RootedTree>> extra(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bs.size()) {
      out.add(attach(flat, extra, 0), 1);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      extra[v].push_back(bs[i]);
      rec(i + 1);
      extra[v].pop_back();
    }
  };
  rec(0);
  return out;
}

GLElement gl_product(const GLElement& x, const GLElement& y) {
  return bilinear_map(x, y, [](const RootedTree& a, const RootedTree& b) { return gl_product(a, b); });
}

LinComb<Tensor<RootedTree>> gl_coproduct(const RootedTree& t) {
  const auto& bs = t.children();
  if (bs.size() > 20) throw DomainError("gl_coproduct: too many root branches");
  LinComb<Tensor<RootedTree>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << bs.size()); ++s) {
    std::vector<RootedTree> left, right;
    for (std::size_t i = 0; i < bs.size(); ++i) (s >> i & 1U ? left : right).push_back(bs[i]);
    out.add({RootedTree(t.label(), std::move(left)), RootedTree(t.label(), std::move(right))}, 1);
  }
  return out;
}

HopfStructure<RootedTree> gl_hopf() {
  Product<RootedTree> prod = [](const RootedTree& a, const RootedTree& b) { return gl_product(a, b); };
  Coproduct<RootedTree> cop = [](const RootedTree& t) { return gl_coproduct(t); };
  auto s = std::make_shared<RecursiveAntipode<RootedTree>>(RootedTree(), prod, cop);
  return {RootedTree(), prod, cop, [s](const RootedTree& t) { return (*s)(t); }};
}

Rational ck_gl_pairing(const GLElement& x, const CKElement& y) {
  return pair_eval(x, y, [](const RootedTree& t, const Forest& u) -> std::optional<Rational> {
    Forest b = branches(t);
    return b == u ? Rational(sym_order(u)) : Rational(0);
  });
}

Rational ck_gl_pairing(const LinComb<Tensor<RootedTree>>& x, const LinComb<Tensor<Forest>>& y) {
  return pair_eval(x, y, [](const Tensor<RootedTree>& t, const Tensor<Forest>& u) -> std::optional<Rational> {
    Forest l = branches(t.left), r = branches(t.right);
    if (l != u.left || r != u.right) return Rational(0);
    return Rational(sym_order(l) * sym_order(r));
  });
}

// --- planar ---

namespace {

template <class T>
void shuffles(const std::vector<T>& a, const std::vector<T>& b, std::size_t i, std::size_t j, std::vector<T>& cur,
              const std::function<void(const std::vector<T>&)>& emit) {
  if (i == a.size() && j == b.size()) {
    emit(cur);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffles(a, b, i + 1, j, cur, emit);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffles(a, b, i, j + 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

LinComb<PlanarTree> planar_diamond(const PlanarTree& x, const PlanarTree& y) {
  LinComb<PlanarTree> out;
  std::vector<PlanarTree> cur;
  std::function<void(const std::vector<PlanarTree>&)> emit = [&](const std::vector<PlanarTree>& seq) {
    out.add(PlanarTree(y.label(), seq), 1);
  };
  shuffles(x.children(), y.children(), 0, 0, cur, emit);
  return out;
}

LinComb<Tensor<PlanarTree>> planar_diamond_coproduct(const PlanarTree& t) {
  const auto& bs = t.children();
  LinComb<Tensor<PlanarTree>> out;
  for (std::size_t k = 0; k <= bs.size(); ++k) {
    std::vector<PlanarTree> l(bs.begin(), bs.begin() + static_cast<long>(k));
    std::vector<PlanarTree> r(bs.begin() + static_cast<long>(k), bs.end());
    out.add({PlanarTree(t.label(), std::move(l)), PlanarTree(t.label(), std::move(r))}, 1);
  }
  return out;
}

HopfStructure<PlanarTree> planar_hopf() {
  Product<PlanarTree> prod = [](const PlanarTree& a, const PlanarTree& b) { return planar_diamond(a, b); };
  Coproduct<PlanarTree> cop = [](const PlanarTree& t) { return planar_diamond_coproduct(t); };
  auto s = std::make_shared<RecursiveAntipode<PlanarTree>>(PlanarTree(), prod, cop);
  return {PlanarTree(), prod, cop, [s](const PlanarTree& t) { return (*s)(t); }};
}

namespace {

struct PlanarOption {
  std::vector<PlanarTree> pruned;
  PlanarTree trunk;
  bool trivial = true;
};

std::vector<PlanarOption> planar_cut_options(const PlanarTree& t) {
  std::vector<PlanarOption> acc{PlanarOption{}};
  std::vector<std::vector<PlanarTree>> kids{{}};
  for (const auto& child : t.children()) {
    auto child_opts = planar_cut_options(child);
    std::vector<PlanarOption> next;
    std::vector<std::vector<PlanarTree>> next_kids;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      PlanarOption cut = acc[i];
      cut.pruned.push_back(child);
      cut.trivial = false;
      next.push_back(std::move(cut));
      next_kids.push_back(kids[i]);
      for (const auto& co : child_opts) {
        PlanarOption keep = acc[i];
        keep.pruned.insert(keep.pruned.end(), co.pruned.begin(), co.pruned.end());
        keep.trivial = keep.trivial && co.trivial;
        next.push_back(std::move(keep));
        auto k = kids[i];
        k.push_back(co.trunk);
        next_kids.push_back(std::move(k));
      }
    }
    acc = std::move(next);
    kids = std::move(next_kids);
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].trunk = PlanarTree(t.label(), std::move(kids[i]));
  return acc;
}

}  // namespace

std::vector<PlanarCut> planar_admissible_cuts(const PlanarTree& t) {
  std::vector<PlanarCut> out;
  for (auto& o : planar_cut_options(t))
    if (!o.trivial) out.push_back({OrderedForest(std::move(o.pruned)), std::move(o.trunk)});
  return out;
}

namespace {

LinComb<Tensor<OrderedForest>> planar_tree_coproduct(const PlanarTree& t) {
  static detail::SyncCache<PlanarTree, LinComb<Tensor<OrderedForest>>> cache;
  return cache.get(t, [&] {
    LinComb<Tensor<OrderedForest>> out;
    out.add({OrderedForest{t}, OrderedForest()}, 1);
    out.add({OrderedForest(), OrderedForest{t}}, 1);
    for (const auto& cut : planar_admissible_cuts(t)) out.add({cut.pruned, OrderedForest{cut.trunk}}, 1);
    return out;
  });
}

}  // namespace

LinComb<Tensor<OrderedForest>> foissy_coproduct(const OrderedForest& f) {
  LinComb<Tensor<OrderedForest>> out(Tensor<OrderedForest>{OrderedForest(), OrderedForest()});
  for (const auto& t : f.trees()) out = tensor_multiply(out, planar_tree_coproduct(t));
  return out;
}

LinComb<OrderedForest> foissy_product(const OrderedForest& a, const OrderedForest& b) {
  return LinComb<OrderedForest>(a * b);
}

namespace {

RecursiveAntipode<OrderedForest>& foissy_recursive_antipode() {
  static RecursiveAntipode<OrderedForest> s(
      OrderedForest(), [](const OrderedForest& a, const OrderedForest& b) { return foissy_product(a, b); },
      [](const OrderedForest& f) { return foissy_coproduct(f); });
  return s;
}

}  // namespace

LinComb<OrderedForest> foissy_antipode(const OrderedForest& f) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return foissy_recursive_antipode()(f);
}

HopfStructure<OrderedForest> foissy_hopf() {
  return {OrderedForest(), [](const OrderedForest& a, const OrderedForest& b) { return foissy_product(a, b); },
          [](const OrderedForest& f) { return foissy_coproduct(f); },
          [](const OrderedForest& f) { return foissy_antipode(f); }};
}

// --- characters ---

Functional<Forest> character_from_trees(TreeValues on_trees) {
  return [f = std::move(on_trees)](const Forest& u) {
    Rational out(1);
    for (const auto& t : u.trees()) out *= f(t);
    return out;
  };
}

Functional<Forest> infinitesimal_from_trees(TreeValues on_trees) {
  return [g = std::move(on_trees)](const Forest& u) { return u.count() == 1 ? g(u.trees().front()) : Rational(0); };
}

Functional<Forest> ck_counit_functional() {
  return [](const Forest& u) { return Rational(u.empty() ? 1 : 0); };
}

Functional<Forest> char_convolution(Functional<Forest> f, Functional<Forest> g) {
  return memoize<Forest>(functional_convolve<Forest>(std::move(f), std::move(g),
                                                     [](const Forest& u) { return ck_coproduct(u); }));
}

Functional<Forest> char_exp(Functional<Forest> g) {
  if (!g(Forest()).is_zero()) throw DomainError("char_exp: argument must vanish on the unit I");
  auto powers = std::make_shared<std::vector<Functional<Forest>>>();
  powers->push_back(ck_counit_functional());
  auto mu = std::make_shared<std::mutex>();
  return [g = std::move(g), powers, mu](const Forest& u) {
    std::size_t n = u.size();
    std::vector<Functional<Forest>> local;
    {
      std::lock_guard<std::mutex> lock(*mu);
      while (powers->size() <= n) powers->push_back(char_convolution(powers->back(), g));
      local.assign(powers->begin(), powers->begin() + static_cast<long>(n + 1));
    }
    Rational out;
    for (std::size_t k = 0; k <= n; ++k) out += local[k](u) / factorial(static_cast<long>(k));
    return out;
  };
}

}  // namespace hopf
