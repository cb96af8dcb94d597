#include "hopf/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hopf/error.hpp"

namespace hopf {

template <bool P>
struct BasicTree<P>::Node {
  int label = 0;
  std::vector<BasicTree<P>> children;
  std::size_t size = 1;
  long weight = 0;
  bool fully_labeled = false;
  bool any_labeled = false;
  std::string code;
};

template <bool P>
BasicTree<P>::BasicTree() {
  auto n = std::make_shared<Node>();
  n->code = "[]";
  node_ = std::move(n);
}

template <bool P>
BasicTree<P>::BasicTree(int label, std::vector<BasicTree> children) {
  if (label < 0) throw DomainError("tree labels must be positive (0 = unlabeled)");
  if constexpr (!P) std::sort(children.begin(), children.end());
  auto n = std::make_shared<Node>();
  n->label = label;
  n->weight = label;
  n->fully_labeled = label > 0;
  n->any_labeled = label > 0;
  if (label > 0) n->code = "f" + std::to_string(label);
  if (!children.empty()) {
    n->code += '[';
    bool first = true;
    for (const auto& c : children) {
      if (!first) n->code += ',';
      first = false;
      n->code += c.code();
      n->size += c.size();
      n->weight += c.weight();
      n->fully_labeled = n->fully_labeled && c.fully_labeled();
      n->any_labeled = n->any_labeled || c.any_labeled();
    }
    n->code += ']';
  } else if (label == 0) {
    n->code = "[]";
  }
  n->children = std::move(children);
  node_ = std::move(n);
}

template <bool P>
int BasicTree<P>::label() const {
  return node_->label;
}
template <bool P>
const std::vector<BasicTree<P>>& BasicTree<P>::children() const {
  return node_->children;
}
template <bool P>
std::size_t BasicTree<P>::size() const {
  return node_->size;
}
template <bool P>
long BasicTree<P>::weight() const {
  return node_->weight;
}
template <bool P>
bool BasicTree<P>::fully_labeled() const {
  return node_->fully_labeled;
}
template <bool P>
bool BasicTree<P>::any_labeled() const {
  return node_->any_labeled;
}
template <bool P>
const std::string& BasicTree<P>::code() const {
  return node_->code;
}

template class BasicTree<false>;
template class BasicTree<true>;

template <bool P>
BasicForest<P>::BasicForest(std::vector<tree_type> trees) : trees_(std::move(trees)) {
  if constexpr (!P) std::sort(trees_.begin(), trees_.end());
  for (const auto& t : trees_) {
    size_ += t.size();
    weight_ += t.weight();
  }
}

template <bool P>
bool BasicForest<P>::fully_labeled() const {
  return std::all_of(trees_.begin(), trees_.end(), [](const tree_type& t) { return t.fully_labeled(); });
}
template <bool P>
bool BasicForest<P>::any_labeled() const {
  return std::any_of(trees_.begin(), trees_.end(), [](const tree_type& t) { return t.any_labeled(); });
}

template class BasicForest<false>;
template class BasicForest<true>;

template <bool P>
std::string to_string(const BasicForest<P>& f) {
  if (f.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (i) out += ' ';
    out += f.trees()[i].code();
  }
  return out;
}
template std::string to_string(const BasicForest<false>&);
template std::string to_string(const BasicForest<true>&);

// --- parsing ---

namespace {

template <bool P>
class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BasicTree<P> tree() {
    std::size_t start = pos_;
    int label = 0;
    if (peek() == 'f') {
      ++pos_;
      std::size_t digits = pos_;
      long value = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1000000) throw ParseError("label too large", digits);
        ++pos_;
      }
      if (pos_ == digits) throw ParseError("expected label digits", pos_);
      if (value == 0) throw ParseError("label must be positive", digits);
      label = static_cast<int>(value);
    }
    std::vector<BasicTree<P>> children;
    if (peek() == '[') {
      ++pos_;
      if (peek() != ']') {
        for (;;) {
          children.push_back(tree());
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      if (at_end()) throw ParseError("unbalanced bracket", pos_);
      if (peek() != ']') throw ParseError("expected ',' or ']'", pos_);
      ++pos_;
    } else if (label == 0) {
      if (at_end()) throw ParseError("expected tree", pos_);
      throw ParseError("expected '[' or label", start);
    }
    return BasicTree<P>(label, std::move(children));
  }

  BasicForest<P> forest() {
    skip_spaces();
    if (peek() == 'I') {
      ++pos_;
      skip_spaces();
      finish();
      return {};
    }
    std::vector<BasicTree<P>> trees;
    while (!at_end()) {
      trees.push_back(tree());
      std::size_t before = pos_;
      skip_spaces();
      if (!at_end() && pos_ == before) throw ParseError("expected space between trees", pos_);
    }
    if (trees.empty()) throw ParseError("empty forest (use I)", pos_);
    return BasicForest<P>(std::move(trees));
  }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  void finish() {
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <bool P>
BasicTree<P> parse_single(std::string_view text) {
  TreeParser<P> p(text);
  p.skip_spaces();
  auto t = p.tree();
  p.skip_spaces();
  p.finish();
  return t;
}

}  // namespace

RootedTree parse_tree(std::string_view text) { return parse_single<false>(text); }
PlanarTree parse_planar_tree(std::string_view text) { return parse_single<true>(text); }
Forest parse_forest(std::string_view text) { return TreeParser<false>(text).forest(); }
OrderedForest parse_ordered_forest(std::string_view text) { return TreeParser<true>(text).forest(); }

namespace {

std::vector<PlanarTree> bbr_components(std::string_view text, std::size_t& pos, bool nested) {
  std::vector<PlanarTree> out;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '>') {
      if (!nested) throw ParseError("unbalanced '>'", pos);
      return out;
    }
    if (c != '<') throw ParseError("unexpected character in BBR", pos);
    std::size_t open = pos;
    ++pos;
    auto inner = bbr_components(text, pos, true);
    if (pos >= text.size()) throw ParseError("unbalanced '<'", open);
    ++pos;  // '>'
    out.emplace_back(0, std::move(inner));
  }
  return out;
}

}  // namespace

PlanarTree bbr_parse(std::string_view text) {
  std::size_t pos = 0;
  auto comps = bbr_components(text, pos, false);
  return PlanarTree(0, std::move(comps));
}

std::string bbr_print(const PlanarTree& t) {
  std::string out;
  for (const auto& c : t.children()) out += "<" + bbr_print(c) + ">";
  return out;
}

// --- construction ---

RootedTree canonicalize(const PlanarTree& t) {
  std::vector<RootedTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  return RootedTree(t.label(), std::move(kids));
}

Forest canonicalize(const OrderedForest& f) {
  std::vector<RootedTree> trees;
  for (const auto& t : f.trees()) trees.push_back(canonicalize(t));
  return Forest(std::move(trees));
}

PlanarTree to_planar(const RootedTree& t) {
  std::vector<PlanarTree> kids;
  for (const auto& c : t.children()) kids.push_back(to_planar(c));
  return PlanarTree(t.label(), std::move(kids));
}

template <bool P>
BasicTree<P> bplus(const BasicForest<P>& u, int label) {
  return BasicTree<P>(label, u.trees());
}
template RootedTree bplus(const Forest&, int);
template PlanarTree bplus(const OrderedForest&, int);

template <bool P>
BasicForest<P> branches(const BasicTree<P>& t) {
  return BasicForest<P>(t.children());
}
template Forest branches(const RootedTree&);
template OrderedForest branches(const PlanarTree&);

RootedTree graft(const RootedTree& t, const Forest& u) {
  std::vector<RootedTree> kids = t.children();
  kids.insert(kids.end(), u.trees().begin(), u.trees().end());
  return RootedTree(t.label(), std::move(kids));
}

RootedTree graft(const Forest& t, const Forest& u) {
  if (t.empty()) throw DomainError("graft: left operand is the empty forest");
  if (t.count() != 1) throw DomainError("graft: left operand must be a single tree");
  return graft(t.trees().front(), u);
}

RootedTree graft_power(const RootedTree& t, int r) {
  if (r < 1) throw DomainError("graft_power: exponent must be >= 1");
  RootedTree x = t;
  for (int i = 1; i < r; ++i) x = graft(t, Forest{x});
  return x;
}

RootedTree ladder(int n, int label) {
  if (n < 1) throw DomainError("ladder needs at least one vertex");
  RootedTree x(label);
  for (int i = 1; i < n; ++i) x = RootedTree(label, {x});
  return x;
}

PlanarTree planar_ladder(int n) { return to_planar(ladder(n)); }

RootedTree labeled_ladder(const Word& w) {
  if (w.empty()) throw DomainError("labeled ladder of the empty word");
  RootedTree x(w[0]);
  for (std::size_t i = 1; i < w.length(); ++i) x = RootedTree(w[i], {x});
  return x;
}

PlanarTree planar_ladder_corolla(const Word& composition) {
  std::vector<PlanarTree> kids;
  for (int p : composition.letters()) kids.push_back(planar_ladder(p));
  return PlanarTree(0, std::move(kids));
}

RootedTree ladder_corolla(const Word& parts) {
  std::vector<RootedTree> kids;
  for (int p : parts.letters()) kids.push_back(ladder(p));
  return RootedTree(0, std::move(kids));
}

namespace {

template <class F>
std::int64_t grouped_product(const std::vector<RootedTree>& sorted, F&& per_tree) {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    std::int64_t m = static_cast<std::int64_t>(j - i);
    std::int64_t v = per_tree(sorted[i]);
    for (std::int64_t k = 2; k <= m; ++k) out *= k;
    for (std::int64_t k = 0; k < m; ++k) out *= v;
    i = j;
  }
  return out;
}

}  // namespace

std::int64_t sym_order(const RootedTree& t) {
  return grouped_product(t.children(), [](const RootedTree& c) { return sym_order(c); });
}

std::int64_t sym_order(const Forest& u) {
  return grouped_product(u.trees(), [](const RootedTree& c) { return sym_order(c); });
}

std::int64_t per_count(const Forest& u) {
  return grouped_product(u.trees(), [](const RootedTree& t) { return per_count(branches(t)); });
}

std::vector<PlanarTree> planar_preimages(const RootedTree& t) {
  std::set<PlanarTree> out;
  std::vector<RootedTree> kids = t.children();  // sorted
  do {
    std::vector<std::vector<PlanarTree>> options;
    for (const auto& k : kids) options.push_back(planar_preimages(k));
    std::vector<PlanarTree> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == options.size()) {
        out.insert(PlanarTree(t.label(), current));
        return;
      }
      for (const auto& o : options[i]) {
        current.push_back(o);
        rec(i + 1);
        current.pop_back();
      }
    };
    rec(0);
  } while (std::next_permutation(kids.begin(), kids.end()));
  return {out.begin(), out.end()};
}

// --- flat representation ---

namespace {

void flatten_into(const RootedTree& t, int parent, FlatForest& out) {
  int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.label.push_back(t.label());
  for (const auto& c : t.children()) flatten_into(c, me, out);
}

}  // namespace

FlatForest flatten(const Forest& u) {
  FlatForest out;
  for (const auto& t : u.trees()) flatten_into(t, -1, out);
  if (out.parent.size() > 64) throw DomainError("forest too large for flat representation (> 64 vertices)");
  return out;
}

FlatForest flatten(const RootedTree& t) { return flatten(Forest{t}); }

Forest induced_forest(const FlatForest& flat, std::uint64_t mask) {
  const int n = static_cast<int>(flat.parent.size());
  std::vector<std::vector<int>> kids(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    if (!(mask >> v & 1U)) continue;
    int p = flat.parent[v];
    if (p >= 0 && (mask >> p & 1U))
      kids[p].push_back(v);
    else
      roots.push_back(v);
  }
  std::function<RootedTree(int)> build = [&](int v) {
    std::vector<RootedTree> cs;
    for (int c : kids[v]) cs.push_back(build(c));
    return RootedTree(flat.label[v], std::move(cs));
  };
  std::vector<RootedTree> trees;
  for (int r : roots) trees.push_back(build(r));
  return Forest(std::move(trees));
}

// --- admissible cuts ---

namespace {

struct CutOption {
  std::vector<int> edges;
  std::vector<RootedTree> pruned;
  RootedTree trunk;
};

// All cut options of the subtree t whose root has preorder index base,
// including the empty cut.
std::vector<CutOption> cut_options(const RootedTree& t, int base) {
  std::vector<CutOption> acc{CutOption{{}, {}, RootedTree()}};
  std::vector<std::vector<RootedTree>> trunk_kids{{}};
  int offset = base + 1;
  for (const auto& child : t.children()) {
    std::vector<CutOption> next;
    std::vector<std::vector<RootedTree>> next_kids;
    auto child_opts = cut_options(child, offset);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      // Cut the edge into this child.
      {
        CutOption o = acc[i];
        o.edges.push_back(offset);
        o.pruned.push_back(child);
        next.push_back(std::move(o));
        next_kids.push_back(trunk_kids[i]);
      }
      // Keep the edge, cut inside the child.
      for (const auto& co : child_opts) {
        CutOption o = acc[i];
        o.edges.insert(o.edges.end(), co.edges.begin(), co.edges.end());
        o.pruned.insert(o.pruned.end(), co.pruned.begin(), co.pruned.end());
        next.push_back(std::move(o));
        auto k = trunk_kids[i];
        k.push_back(co.trunk);
        next_kids.push_back(std::move(k));
      }
    }
    acc = std::move(next);
    trunk_kids = std::move(next_kids);
    offset += static_cast<int>(child.size());
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].trunk = RootedTree(t.label(), std::move(trunk_kids[i]));
  return acc;
}

}  // namespace

std::vector<AdmissibleCut> admissible_cuts(const RootedTree& t) {
  std::vector<AdmissibleCut> out;
  for (auto& o : cut_options(t, 0)) {
    if (o.edges.empty()) continue;
    std::sort(o.edges.begin(), o.edges.end());
    out.push_back(AdmissibleCut{std::move(o.edges), Forest(std::move(o.pruned)), std::move(o.trunk)});
  }
  return out;
}

// --- linear extensions ---

std::vector<Word> linear_extensions(const Forest& u) {
  if (!u.fully_labeled()) throw DomainError("linear_extensions: forest has an unlabeled vertex: " + to_string(u));
  if (u.empty()) return {Word()};
  FlatForest flat = flatten(u);
  const int n = static_cast<int>(flat.parent.size());
  std::vector<std::uint64_t> child_mask(n, 0);
  for (int v = 0; v < n; ++v)
    if (flat.parent[v] >= 0) child_mask[flat.parent[v]] |= std::uint64_t{1} << v;

  // Suffix words for each remaining vertex set; a vertex may be emitted once
  // none of its descendants remain.
  std::map<std::uint64_t, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(std::uint64_t)> rec =
      [&](std::uint64_t mask) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (mask == 0) {
      out.emplace_back();
    } else {
      for (int v = 0; v < n; ++v) {
        if (!(mask >> v & 1U) || (child_mask[v] & mask)) continue;
        for (const auto& rest : rec(mask & ~(std::uint64_t{1} << v))) {
          std::vector<int> w;
          w.reserve(rest.size() + 1);
          w.push_back(flat.label[v]);
          w.insert(w.end(), rest.begin(), rest.end());
          out.push_back(std::move(w));
        }
      }
    }
    return memo.emplace(mask, std::move(out)).first->second;
  };
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<Word> words;
  for (const auto& w : rec(full)) words.emplace_back(w);
  return words;
}

// --- enumeration ---

namespace {

template <bool P, class Measure>
void multisets(const std::vector<BasicTree<P>>& pool, Measure measure, long remaining, std::size_t start,
               std::vector<BasicTree<P>>& current, std::vector<BasicForest<P>>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    long m = measure(pool[i]);
    if (m > remaining) continue;
    current.push_back(pool[i]);
    multisets(pool, measure, remaining - m, P ? 0 : i, current, out);
    current.pop_back();
  }
}

// Trees and forests indexed by a measure (vertex count or weight), built
// bottom up.
struct TreeTable {
  std::vector<std::vector<RootedTree>> trees;  // by measure
  std::vector<std::vector<Forest>> forests;    // by measure
};

TreeTable build_unlabeled(int max_vertices) {
  TreeTable tab;
  tab.trees.resize(max_vertices + 1);
  tab.forests.resize(max_vertices + 1);
  tab.forests[0] = {Forest()};
  auto size_of = [](const RootedTree& t) { return static_cast<long>(t.size()); };
  std::vector<RootedTree> pool;
  for (int n = 1; n <= max_vertices; ++n) {
    for (const auto& f : tab.forests[n - 1]) tab.trees[n].push_back(bplus(f));
    std::sort(tab.trees[n].begin(), tab.trees[n].end());
    pool.insert(pool.end(), tab.trees[n].begin(), tab.trees[n].end());
    std::vector<RootedTree> cur;
    multisets<false>(pool, size_of, n, 0, cur, tab.forests[n]);
    std::sort(tab.forests[n].begin(), tab.forests[n].end());
  }
  return tab;
}

TreeTable build_labeled(long max_weight) {
  TreeTable tab;
  tab.trees.resize(max_weight + 1);
  tab.forests.resize(max_weight + 1);
  tab.forests[0] = {Forest()};
  auto weight_of = [](const RootedTree& t) { return t.weight(); };
  std::vector<RootedTree> pool;
  for (long w = 1; w <= max_weight; ++w) {
    for (long a = 1; a <= w; ++a)
      for (const auto& f : tab.forests[w - a]) tab.trees[w].push_back(bplus(f, static_cast<int>(a)));
    std::sort(tab.trees[w].begin(), tab.trees[w].end());
    pool.insert(pool.end(), tab.trees[w].begin(), tab.trees[w].end());
    std::sort(pool.begin(), pool.end());
    std::vector<RootedTree> cur;
    multisets<false>(pool, weight_of, w, 0, cur, tab.forests[w]);
    std::sort(tab.forests[w].begin(), tab.forests[w].end());
  }
  return tab;
}

}  // namespace

std::vector<RootedTree> unlabeled_trees(int vertices) {
  if (vertices < 1) return {};
  return build_unlabeled(vertices).trees[vertices];
}

std::vector<Forest> unlabeled_forests(int vertices) {
  if (vertices < 0) return {};
  if (vertices == 0) return {Forest()};
  return build_unlabeled(vertices).forests[vertices];
}

std::vector<Forest> unlabeled_forests_up_to(int max_vertices) {
  std::vector<Forest> out;
  if (max_vertices < 0) return out;
  auto tab = build_unlabeled(max_vertices);
  for (const auto& fs : tab.forests) out.insert(out.end(), fs.begin(), fs.end());
  return out;
}

std::vector<RootedTree> labeled_trees_of_weight(long weight) {
  if (weight < 1) return {};
  return build_labeled(weight).trees[weight];
}

std::vector<Forest> labeled_forests_of_weight(long weight) {
  if (weight < 0) return {};
  if (weight == 0) return {Forest()};
  return build_labeled(weight).forests[weight];
}

std::vector<Forest> labeled_forests_up_to(long max_weight) {
  std::vector<Forest> out;
  if (max_weight < 0) return out;
  auto tab = build_labeled(max_weight);
  for (const auto& fs : tab.forests) out.insert(out.end(), fs.begin(), fs.end());
  return out;
}

std::vector<RootedTree> enumerate_trees(int n, bool labeled, std::optional<long> max_weight) {
  if (n < 1) throw DomainError("enumerate_trees: degree must be >= 1");
  if (!labeled) return unlabeled_trees(n);
  if (!max_weight) throw DomainError("enumerate_trees: labeled mode needs max_weight (the set is infinite)");
  std::vector<RootedTree> out;
  if (*max_weight < 1) return out;
  auto tab = build_labeled(*max_weight);
  for (const auto& ts : tab.trees)
    for (const auto& t : ts)
      if (static_cast<int>(t.size()) == n) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedForest> ordered_forests(int vertices) {
  if (vertices < 0) return {};
  std::vector<std::vector<PlanarTree>> trees(vertices + 1);
  std::vector<std::vector<OrderedForest>> forests(vertices + 1);
  forests[0] = {OrderedForest()};
  auto size_of = [](const PlanarTree& t) { return static_cast<long>(t.size()); };
  std::vector<PlanarTree> pool;
  for (int n = 1; n <= vertices; ++n) {
    for (const auto& f : forests[n - 1]) trees[n].push_back(bplus(f));
    std::sort(trees[n].begin(), trees[n].end());
    pool.insert(pool.end(), trees[n].begin(), trees[n].end());
    std::vector<PlanarTree> cur;
    multisets<true>(pool, size_of, n, 0, cur, forests[n]);
    std::sort(forests[n].begin(), forests[n].end());
  }
  return forests[vertices];
}

std::vector<PlanarTree> planar_trees(int vertices) {
  if (vertices < 1) return {};
  std::vector<PlanarTree> out;
  for (const auto& f : ordered_forests(vertices - 1)) out.push_back(bplus(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedForest> ordered_forests_up_to(int max_vertices) {
  std::vector<OrderedForest> out;
  for (int n = 0; n <= max_vertices; ++n) {
    auto fs = ordered_forests(n);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<Forest> labelings(const Forest& u, long max_weight) {
  FlatForest flat = flatten(u);
  const int n = static_cast<int>(flat.parent.size());
  std::set<Forest> out;
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::function<void(int, long)> rec = [&](int v, long budget) {
    if (v == n) {
      out.insert(induced_forest(flat, full));
      return;
    }
    // Each later vertex needs at least weight 1.
    for (long a = 1; a <= budget - (n - v - 1); ++a) {
      flat.label[v] = static_cast<int>(a);
      rec(v + 1, budget - a);
    }
  };
  if (max_weight >= n) rec(0, max_weight);
  return {out.begin(), out.end()};
}

}  // namespace hopf
