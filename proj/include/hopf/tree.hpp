#ifndef HOPF_TREE_HPP
#define HOPF_TREE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/word.hpp"

namespace hopf {

// Rooted tree with optional positive-integer vertex labels (label k stands for
// the letter f_k, 0 means unlabeled). Non-planar trees keep their children in
// canonical sorted order, so equality is structural; planar trees keep the
// given order.
//
// Canonical order: vertex count, then weight, then the text encoding.
template <bool Planar>
class BasicTree {
 public:
  // A single unlabeled vertex.
  BasicTree();
  explicit BasicTree(int label, std::vector<BasicTree> children = {});

  int label() const;
  const std::vector<BasicTree>& children() const;
  std::size_t size() const;
  long weight() const;
  bool fully_labeled() const;
  bool any_labeled() const;
  // Encoding in the tree grammar: "[]", "[[],[]]", "f2[f1]".
  const std::string& code() const;

  friend std::strong_ordering operator<=>(const BasicTree& a, const BasicTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    return a.code().compare(b.code()) <=> 0;
  }
  friend bool operator==(const BasicTree& a, const BasicTree& b) {
    return a.node_ == b.node_ || a.code() == b.code();
  }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

using RootedTree = BasicTree<false>;
using PlanarTree = BasicTree<true>;

// Multiset of rooted trees (non-planar), or ordered sequence of planar trees.
// The empty forest is the unit I.
template <bool Planar>
class BasicForest {
 public:
  using tree_type = BasicTree<Planar>;

  BasicForest() = default;
  explicit BasicForest(std::vector<tree_type> trees);
  BasicForest(std::initializer_list<tree_type> trees) : BasicForest(std::vector<tree_type>(trees)) {}

  const std::vector<tree_type>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t count() const { return trees_.size(); }
  std::size_t size() const { return size_; }
  long weight() const { return weight_; }
  bool fully_labeled() const;
  bool any_labeled() const;

  // Commutative product (multiset union) or concatenation (planar).
  friend BasicForest operator*(const BasicForest& a, const BasicForest& b) {
    std::vector<tree_type> all = a.trees_;
    all.insert(all.end(), b.trees_.begin(), b.trees_.end());
    return BasicForest(std::move(all));
  }

  friend std::strong_ordering operator<=>(const BasicForest& a, const BasicForest& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                  b.trees_.end());
  }
  friend bool operator==(const BasicForest& a, const BasicForest& b) { return a.trees_ == b.trees_; }

 private:
  std::vector<tree_type> trees_;
  std::size_t size_ = 0;
  long weight_ = 0;
};

using Forest = BasicForest<false>;
using OrderedForest = BasicForest<true>;

template <bool P>
std::string to_string(const BasicTree<P>& t) {
  return t.code();
}
// Space-separated trees; the empty forest prints "I".
template <bool P>
std::string to_string(const BasicForest<P>& f);

// --- parsing (tree grammar; errors carry byte offsets) ---
RootedTree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text);
PlanarTree parse_planar_tree(std::string_view text);
OrderedForest parse_ordered_forest(std::string_view text);

// Balanced bracket representation of planar trees: "" is the single vertex,
// "<G>" a root with the components of G as branches.
PlanarTree bbr_parse(std::string_view text);
std::string bbr_print(const PlanarTree& t);

// --- construction ---
RootedTree canonicalize(const PlanarTree& t);
Forest canonicalize(const OrderedForest& f);
PlanarTree to_planar(const RootedTree& t);

// Joins the roots of u below a new root with the given label (0: unlabeled).
template <bool P>
BasicTree<P> bplus(const BasicForest<P>& u, int label = 0);
// Inverse of bplus: the forest of root branches.
template <bool P>
BasicForest<P> branches(const BasicTree<P>& t);

// t o u: the roots of u become additional children of the root of t.
RootedTree graft(const RootedTree& t, const Forest& u);
// Forest-valued left operand; must be a single tree.
RootedTree graft(const Forest& t, const Forest& u);
// t^{o r} = t o (t o (... o t)), r copies.
RootedTree graft_power(const RootedTree& t, int r);

// Ladder with n vertices (B+ applied n times to I), all labels equal.
RootedTree ladder(int n, int label = 0);
PlanarTree planar_ladder(int n);
// Labeled ladder whose deepest vertex carries w[0] and whose root carries the
// last letter, so that pi(labeled_ladder(w)) = w.
RootedTree labeled_ladder(const Word& w);
// B+(l_{i_1}, ..., l_{i_k}) for a composition (planar) or partition.
PlanarTree planar_ladder_corolla(const Word& composition);
RootedTree ladder_corolla(const Word& parts);

// Order of the automorphism group (labels respected).
std::int64_t sym_order(const RootedTree& t);
std::int64_t sym_order(const Forest& u);
// per(I)=1, per(B+_a(u))=per(u), per(prod t_j^{i_j}) = prod i_j! per(t_j)^{i_j}.
std::int64_t per_count(const Forest& u);

// Distinct planar embeddings of a rooted tree (the preimages under
// forgetting the order), in canonical order.
std::vector<PlanarTree> planar_preimages(const RootedTree& t);

// --- flat vertex representation ---
// Vertices in preorder; parent[v] = -1 for roots.
struct FlatForest {
  std::vector<int> parent;
  std::vector<int> label;
};
FlatForest flatten(const Forest& u);
FlatForest flatten(const RootedTree& t);
// Forest induced on the vertices in mask (bit v set = vertex v kept).
Forest induced_forest(const FlatForest& flat, std::uint64_t mask);

// A non-trivial admissible cut. edges holds the preorder indices of the
// child endpoint of each cut edge.
struct AdmissibleCut {
  std::vector<int> edges;
  Forest pruned;      // P_c
  RootedTree trunk;   // R_c, contains the original root
};
std::vector<AdmissibleCut> admissible_cuts(const RootedTree& t);

// Words read off the linear extensions of the vertex poset (every vertex
// before its ancestors). Throws DomainError on an unlabeled vertex.
std::vector<Word> linear_extensions(const Forest& u);

// --- enumeration (canonical order, duplicate free) ---
std::vector<RootedTree> unlabeled_trees(int vertices);
std::vector<Forest> unlabeled_forests(int vertices);
// All unlabeled forests with 0..max_vertices vertices (I included).
std::vector<Forest> unlabeled_forests_up_to(int max_vertices);
std::vector<RootedTree> labeled_trees_of_weight(long weight);
std::vector<Forest> labeled_forests_of_weight(long weight);
std::vector<Forest> labeled_forests_up_to(long max_weight);
// Trees with n vertices; labeled mode requires max_weight (total weight
// bound) and throws DomainError without it.
std::vector<RootedTree> enumerate_trees(int n, bool labeled, std::optional<long> max_weight = std::nullopt);
std::vector<PlanarTree> planar_trees(int vertices);
std::vector<OrderedForest> ordered_forests(int vertices);
std::vector<OrderedForest> ordered_forests_up_to(int max_vertices);
// All labelings (positive labels, total weight <= max_weight) of an
// unlabeled forest, as distinct labeled forests.
std::vector<Forest> labelings(const Forest& u, long max_weight);

}  // namespace hopf

#endif
