#ifndef HOPF_LINALG_HPP
#define HOPF_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "hopf/lincomb.hpp"

namespace hopf {

// Incremental exact Gaussian elimination over sparse vectors. Each stored row
// is keyed by its pivot, the largest basis element it contains, and remembers
// how it was built from the inserted vectors.
template <class B>
class RowEchelon {
 public:
  // Adds v to the spanning set. Returns true iff the rank grew.
  bool insert(const LinComb<B>& v) {
    std::map<std::size_t, Rational> combo{{inserted_, Rational(1)}};
    ++inserted_;
    LinComb<B> r = reduce_tracking(v, combo);
    if (r.empty()) return false;
    B pivot = std::prev(r.end())->first;
    rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  // Remainder of v after elimination against the stored rows.
  LinComb<B> reduce(const LinComb<B>& v) const {
    std::map<std::size_t, Rational> scratch;
    return reduce_tracking(v, scratch);
  }

  bool in_span(const LinComb<B>& v) const { return reduce(v).empty(); }

  // Coefficients c_i (indexed by insertion order) with v = sum c_i v_i, or
  // nullopt when v is outside the span.
  std::optional<std::vector<Rational>> express(const LinComb<B>& v) const {
    std::map<std::size_t, Rational> combo;
    LinComb<B> r = reduce_tracking(v, combo);
    if (!r.empty()) return std::nullopt;
    // reduce_tracking records v - sum(...) = r; negate to get v = sum(...).
    std::vector<Rational> out(inserted_);
    for (const auto& [i, c] : combo) out[i] = -c;
    return out;
  }

 private:
  struct Row {
    LinComb<B> vec;
    std::map<std::size_t, Rational> combo;
  };

  // Eliminates pivots from v, largest first; combo accumulates the
  // combination of inserted vectors that was added to v.
  LinComb<B> reduce_tracking(LinComb<B> v, std::map<std::size_t, Rational>& combo) const {
    for (;;) {
      const Row* row = nullptr;
      Rational coeff;
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        auto found = rows_.find(it->first);
        if (found != rows_.end()) {
          row = &found->second;
          coeff = it->second / found->second.vec.coeff(it->first);
          break;
        }
      }
      if (!row) return v;
      v.add_scaled(row->vec, -coeff);
      for (const auto& [i, c] : row->combo) {
        Rational& slot = combo[i];
        slot -= coeff * c;
      }
    }
  }

  std::map<B, Row> rows_;
  std::size_t inserted_ = 0;
};

template <class B>
std::size_t rank_of(const std::vector<LinComb<B>>& vectors) {
  RowEchelon<B> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace hopf

#endif
