#ifndef HOPF_DIAGRAMS_HPP
#define HOPF_DIAGRAMS_HPP

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hopf/morphisms.hpp"

namespace hopf {

// NSym: z-words. QSym/Sym: compositions. HCK: forests. HF: ordered forests.
// HP: planar trees (diamond product). HGL: rooted trees. HU: words in f_n.
// UL: words in e_{-n}.
enum class Space { NSym, QSym, Sym, HCK, HF, HP, HGL, HU, UL };
std::string to_string(Space s);

using ValueData = std::variant<LinComb<Word>, LinComb<Forest>, LinComb<OrderedForest>, LinComb<PlanarTree>,
                               LinComb<RootedTree>>;

struct Value {
  Space space;
  ValueData data;

  friend bool operator==(const Value&, const Value&) = default;
};
std::string to_string(const Value& v);

// A linear map between two spaces; max_weight feeds the truncated maps.
struct Arrow {
  std::string name;
  Space from;
  Space to;
  std::function<Value(const Value&, long max_weight)> apply;
};

const std::map<std::string, Arrow>& arrow_registry();

// Two paths of arrow names from the same source, applied left to right.
struct Diagram {
  std::string name;
  Space source;
  std::vector<Value> probes;
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool report_only = false;
  // Optional names for the probes, e.g. "m(2,1)"; defaults to the value.
  std::vector<std::string> probe_labels = {};
};

struct ProbeResult {
  std::string diagram;
  std::string probe;
  bool agree = false;
  bool report_only = false;
  std::string left;
  std::string right;
};

// Throws DomainError if the paths do not compose or end in different spaces.
std::vector<ProbeResult> run_diagram(const Diagram& d, long max_weight);
std::vector<Diagram> standard_diagrams(long max_weight);
// F(u sh v) vs F(u) o F(v) and F*(uv) vs F*(u) F*(v).
std::vector<ProbeResult> f_structure_report(long max_weight);

// True iff every strict row agrees.
bool all_strict_pass(const std::vector<ProbeResult>& rows);
// One row per probe: diagram, probe, status. Rows that disagree also list
// both values.
std::string format_report(const std::vector<ProbeResult>& rows);

}  // namespace hopf

#endif
