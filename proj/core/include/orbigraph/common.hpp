#ifndef ORBIGRAPH_COMMON_HPP
#define ORBIGRAPH_COMMON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbigraph {

// Dense 0-based index into a unit/arrow/vertex/edge/point table.
using Id = std::int32_t;

// Sentinel for partial maps stored as total tables.
inline constexpr Id undef = -1;

// Structurally broken input: dangling ids, ragged tables, unparsable text.
class malformed_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input parsed fine but a documented precondition does not hold
// (non-free action, non-transitive actor, unsupported fiber shape, ...).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed, or a numeric certification failed.
class internal_consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One violated axiom with a concrete witness (ids into the offending tables).
struct violation {
  std::string rule;
  std::vector<Id> witness;
  std::string detail;
};

struct validation_report {
  std::vector<violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::vector<Id> witness, std::string detail) {
    violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
  }
  // Throws precondition_error listing the first few violations.
  void require_ok(const std::string& what) const {
    if (ok()) return;
    std::string msg = what + ": " + std::to_string(violations.size()) + " violation(s);";
    for (std::size_t i = 0; i < violations.size() && i < 3; ++i)
      msg += " [" + violations[i].rule + "] " + violations[i].detail + ";";
    throw precondition_error(msg);
  }
};

}  // namespace orbigraph

#endif
