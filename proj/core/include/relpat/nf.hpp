#pragma once

#include <map>
#include <vector>

#include "relpat/core.hpp"

namespace relpat {

/// Reorders every variable block by canonical group order, keeping the
/// original order inside a group. Throws WrongKind unless kind=len.
RelationalPattern sort_blocks(const RelationalPattern& rp);

enum class EliminationReading {
  /// Coefficients >= 0 over the other groups (some positive): any nonempty
  /// subset of the others may be used.
  subset,
  /// Coefficients >= 1 over every other remaining group.
  all_others,
};

struct RemovedGroup {
  VariableId representative;
  std::vector<VariableId> members;
  std::vector<std::size_t> decomposition;  // n+1 entries
  /// Representative of each group used, with its coefficient (zeros omitted).
  std::map<VariableId, std::size_t> coefficients;
};

struct NormalFormReport {
  RelationalPattern result;
  std::vector<RemovedGroup> removed;  // in removal order
};

/// Equal-length normal form: sort_blocks, then drop groups whose
/// decomposition is a combination of the remaining ones, testing later
/// groups first and repeating until nothing changes.
NormalFormReport normal_form_with_report(
    const RelationalPattern& rp,
    EliminationReading reading = EliminationReading::subset);

RelationalPattern normal_form(
    const RelationalPattern& rp,
    EliminationReading reading = EliminationReading::subset);

}  // namespace relpat
