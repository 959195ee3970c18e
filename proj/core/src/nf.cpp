#include "relpat/nf.hpp"

#include <algorithm>
#include <unordered_set>

#include "relpat/member.hpp"

namespace relpat {

namespace {

void require_len(const RelationalPattern& rp) {
  if (rp.kind() != RelationKind::len) {
    throw Error(ErrorKind::WrongKind, "normal forms are defined for kind=len");
  }
}

RelationalPattern without_group(const RelationalPattern& rp, GroupId g) {
  const auto& members = rp.groups().groups[g];
  std::unordered_set<VariableId> drop(members.begin(), members.end());
  std::vector<Item> items;
  for (const auto& item : rp.pattern().items()) {
    if (item.is_variable() && drop.count(item.name())) continue;
    items.push_back(item);
  }
  Relation relation{rp.kind(), {}};
  for (const auto& pair : rp.relation().pairs) {
    if (!drop.count(pair.first)) relation.pairs.push_back(pair);
  }
  return RelationalPattern(rp.alphabet(), Pattern(std::move(items)),
                           std::move(relation));
}

}  // namespace

RelationalPattern sort_blocks(const RelationalPattern& rp) {
  require_len(rp);
  auto blocks = rp.blocks();
  const auto& groups = rp.groups();
  for (auto& block : blocks.variable_blocks) {
    std::stable_sort(block.begin(), block.end(),
                     [&](const VariableId& a, const VariableId& b) {
                       return groups.group(a) < groups.group(b);
                     });
  }
  return RelationalPattern(rp.alphabet(), Pattern(blocks.interleave()),
                           rp.relation());
}

NormalFormReport normal_form_with_report(const RelationalPattern& rp,
                                         EliminationReading reading) {
  require_len(rp);
  NormalFormReport report{sort_blocks(rp), {}};
  const auto mode = reading == EliminationReading::subset
                        ? CombinationMode::nonnegative
                        : CombinationMode::strictly_positive;

  bool changed = true;
  while (changed) {
    changed = false;
    const auto& current = report.result;
    const auto dvs = decomposition_vectors(current);
    for (GroupId g = dvs.size(); g-- > 0;) {
      std::vector<std::vector<std::size_t>> others;
      std::vector<GroupId> other_ids;
      for (GroupId h = 0; h < dvs.size(); ++h) {
        if (h == g) continue;
        others.push_back(dvs[h].counts);
        other_ids.push_back(h);
      }
      if (others.empty()) continue;
      auto coeffs = nonneg_combination(dvs[g].counts, others, mode);
      if (!coeffs) continue;

      RemovedGroup removed;
      removed.representative = current.groups().representatives[g];
      removed.members = current.groups().groups[g];
      removed.decomposition = dvs[g].counts;
      for (std::size_t k = 0; k < other_ids.size(); ++k) {
        if ((*coeffs)[k] == 0) continue;
        removed.coefficients[current.groups().representatives[other_ids[k]]] =
            (*coeffs)[k];
      }
      RelationalPattern next = without_group(current, g);
      report.removed.push_back(std::move(removed));
      report.result = std::move(next);
      changed = true;
      break;
    }
  }
  return report;
}

RelationalPattern normal_form(const RelationalPattern& rp,
                              EliminationReading reading) {
  return normal_form_with_report(rp, reading).result;
}

}  // namespace relpat
