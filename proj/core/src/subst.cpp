#include "relpat/subst.hpp"

#include <random>

namespace relpat {

const Word& Substitution::at(const VariableId& v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) {
    throw Error(ErrorKind::MissingVariable,
                "substitution has no image for '" + v + "'");
  }
  return it->second;
}

Validation validate(const RelationalPattern& rp, const Substitution& s) {
  for (const auto& v : rp.pattern().variables()) (void)s.at(v);
  const auto& groups = rp.groups();
  for (const auto& [x, y] : rp.relation().pairs) {
    const Word& wx = s.at(x);
    const Word& wy = s.at(y);
    bool ok = true;
    switch (rp.kind()) {
      case RelationKind::eq:
        ok = wx == wy;
        break;
      case RelationKind::len:
        ok = wx.size() == wy.size();
        break;
      case RelationKind::rev:
        ok = groups.orientation_of(x) == groups.orientation_of(y)
                 ? wx == wy
                 : wx == reversed(wy);
        break;
    }
    if (!ok) {
      return {false, "(" + x + "," + y + "): '" + wx + "' vs '" + wy + "'"};
    }
  }
  return {};
}

Word apply(const Pattern& p, const Substitution& s) {
  Word out;
  for (const auto& item : p.items()) {
    if (item.is_terminal()) {
      out.push_back(item.symbol());
    } else {
      out += s.at(item.name());
    }
  }
  return out;
}

Substitution substitution_from_group_words(const RelationalPattern& rp,
                                           const std::vector<Word>& per_group) {
  const auto& groups = rp.groups();
  if (per_group.size() != groups.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected one word per group");
  }
  Substitution s;
  for (GroupId g = 0; g < groups.size(); ++g) {
    for (const auto& v : groups.groups[g]) {
      s.set(v, groups.orientation_of(v) == Orientation::reversed
                   ? reversed(per_group[g])
                   : per_group[g]);
    }
  }
  return s;
}

namespace {

// A slot is a run of freely chosen letters: one per member for len, one per
// group for eq and rev (members are derived from the representative).
struct Slot {
  GroupId group;
  std::vector<VariableId> members;
  std::size_t length;
};

std::vector<Slot> build_slots(const RelationalPattern& rp,
                              const std::vector<std::size_t>& group_lengths) {
  const auto& groups = rp.groups();
  std::vector<Slot> slots;
  for (GroupId g = 0; g < groups.size(); ++g) {
    if (rp.kind() == RelationKind::len) {
      for (const auto& v : groups.groups[g]) {
        slots.push_back({g, {v}, group_lengths[g]});
      }
    } else {
      slots.push_back({g, groups.groups[g], group_lengths[g]});
    }
  }
  return slots;
}

Substitution fill(const RelationalPattern& rp, const std::vector<Slot>& slots,
                  const std::vector<std::size_t>& letters) {
  const auto& sigma = rp.alphabet().symbols();
  const auto& groups = rp.groups();
  Substitution s;
  std::size_t pos = 0;
  for (const auto& slot : slots) {
    Word w;
    for (std::size_t i = 0; i < slot.length; ++i) w.push_back(sigma[letters[pos++]]);
    for (const auto& v : slot.members) {
      s.set(v, groups.orientation_of(v) == Orientation::reversed ? reversed(w)
                                                                  : w);
    }
  }
  return s;
}

std::size_t total_letters(const std::vector<Slot>& slots) {
  std::size_t n = 0;
  for (const auto& s : slots) n += s.length;
  return n;
}

// |sigma|^exponent, saturating at limit + 1.
std::size_t bounded_power(std::size_t base, std::size_t exponent,
                          std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out *= base;
    if (out > limit) return limit + 1;
  }
  return out;
}

// Odometer over letter indices; the last position varies fastest so the
// resulting words come out in alphabet order.
bool advance(std::vector<std::size_t>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<std::size_t> lengths_for(const RelationalPattern& rp, GroupId group,
                                     std::size_t chosen, bool erasing) {
  std::vector<std::size_t> lengths(rp.groups().size(), erasing ? 0 : 1);
  lengths[group] = chosen;
  return lengths;
}

}  // namespace

std::vector<GeneratedWord> enumerate_single_group_lz(
    const RelationalPattern& rp, GroupId group, LengthBound lb,
    ContentMode content, bool include_zero) {
  if (group >= rp.groups().size()) {
    throw Error(ErrorKind::UnknownGroup,
                "group " + std::to_string(group) + " does not exist");
  }
  const std::size_t radix = rp.alphabet().size();

  std::vector<std::size_t> chosen_lengths;
  if (lb.erasing) {
    for (std::size_t z = include_zero ? 0 : 1; z <= lb.z; ++z) {
      chosen_lengths.push_back(z);
    }
  } else {
    chosen_lengths.push_back(lb.z);
  }

  std::vector<GeneratedWord> out;
  if (content.kind == ContentMode::Kind::all) {
    std::size_t total = 0;
    for (auto z : chosen_lengths) {
      const auto slots = build_slots(rp, lengths_for(rp, group, z, lb.erasing));
      total += bounded_power(radix, total_letters(slots), content.cap);
      if (total > content.cap) {
        throw Error(ErrorKind::GroupTooLarge,
                    "enumeration would exceed the cap of " +
                        std::to_string(content.cap) + " items");
      }
    }
    out.reserve(total);
    for (auto z : chosen_lengths) {
      const auto slots = build_slots(rp, lengths_for(rp, group, z, lb.erasing));
      std::vector<std::size_t> digits(total_letters(slots), 0);
      do {
        auto s = fill(rp, slots, digits);
        Word w = apply(rp.pattern(), s);
        out.push_back({std::move(s), std::move(w)});
      } while (advance(digits, radix));
    }
    return out;
  }

  if (chosen_lengths.empty()) return out;
  std::mt19937_64 rng(content.seed);
  std::uniform_int_distribution<std::size_t> pick_length(
      0, chosen_lengths.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_letter(0, radix - 1);
  out.reserve(content.samples);
  for (std::size_t k = 0; k < content.samples; ++k) {
    const auto z = chosen_lengths[pick_length(rng)];
    const auto slots = build_slots(rp, lengths_for(rp, group, z, lb.erasing));
    std::vector<std::size_t> digits(total_letters(slots));
    for (auto& d : digits) d = pick_letter(rng);
    auto s = fill(rp, slots, digits);
    Word w = apply(rp.pattern(), s);
    out.push_back({std::move(s), std::move(w)});
  }
  return out;
}

std::vector<GeneratedWord> sample_lz_words(const RelationalPattern& rp,
                                           LengthBound lb, std::size_t count,
                                           std::uint64_t seed) {
  const std::size_t lo = lb.erasing ? 0 : 1;
  if (lo > lb.z) {
    throw Error(ErrorKind::PreconditionViolated,
                "non-erasing substitutions need z >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_length(lo, lb.z);
  std::uniform_int_distribution<std::size_t> pick_letter(
      0, rp.alphabet().size() - 1);
  std::vector<GeneratedWord> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> lengths(rp.groups().size());
    for (auto& l : lengths) l = pick_length(rng);
    const auto slots = build_slots(rp, lengths);
    std::vector<std::size_t> digits(total_letters(slots));
    for (auto& d : digits) d = pick_letter(rng);
    auto s = fill(rp, slots, digits);
    Word w = apply(rp.pattern(), s);
    out.push_back({std::move(s), std::move(w)});
  }
  return out;
}

}  // namespace relpat
