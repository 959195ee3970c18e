#include "relpat/member.hpp"

#include <algorithm>
#include <set>

namespace relpat {

// ---------------------------------------------------------------------------
// Integer combinations

namespace {

class CombinationSearch {
 public:
  CombinationSearch(const std::vector<std::vector<std::size_t>>& generators,
                    std::vector<std::size_t> bounds, std::size_t lower)
      : gens_(generators), bounds_(std::move(bounds)), lower_(lower) {
    const std::size_t dim = gens_.empty() ? 0 : gens_.front().size();
    // support_[i][j]: some generator at index >= i is positive in coordinate j
    support_.assign(gens_.size() + 1, std::vector<bool>(dim, false));
    for (std::size_t i = gens_.size(); i-- > 0;) {
      for (std::size_t j = 0; j < dim; ++j) {
        support_[i][j] = support_[i + 1][j] || gens_[i][j] > 0;
      }
    }
  }

  bool run(std::size_t i, std::vector<std::size_t>& remaining,
           CoefficientVector& coeffs) {
    if (i == gens_.size()) {
      return std::all_of(remaining.begin(), remaining.end(),
                         [](std::size_t r) { return r == 0; });
    }
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (remaining[j] > 0 && !support_[i][j]) return false;
    }
    if (failed_.count({i, remaining})) return false;

    const auto& g = gens_[i];
    std::size_t applied = 0;
    auto subtract = [&](std::size_t times) {
      for (std::size_t j = 0; j < g.size(); ++j) remaining[j] -= times * g[j];
      applied += times;
    };
    auto fits = [&](std::size_t times) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (times * g[j] > remaining[j]) return false;
      }
      return true;
    };

    bool found = false;
    if (lower_ <= bounds_[i] && fits(lower_)) {
      subtract(lower_);
      for (std::size_t c = lower_; c <= bounds_[i]; ++c) {
        if (c > lower_) {
          if (!fits(1)) break;
          subtract(1);
        }
        coeffs[i] = c;
        if (run(i + 1, remaining, coeffs)) {
          found = true;
          break;
        }
      }
    }
    for (std::size_t j = 0; j < g.size(); ++j) remaining[j] += applied * g[j];
    if (!found) failed_.insert({i, remaining});
    return found;
  }

 private:
  const std::vector<std::vector<std::size_t>>& gens_;
  std::vector<std::size_t> bounds_;
  std::size_t lower_;
  std::vector<std::vector<bool>> support_;
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> failed_;
};

}  // namespace

std::optional<CoefficientVector> nonneg_combination(
    const std::vector<std::size_t>& target,
    const std::vector<std::vector<std::size_t>>& generators,
    CombinationMode mode) {
  std::vector<std::size_t> bounds;
  bounds.reserve(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& gen = generators[g];
    if (gen.size() != target.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + std::to_string(g) + " has dimension " +
                      std::to_string(gen.size()) + ", target has " +
                      std::to_string(target.size()));
    }
    std::optional<std::size_t> bound;
    for (std::size_t j = 0; j < gen.size(); ++j) {
      if (gen[j] == 0) continue;
      const std::size_t q = target[j] / gen[j];
      bound = bound ? std::min(*bound, q) : q;
    }
    if (!bound) {
      throw Error(ErrorKind::ZeroGenerator,
                  "generator " + std::to_string(g) + " is all zeros");
    }
    bounds.push_back(*bound);
  }
  const std::size_t lower = mode == CombinationMode::strictly_positive ? 1 : 0;
  CombinationSearch search(generators, bounds, lower);
  std::vector<std::size_t> remaining = target;
  CoefficientVector coeffs(generators.size(), 0);
  if (!search.run(0, remaining, coeffs)) return std::nullopt;
  return coeffs;
}

// ---------------------------------------------------------------------------
// Equal-length membership

namespace {

class LenMatcher {
 public:
  LenMatcher(const Word& w, const RelationalPattern& rp, bool erasing)
      : w_(w), rp_(rp), erasing_(erasing), blocks_(rp.blocks()) {
    for (const auto& dv : decomposition_vectors(rp)) generators_.push_back(dv.counts);
    suffix_terminals_.assign(blocks_.n() + 1, 0);
    for (std::size_t j = blocks_.n(); j-- > 0;) {
      suffix_terminals_[j] =
          suffix_terminals_[j + 1] + blocks_.terminal_blocks[j].size();
    }
  }

  std::optional<MembershipWitness> run() {
    positions_.clear();
    if (place(0, 0)) return witness_;
    return std::nullopt;
  }

 private:
  std::size_t min_gap(std::size_t j) const {
    return erasing_ ? 0 : blocks_.variable_blocks[j].size();
  }

  bool place(std::size_t j, std::size_t cursor) {
    const std::size_t n = blocks_.n();
    if (j == n) return finish(cursor);
    const Word& omega = blocks_.terminal_blocks[j];
    const std::size_t earliest = cursor + min_gap(j);
    if (earliest + suffix_terminals_[j] > w_.size()) return false;
    const std::size_t latest = w_.size() - suffix_terminals_[j];
    const bool pinned = j == 0 && blocks_.leading_empty();
    for (std::size_t pos = w_.find(omega, earliest);
         pos != Word::npos && pos <= latest; pos = w_.find(omega, pos + 1)) {
      if (pinned && pos != 0) break;
      positions_.push_back(pos);
      if (place(j + 1, pos + omega.size())) return true;
      positions_.pop_back();
    }
    return false;
  }

  bool finish(std::size_t cursor) {
    const std::size_t n = blocks_.n();
    const std::size_t tail = w_.size() - cursor;
    if (blocks_.trailing_empty() && tail != 0) return false;
    if (tail < min_gap(n)) return false;

    std::vector<std::size_t> gaps(n + 1);
    std::size_t prev_end = 0;
    for (std::size_t j = 0; j < n; ++j) {
      gaps[j] = positions_[j] - prev_end;
      prev_end = positions_[j] + blocks_.terminal_blocks[j].size();
    }
    gaps[n] = tail;

    auto coeffs = nonneg_combination(
        gaps, generators_,
        erasing_ ? CombinationMode::nonnegative
                 : CombinationMode::strictly_positive);
    if (!coeffs) return false;

    MembershipWitness witness;
    witness.anchoring = Anchoring{positions_, gaps};
    witness.coefficients = *coeffs;
    const auto& groups = rp_.groups();
    std::size_t region_start = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t at = region_start;
      for (const auto& v : blocks_.variable_blocks[j]) {
        const std::size_t len = (*coeffs)[groups.group(v)];
        witness.substitution.set(v, w_.substr(at, len));
        at += len;
      }
      if (j < n) region_start = positions_[j] + blocks_.terminal_blocks[j].size();
    }
    witness_ = std::move(witness);
    return true;
  }

  const Word& w_;
  const RelationalPattern& rp_;
  bool erasing_;
  const BlockDecomposition& blocks_;
  std::vector<std::vector<std::size_t>> generators_;
  std::vector<std::size_t> suffix_terminals_;
  std::vector<std::size_t> positions_;
  MembershipWitness witness_;
};

void check_witness(const Word& w, const RelationalPattern& rp,
                   const MembershipWitness& witness, bool erasing) {
  const bool reproduces = apply(rp.pattern(), witness.substitution) == w;
  const bool valid = validate(rp, witness.substitution).valid;
  bool lengths_ok = true;
  if (!erasing) {
    for (const auto& [v, img] : witness.substitution.assignment()) {
      lengths_ok = lengths_ok && !img.empty();
    }
  }
  if (!reproduces || !valid || !lengths_ok) {
    throw Error(ErrorKind::PreconditionViolated,
                "internal error: membership witness does not reproduce '" + w +
                    "'");
  }
}

}  // namespace

std::optional<MembershipWitness> member_len(const Word& w,
                                            const RelationalPattern& rp,
                                            bool erasing) {
  if (rp.kind() != RelationKind::len) {
    throw Error(ErrorKind::WrongKind, "member_len needs kind=len");
  }
  if (!rp.alphabet().admits(w)) return std::nullopt;
  LenMatcher matcher(w, rp, erasing);
  auto witness = matcher.run();
  if (witness) check_witness(w, rp, *witness, erasing);
  return witness;
}

// ---------------------------------------------------------------------------
// Equality / reversal membership

namespace {

class Unifier {
 public:
  Unifier(const Word& w, const RelationalPattern& rp, bool erasing)
      : w_(w), erasing_(erasing) {
    const auto& groups = rp.groups();
    for (const auto& item : rp.pattern().items()) {
      Step step;
      if (item.is_terminal()) {
        step.terminal = item.symbol();
      } else {
        step.group = groups.group(item.name());
        step.reversed =
            groups.orientation_of(item.name()) == Orientation::reversed;
      }
      steps_.push_back(step);
    }
    words_.assign(groups.size(), std::nullopt);
  }

  std::optional<std::vector<Word>> run() {
    if (dfs(0, 0)) {
      std::vector<Word> out;
      for (auto& wd : words_) out.push_back(wd.value_or(Word{}));
      return out;
    }
    return std::nullopt;
  }

 private:
  struct Step {
    std::optional<char> terminal;
    GroupId group = 0;
    bool reversed = false;
  };

  std::size_t min_remaining(std::size_t i) const {
    std::size_t need = 0;
    for (; i < steps_.size(); ++i) {
      const auto& s = steps_[i];
      if (s.terminal) {
        ++need;
      } else if (words_[s.group]) {
        need += words_[s.group]->size();
      } else if (!erasing_) {
        ++need;
      }
    }
    return need;
  }

  bool dfs(std::size_t i, std::size_t pos) {
    if (pos + min_remaining(i) > w_.size()) return false;
    if (i == steps_.size()) return pos == w_.size();
    const auto& s = steps_[i];
    if (s.terminal) {
      return w_[pos] == *s.terminal && dfs(i + 1, pos + 1);
    }
    if (words_[s.group]) {
      const Word& base = *words_[s.group];
      const Word piece = s.reversed ? reversed(base) : base;
      return w_.compare(pos, piece.size(), piece) == 0 &&
             dfs(i + 1, pos + piece.size());
    }
    const std::size_t lo = erasing_ ? 0 : 1;
    for (std::size_t len = lo; pos + len <= w_.size(); ++len) {
      Word piece = w_.substr(pos, len);
      words_[s.group] = s.reversed ? reversed(piece) : piece;
      if (dfs(i + 1, pos + len)) return true;
    }
    words_[s.group].reset();
    return false;
  }

  const Word& w_;
  bool erasing_;
  std::vector<Step> steps_;
  std::vector<std::optional<Word>> words_;
};

}  // namespace

std::optional<MembershipWitness> member_unify(const Word& w,
                                              const RelationalPattern& rp,
                                              bool erasing,
                                              UnifyGuards guards) {
  if (rp.kind() == RelationKind::len) {
    throw Error(ErrorKind::WrongKind, "member_unify needs kind=eq or kind=rev");
  }
  if (rp.groups().size() > guards.max_groups) {
    throw Error(ErrorKind::InstanceTooLarge,
                std::to_string(rp.groups().size()) + " groups exceed the guard of " +
                    std::to_string(guards.max_groups));
  }
  if (w.size() > guards.max_word) {
    throw Error(ErrorKind::InstanceTooLarge,
                "word length " + std::to_string(w.size()) +
                    " exceeds the guard of " + std::to_string(guards.max_word));
  }
  if (!rp.alphabet().admits(w)) return std::nullopt;
  Unifier unifier(w, rp, erasing);
  auto words = unifier.run();
  if (!words) return std::nullopt;
  MembershipWitness witness;
  witness.substitution = substitution_from_group_words(rp, *words);
  check_witness(w, rp, witness, erasing);
  return witness;
}

std::optional<MembershipWitness> member(const Word& w,
                                        const RelationalPattern& rp,
                                        bool erasing, UnifyGuards guards) {
  if (rp.kind() == RelationKind::len) return member_len(w, rp, erasing);
  return member_unify(w, rp, erasing, guards);
}

// ---------------------------------------------------------------------------
// Slices

std::vector<Word> words_upto(const Alphabet& sigma, std::size_t L) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= L; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : sigma.symbols()) out.push_back(out[i] + c);
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

void check_budget(const Alphabet& sigma, std::size_t L, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < L; ++i) {
    total *= sigma.size();
    if (total > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "|Sigma|^" + std::to_string(L) + " exceeds the budget of " +
                      std::to_string(budget));
    }
  }
}

SliceVerdict compare_sets(const RelationalPattern& a, const RelationalPattern& b,
                          const std::vector<Word>& candidates,
                          const SliceOptions& options) {
  SliceVerdict verdict;
  for (const auto& w : candidates) {
    const bool in_a = is_member(w, a, options.erasing, options.guards);
    const bool in_b = is_member(w, b, options.erasing, options.guards);
    if (in_a && !in_b && !verdict.in_a_not_b) verdict.in_a_not_b = w;
    if (in_b && !in_a && !verdict.in_b_not_a) verdict.in_b_not_a = w;
    if (verdict.in_a_not_b && verdict.in_b_not_a) break;
  }
  if (verdict.in_a_not_b && verdict.in_b_not_a) {
    verdict.relation = SliceRelation::incomparable;
  } else if (verdict.in_a_not_b) {
    verdict.relation = SliceRelation::superset;
  } else if (verdict.in_b_not_a) {
    verdict.relation = SliceRelation::subset;
  } else {
    verdict.relation = SliceRelation::equal;
  }
  return verdict;
}

}  // namespace

std::vector<Word> lang_upto(const RelationalPattern& rp, std::size_t L,
                            SliceOptions options) {
  check_budget(rp.alphabet(), L, options.budget);
  std::vector<Word> out;
  for (auto& w : words_upto(rp.alphabet(), L)) {
    if (is_member(w, rp, options.erasing, options.guards)) out.push_back(std::move(w));
  }
  return out;
}

std::string_view to_string(SliceRelation r) {
  switch (r) {
    case SliceRelation::equal: return "equal";
    case SliceRelation::subset: return "subset";
    case SliceRelation::superset: return "superset";
    case SliceRelation::incomparable: return "incomparable";
  }
  return "?";
}

SliceVerdict slice_compare(const RelationalPattern& a,
                           const RelationalPattern& b, std::size_t L,
                           SliceOptions options) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::PreconditionViolated,
                "slice comparison needs a shared alphabet");
  }
  check_budget(a.alphabet(), L, options.budget);
  auto verdict = compare_sets(a, b, words_upto(a.alphabet(), L), options);
  verdict.bound = L;
  return verdict;
}

SliceVerdict compare_on_candidates(const RelationalPattern& a,
                                   const RelationalPattern& b,
                                   const std::vector<Word>& candidates,
                                   SliceOptions options) {
  auto verdict = compare_sets(a, b, candidates, options);
  std::size_t longest = 0;
  for (const auto& w : candidates) longest = std::max(longest, w.size());
  verdict.bound = longest;
  verdict.candidates_only = true;
  return verdict;
}

}  // namespace relpat
