#include "relpat/charset.hpp"

#include <algorithm>

namespace relpat {

// ---------------------------------------------------------------------------
// LabeledSample

void LabeledSample::add(const Word& w, int label) {
  if (label != 0 && label != 1) {
    throw Error(ErrorKind::PreconditionViolated, "labels are 0 or 1");
  }
  auto [it, inserted] = entries_.emplace(w, label);
  if (!inserted && it->second != label) {
    throw Error(ErrorKind::PreconditionViolated,
                "word '" + w + "' carries both labels");
  }
}

void LabeledSample::add_all(const std::vector<Word>& words, int label) {
  for (const auto& w : words) add(w, label);
}

std::vector<Word> LabeledSample::words() const {
  std::vector<Word> out;
  out.reserve(entries_.size());
  for (const auto& [w, label] : entries_) out.push_back(w);
  return out;
}

bool LabeledSample::positive_only() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second == 1; });
}

bool consistent_with(const LabeledSample& sample, const RelationalPattern& rp,
                     bool erasing, UnifyGuards guards) {
  for (const auto& [w, label] : sample.entries()) {
    if (is_member(w, rp, erasing, guards) != (label == 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void require_len(const RelationalPattern& rp, const char* what) {
  if (rp.kind() != RelationKind::len) {
    throw Error(ErrorKind::WrongKind, std::string(what) + " needs kind=len");
  }
}

bool is_unary(const Word& w) {
  return !w.empty() && w.find_first_not_of(w.front()) == Word::npos;
}

char other_letter(const Alphabet& sigma, char c) {
  for (char s : sigma.symbols()) {
    if (s != c) return s;
  }
  return c;
}

// Assigns block_words[j] to the members of `group` in variable block j, in
// pattern order, and erases everything else.
Substitution spread_over_group(const RelationalPattern& rp, GroupId group,
                               const std::vector<Word>& block_words) {
  const auto& blocks = rp.blocks();
  const auto& groups = rp.groups();
  Substitution s;
  for (std::size_t j = 0; j < blocks.variable_blocks.size(); ++j) {
    std::size_t k = 0;
    for (const auto& v : blocks.variable_blocks[j]) {
      if (groups.group(v) == group) {
        s.set(v, Word(1, block_words[j][k++]));
      } else {
        s.set(v, Word{});
      }
    }
  }
  return s;
}

std::vector<std::size_t> members_per_block(const RelationalPattern& rp,
                                           GroupId group) {
  return decomposition_vector(rp, group).counts;
}

}  // namespace

LabeledSample gen_seps(const RelationalPattern& rp, std::size_t ell,
                       ContentMode content, bool include_skeleton) {
  require_len(rp, "S_eps,l");
  LabeledSample sample;
  if (include_skeleton) sample.add(rp.pattern().terminal_skeleton());
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    for (const auto& gw : enumerate_single_group_lz(rp, g, {ell, true}, content,
                                                    include_skeleton)) {
      sample.add(gw.word);
    }
  }
  return sample;
}

LabeledSample gen_s2_nonerasing(const RelationalPattern& rp,
                                ContentMode content) {
  require_len(rp, "S_2");
  LabeledSample sample;
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    for (const auto& gw :
         enumerate_single_group_lz(rp, g, {2, false}, content)) {
      sample.add(gw.word);
    }
  }
  return sample;
}

LabeledSample witness_set_sigma3(const RelationalPattern& rp) {
  require_len(rp, "the |Sigma| >= 3 witness set");
  if (rp.alphabet().size() < 3) {
    throw Error(ErrorKind::AlphabetTooSmall,
                "the witness set needs at least three letters");
  }
  const auto& blocks = rp.blocks();
  const std::size_t n = blocks.n();
  // One letter per variable block, shared by all groups.
  std::vector<char> letter(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (char c : rp.alphabet().symbols()) {
      const bool clash_before = j > 0 && blocks.terminal_blocks[j - 1].back() == c;
      const bool clash_after = j < n && blocks.terminal_blocks[j].front() == c;
      if (!clash_before && !clash_after) {
        letter[j] = c;
        break;
      }
    }
  }
  LabeledSample sample;
  sample.add(rp.pattern().terminal_skeleton());
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    const auto counts = members_per_block(rp, g);
    std::vector<Word> block_words(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      block_words[j] = Word(counts[j], letter[j]);
    }
    sample.add(apply(rp.pattern(), spread_over_group(rp, g, block_words)));
  }
  return sample;
}

std::vector<Word> unambiguous_block_words(const RelationalPattern& rp,
                                          GroupId group) {
  const auto& sigma = rp.alphabet();
  const auto& blocks = rp.blocks();
  const std::size_t n = blocks.n();
  const auto counts = members_per_block(rp, group);
  const char first_letter = sigma.symbols().front();

  std::vector<Word> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = counts[j];
    if (n == 0) {
      out[j] = Word(k, first_letter);
    } else if (j == 0) {
      out[j] = Word(k, other_letter(sigma, blocks.terminal_blocks[0].front()));
    } else if (j == n) {
      out[j] = Word(k, other_letter(sigma, blocks.terminal_blocks[n - 1].back()));
    } else {
      const Word& before = blocks.terminal_blocks[j - 1];
      const Word& after = blocks.terminal_blocks[j];
      const bool unary_before = is_unary(before);
      const bool unary_after = is_unary(after);
      if (unary_before && unary_after && before.front() != after.front()) {
        const char s = after.front();    // sigma
        const char s2 = before.front();  // sigma'
        Word w;
        for (std::size_t t = 0; t < k / 2; ++t) {
          w.push_back(s);
          w.push_back(s2);
        }
        if (k % 2 == 1) w.push_back(s2);
        out[j] = std::move(w);
      } else if (unary_before) {
        out[j] = Word(k, other_letter(sigma, before.front()));
      } else if (unary_after) {
        out[j] = Word(k, other_letter(sigma, after.front()));
      } else {
        out[j] = Word(k, first_letter);
      }
    }
  }
  return out;
}

bool is_unambiguous(const BlockDecomposition& blocks,
                    const std::vector<Word>& block_words) {
  for (std::size_t j = 0; j < blocks.n(); ++j) {
    const Word& omega = blocks.terminal_blocks[j];
    const Word left = block_words[j] + omega.substr(0, omega.size() - 1);
    const Word right = omega.substr(1) + block_words[j + 1];
    if (left.find(omega) != Word::npos) return false;
    if (right.find(omega) != Word::npos) return false;
  }
  return true;
}

LabeledSample witness_set_binary_congruous(const RelationalPattern& rp) {
  require_len(rp, "the binary witness set");
  if (rp.alphabet().size() != 2) {
    throw Error(ErrorKind::NonBinaryAlphabet,
                "the binary witness set needs |Sigma| = 2");
  }
  const auto p23 = is_p23(rp);
  if (!p23.holds) {
    throw Error(ErrorKind::NotP23, "pattern is not in P(2,3): " +
                                       p23.violations.front());
  }
  LabeledSample sample;
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    const auto block_words = unambiguous_block_words(rp, g);
    if (!is_unambiguous(rp.blocks(), block_words)) {
      throw Error(ErrorKind::UnambiguityCheckFailed,
                  "block words for group [" + rp.groups().representatives[g] +
                      "] re-anchor a terminal block");
    }
    sample.add(apply(rp.pattern(), spread_over_group(rp, g, block_words)));
  }
  return sample;
}

// ---------------------------------------------------------------------------
// Deciders

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::equivalent: return "equivalent";
    case Decision::inclusion_holds: return "inclusion_holds";
    case Decision::refuted: return "refuted";
    case Decision::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view to_string(EquivMethod m) {
  switch (m) {
    case EquivMethod::auto_select: return "auto";
    case EquivMethod::sigma3: return "sigma3";
    case EquivMethod::binary_p23: return "binary-p23";
    case EquivMethod::slice: return "slice";
  }
  return "?";
}

std::optional<EquivMethod> equiv_method_from_string(std::string_view s) {
  if (s == "auto") return EquivMethod::auto_select;
  if (s == "sigma3") return EquivMethod::sigma3;
  if (s == "binary-p23" || s == "binary_p23") return EquivMethod::binary_p23;
  if (s == "slice") return EquivMethod::slice;
  return std::nullopt;
}

namespace {

std::optional<Word> first_rejected(const LabeledSample& sample,
                                   const RelationalPattern& rp, bool erasing,
                                   UnifyGuards guards) {
  for (const auto& w : sample.words()) {
    if (!is_member(w, rp, erasing, guards)) return w;
  }
  return std::nullopt;
}

void verify_separating(const Word& w, const RelationalPattern& in,
                       const RelationalPattern& out, bool erasing,
                       UnifyGuards guards) {
  if (!is_member(w, in, erasing, guards) || is_member(w, out, erasing, guards)) {
    throw Error(ErrorKind::PreconditionViolated,
                "internal error: witness '" + w + "' does not separate");
  }
}

Verdict inapplicable(std::string_view method, std::string clause) {
  Verdict v;
  v.decision = Decision::inapplicable;
  v.method = std::string(method);
  v.note = std::move(clause);
  return v;
}

// Tests sample_a against b and sample_b against a.
Verdict mutual_test(const RelationalPattern& a, const RelationalPattern& b,
                    const LabeledSample& sample_a,
                    const LabeledSample& sample_b, std::string method,
                    bool erasing, UnifyGuards guards) {
  Verdict v;
  v.method = std::move(method);
  v.sample_size = sample_a.size() + sample_b.size();
  if (auto w = first_rejected(sample_a, b, erasing, guards)) {
    verify_separating(*w, a, b, erasing, guards);
    v.decision = Decision::refuted;
    v.witness = *w;
    v.witness_in_first = true;
    return v;
  }
  if (auto w = first_rejected(sample_b, a, erasing, guards)) {
    verify_separating(*w, b, a, erasing, guards);
    v.decision = Decision::refuted;
    v.witness = *w;
    v.witness_in_first = false;
    return v;
  }
  v.decision = Decision::equivalent;
  return v;
}

// Full S_eps,1 when it fits the cap, otherwise the skeleton, the boundary
// letter words, and every group set to a constant letter.
LabeledSample sigma3_sample(const RelationalPattern& rp, std::size_t cap,
                            bool& reduced) {
  try {
    reduced = false;
    return gen_seps(rp, 1, ContentMode::all(cap));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
  }
  reduced = true;
  LabeledSample sample = witness_set_sigma3(rp);
  const std::size_t width = rp.blocks().variable_blocks.size();
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    const auto counts = members_per_block(rp, g);
    for (char c : rp.alphabet().symbols()) {
      std::vector<Word> block_words(width);
      for (std::size_t j = 0; j < width; ++j) block_words[j] = Word(counts[j], c);
      sample.add(apply(rp.pattern(), spread_over_group(rp, g, block_words)));
    }
  }
  return sample;
}

std::optional<std::string> binary_p23_violation(const RelationalPattern& rp,
                                                const char* which) {
  if (rp.alphabet().size() != 2) return std::string("alphabet is not binary");
  const auto p23 = is_p23(rp);
  if (!p23.holds) {
    return std::string(which) + " pattern is not in P(2,3): " +
           p23.violations.front();
  }
  const auto forbidden = forbidden_block_shapes(rp);
  if (!forbidden.empty()) {
    return std::string(which) + " pattern has a terminal block of shape " +
           forbidden.front().shape;
  }
  return std::nullopt;
}

Verdict run_slice(const RelationalPattern& a, const RelationalPattern& b,
                  const EquivOptions& options) {
  SliceOptions so;
  so.erasing = options.erasing;
  so.guards = options.guards;
  const auto sv = slice_compare(a, b, options.slice_bound, so);
  Verdict v;
  v.method = "slice";
  v.bounded = true;
  for (std::size_t k = 0, n = 1; k <= options.slice_bound; ++k, n *= a.alphabet().size()) {
    v.sample_size += n;
  }
  v.note = "slice-bounded, not a proof (L=" +
           std::to_string(options.slice_bound) + ")";
  if (sv.relation == SliceRelation::equal) {
    v.decision = Decision::equivalent;
    return v;
  }
  v.decision = Decision::refuted;
  if (sv.in_a_not_b) {
    v.witness = *sv.in_a_not_b;
    v.witness_in_first = true;
    verify_separating(*v.witness, a, b, options.erasing, options.guards);
  } else {
    v.witness = *sv.in_b_not_a;
    v.witness_in_first = false;
    verify_separating(*v.witness, b, a, options.erasing, options.guards);
  }
  return v;
}

}  // namespace

Verdict decide_equiv(const RelationalPattern& a, const RelationalPattern& b,
                     EquivOptions options) {
  if (!(a.alphabet() == b.alphabet())) {
    return inapplicable(to_string(options.method),
                        "patterns are over different alphabets");
  }
  const std::size_t sigma = a.alphabet().size();
  const bool both_len =
      a.kind() == RelationKind::len && b.kind() == RelationKind::len;

  EquivMethod method = options.method;
  if (method == EquivMethod::auto_select) {
    if (!both_len) {
      method = EquivMethod::slice;
    } else if (!options.erasing) {
      method = sigma >= 3 ? EquivMethod::sigma3 : EquivMethod::slice;
    } else if (sigma >= 3) {
      method = EquivMethod::sigma3;
    } else if (sigma == 2 && !binary_p23_violation(a, "first") &&
               !binary_p23_violation(b, "second")) {
      method = EquivMethod::binary_p23;
    } else {
      method = EquivMethod::slice;
    }
  }

  if (method == EquivMethod::slice) return run_slice(a, b, options);
  if (!both_len) {
    return inapplicable(to_string(method), "both patterns need kind=len");
  }

  if (method == EquivMethod::sigma3) {
    if (sigma < 3) {
      return inapplicable(to_string(method), "alphabet has fewer than 3 letters");
    }
    if (!options.erasing) {
      auto v = mutual_test(a, b, gen_s2_nonerasing(a, ContentMode::all(options.cap)),
                           gen_s2_nonerasing(b, ContentMode::all(options.cap)),
                           "s2-sample", false, options.guards);
      return v;
    }
    bool reduced_a = false;
    bool reduced_b = false;
    const auto sa = sigma3_sample(a, options.cap, reduced_a);
    const auto sb = sigma3_sample(b, options.cap, reduced_b);
    auto v = mutual_test(a, b, sa, sb, "sigma3-witness", true, options.guards);
    if (reduced_a || reduced_b) {
      v.note = "S_eps,1 exceeds the cap; tested the boundary-letter subset";
    }
    return v;
  }

  // binary_p23
  if (!options.erasing) {
    return inapplicable(to_string(method), "binary-p23 is an erasing method");
  }
  if (auto why = binary_p23_violation(a, "first")) {
    return inapplicable(to_string(method), *why);
  }
  if (auto why = binary_p23_violation(b, "second")) {
    return inapplicable(to_string(method), *why);
  }
  if (are_congruous(a.pattern(), b.pattern())) {
    return mutual_test(a, b, witness_set_binary_congruous(a),
                       witness_set_binary_congruous(b), "congruous-witness",
                       true, options.guards);
  }
  return mutual_test(a, b, gen_seps(a, 2, ContentMode::all(options.cap)),
                     gen_seps(b, 2, ContentMode::all(options.cap)),
                     "seps2-sample", true, options.guards);
}

Verdict decide_inclusion_congruous(const RelationalPattern& a,
                                   const RelationalPattern& b,
                                   std::size_t cap) {
  if (a.kind() != RelationKind::len || b.kind() != RelationKind::len) {
    throw Error(ErrorKind::PreconditionViolated, "both patterns need kind=len");
  }
  if (!(a.alphabet() == b.alphabet()) || a.alphabet().size() != 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "both patterns need the same binary alphabet");
  }
  if (!are_congruous(a.pattern(), b.pattern())) {
    throw Error(ErrorKind::PreconditionViolated, "patterns are not congruous");
  }
  const auto p23 = is_p23(a);
  if (!p23.holds) {
    throw Error(ErrorKind::PreconditionViolated,
                "first pattern is not in P(2,3): " + p23.violations.front());
  }

  LabeledSample sample = witness_set_binary_congruous(a);
  try {
    for (const auto& w : gen_seps(a, 1, ContentMode::all(cap)).words()) {
      sample.add(w);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
  }

  Verdict v;
  v.method = "congruous-witness";
  v.sample_size = sample.size();
  if (auto w = first_rejected(sample, b, true, {})) {
    verify_separating(*w, a, b, true, {});
    v.decision = Decision::refuted;
    v.witness = *w;
    v.witness_in_first = true;
    return v;
  }
  v.decision = Decision::inclusion_holds;
  return v;
}

IncongruityReport classify_incongruous_pair(const RelationalPattern& a,
                                            const RelationalPattern& b) {
  IncongruityReport r;
  r.congruous = are_congruous(a.pattern(), b.pattern());
  r.forbidden_first = forbidden_block_shapes(a, true);
  r.forbidden_second = forbidden_block_shapes(b, true);
  if (a.kind() == RelationKind::len) r.first_in_p23 = is_p23(a).holds;
  if (b.kind() == RelationKind::len) r.second_in_p23 = is_p23(b).holds;
  r.conjugates = find_telltale_conjugates(a.pattern(), b.pattern());
  r.seps2_premises = !r.congruous && r.forbidden_first.empty();
  if (r.congruous && r.first_in_p23 && r.second_in_p23) {
    r.recommended_method = "congruous-witness";
  } else if (r.seps2_premises && r.first_in_p23 && r.second_in_p23 &&
             r.forbidden_second.empty()) {
    r.recommended_method = "seps2-sample";
  } else {
    r.recommended_method = "slice";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Characteristic sets and telltales

InclusionOracle slice_inclusion_oracle(std::size_t L, bool erasing) {
  return [L, erasing](const RelationalPattern& x, const RelationalPattern& y) {
    SliceOptions so;
    so.erasing = erasing;
    const auto rel = slice_compare(x, y, L, so).relation;
    return rel == SliceRelation::equal || rel == SliceRelation::subset;
  };
}

InclusionOracle congruous_inclusion_oracle(InclusionOracle fallback) {
  return [fallback = std::move(fallback)](const RelationalPattern& x,
                                          const RelationalPattern& y) {
    const bool applicable =
        x.kind() == RelationKind::len && y.kind() == RelationKind::len &&
        x.alphabet() == y.alphabet() && x.alphabet().size() == 2 &&
        are_congruous(x.pattern(), y.pattern()) && is_p23(x).holds;
    if (!applicable) return fallback(x, y);
    return decide_inclusion_congruous(x, y).decision ==
           Decision::inclusion_holds;
  };
}

std::vector<LabeledSample> charset_from_telltales(
    const std::vector<RelationalPattern>& family,
    const std::vector<std::vector<Word>>& telltales,
    const InclusionOracle& included, std::size_t L, bool erasing) {
  if (family.size() != telltales.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "one telltale per language is required");
  }
  std::vector<LabeledSample> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& w : telltales[i]) {
      if (!is_member(w, family[i], erasing)) {
        throw Error(ErrorKind::PreconditionViolated,
                    "telltale word '" + w + "' is not in language " +
                        std::to_string(i));
      }
      out[i].add(w);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (included(family[i], family[j])) continue;
      std::optional<Word> witness;
      for (const auto& w : words_upto(family[i].alphabet(), L)) {
        if (is_member(w, family[i], erasing) && !is_member(w, family[j], erasing)) {
          witness = w;
          break;
        }
      }
      if (!witness) {
        throw Error(ErrorKind::WitnessNotFoundWithinBound,
                    "no word of length <= " + std::to_string(L) + " in L" +
                        std::to_string(i) + " \\ L" + std::to_string(j));
      }
      out[i].add(*witness);
    }
  }
  return out;
}

std::vector<std::vector<Word>> telltales_from_charsets(
    const std::vector<LabeledSample>& samples) {
  std::vector<std::vector<Word>> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].positive_only()) {
      throw Error(ErrorKind::NegativeLabelPresent,
                  "sample " + std::to_string(i) + " has a negative example");
    }
    out.push_back(samples[i].words());
  }
  return out;
}

FamilyCheck check_characteristic_family(
    const std::vector<RelationalPattern>& family,
    const std::vector<LabeledSample>& samples, const InclusionOracle& included,
    bool erasing) {
  FamilyCheck check;
  const std::size_t k = family.size();
  // consistent[i][j]: C_i is consistent with L_j
  std::vector<std::vector<bool>> consistent(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      consistent[i][j] = consistent_with(samples[i], family[j], erasing);
    }
    if (!consistent[i][i]) {
      check.condition1 = false;
      check.failures.push_back("C" + std::to_string(i) +
                               " is not consistent with L" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool equal =
          included(family[i], family[j]) && included(family[j], family[i]);
      if (!equal && consistent[i][j] && consistent[j][i]) {
        check.condition2 = false;
        check.failures.push_back("C" + std::to_string(i) + " and C" +
                                 std::to_string(j) +
                                 " are each consistent with the other language");
      }
    }
  }
  return check;
}

FamilyCheck check_telltale_family(const std::vector<RelationalPattern>& family,
                                  const std::vector<std::vector<Word>>& telltales,
                                  const InclusionOracle& included,
                                  bool erasing) {
  FamilyCheck check;
  const std::size_t k = family.size();
  auto subset_of = [&](std::size_t i, std::size_t j) {
    return std::all_of(telltales[i].begin(), telltales[i].end(),
                       [&](const Word& w) { return is_member(w, family[j], erasing); });
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (!subset_of(i, i)) {
      check.condition1 = false;
      check.failures.push_back("T" + std::to_string(i) + " is not inside L" +
                               std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool j_in_i = included(family[j], family[i]);
      const bool i_in_j = included(family[i], family[j]);
      const bool proper = j_in_i && !i_in_j;  // L_j strictly inside L_i
      if (subset_of(i, j) && proper) {
        check.condition2 = false;
        check.failures.push_back("T" + std::to_string(i) + " lies in L" +
                                 std::to_string(j) + ", a proper subset of L" +
                                 std::to_string(i));
      }
    }
  }
  return check;
}

}  // namespace relpat
