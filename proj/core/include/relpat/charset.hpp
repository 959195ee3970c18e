#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpat/classify.hpp"
#include "relpat/core.hpp"
#include "relpat/member.hpp"
#include "relpat/subst.hpp"

namespace relpat {

/// Orders words by length, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Finite set of (word, label) pairs; label 1 marks a positive example.
class LabeledSample {
 public:
  /// Re-adding a word with the same label is a no-op; a conflicting label
  /// throws PreconditionViolated.
  void add(const Word& w, int label = 1);
  void add_all(const std::vector<Word>& words, int label = 1);

  const std::map<Word, int, ShortLex>& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool contains(const Word& w) const { return entries_.count(w) != 0; }
  /// Words in short-lex order, labels dropped.
  std::vector<Word> words() const;
  bool positive_only() const;

 private:
  std::map<Word, int, ShortLex> entries_;
};

/// Label 1 words are members and label 0 words are not.
bool consistent_with(const LabeledSample& sample, const RelationalPattern& rp,
                     bool erasing = true, UnifyGuards guards = {});

/// Union over groups of the erasing single-group l_ell substitutions, plus
/// the terminal skeleton.
LabeledSample gen_seps(const RelationalPattern& rp, std::size_t ell,
                       ContentMode content = ContentMode::all(),
                       bool include_skeleton = true);

/// Non-erasing S_2: one group at length 2, every other variable length 1.
LabeledSample gen_s2_nonerasing(const RelationalPattern& rp,
                                ContentMode content = ContentMode::all());

/// One word per group plus the skeleton. Members of the group in block j
/// get the smallest letter differing from the last letter of the terminal
/// block before and the first letter of the one after; other groups are
/// erased. Needs |Sigma| >= 3.
LabeledSample witness_set_sigma3(const RelationalPattern& rp);

/// The per-group block words s_{i,1..n+1} used by the binary witness set.
std::vector<Word> unambiguous_block_words(const RelationalPattern& rp,
                                          GroupId group);

/// True iff the block words satisfy both substring conditions against the
/// terminal blocks: w_j is not a factor of s_j w_j[..-1], nor of
/// w_j[1..] s_{j+1}.
bool is_unambiguous(const BlockDecomposition& blocks,
                    const std::vector<Word>& block_words);

/// One unambiguous word per group (binary alphabet, P(2,3)). Each word is
/// checked with is_unambiguous before it is added.
LabeledSample witness_set_binary_congruous(const RelationalPattern& rp);

enum class Decision { equivalent, inclusion_holds, refuted, inapplicable };

std::string_view to_string(Decision d);

enum class EquivMethod { auto_select, sigma3, binary_p23, slice };

std::string_view to_string(EquivMethod m);
std::optional<EquivMethod> equiv_method_from_string(std::string_view s);

struct Verdict {
  Decision decision = Decision::inapplicable;
  /// s2-sample, sigma3-witness, congruous-witness, seps2-sample,
  /// slice, or the name of the failed precondition check.
  std::string method;
  std::optional<Word> witness;
  /// True when the witness lies in the first language and not the second.
  bool witness_in_first = true;
  /// Number of sample words that were tested.
  std::size_t sample_size = 0;
  /// True for slice verdicts, which are evidence rather than proof.
  bool bounded = false;
  std::string note;
};

struct EquivOptions {
  EquivMethod method = EquivMethod::auto_select;
  bool erasing = true;
  std::size_t slice_bound = 12;
  std::size_t cap = 1'000'000;
  std::uint64_t seed = 0;
  UnifyGuards guards{};
};

Verdict decide_equiv(const RelationalPattern& a, const RelationalPattern& b,
                     EquivOptions options = {});

/// Inclusion L(a) <= L(b) for congruous binary patterns with a in P(2,3).
/// Throws PreconditionViolated naming the clause that fails.
Verdict decide_inclusion_congruous(const RelationalPattern& a,
                                   const RelationalPattern& b,
                                   std::size_t cap = 1'000'000);

struct IncongruityReport {
  bool congruous = false;
  bool first_in_p23 = false;
  bool second_in_p23 = false;
  std::vector<ForbiddenBlock> forbidden_first;   // n >= 0 variant
  std::vector<ForbiddenBlock> forbidden_second;  // n >= 0 variant
  std::optional<TelltaleConjugatePair> conjugates;
  /// Incongruous and the first pattern has no forbidden block.
  bool seps2_premises = false;
  /// "congruous-witness", "seps2-sample" or "slice".
  std::string recommended_method;
};

/// Needs a binary alphabet (NonBinaryAlphabet otherwise).
IncongruityReport classify_incongruous_pair(const RelationalPattern& a,
                                            const RelationalPattern& b);

/// Answers "is L(first) a subset of L(second)?".
using InclusionOracle =
    std::function<bool(const RelationalPattern&, const RelationalPattern&)>;

InclusionOracle slice_inclusion_oracle(std::size_t L, bool erasing = true);
/// Exact for congruous binary P(2,3) inputs; falls back to `fallback`
/// elsewhere.
InclusionOracle congruous_inclusion_oracle(InclusionOracle fallback);

/// C_i = T_i x {1} plus, for every j < i with L_i not included in L_j, the
/// first word of length <= L in L_i \ L_j. Throws
/// WitnessNotFoundWithinBound when the oracle reports non-inclusion but no
/// such word is found.
std::vector<LabeledSample> charset_from_telltales(
    const std::vector<RelationalPattern>& family,
    const std::vector<std::vector<Word>>& telltales,
    const InclusionOracle& included, std::size_t L, bool erasing = true);

/// Throws NegativeLabelPresent if some sample carries a 0 label.
std::vector<std::vector<Word>> telltales_from_charsets(
    const std::vector<LabeledSample>& samples);

struct FamilyCheck {
  bool condition1 = true;
  bool condition2 = true;
  std::vector<std::string> failures;

  bool holds() const noexcept { return condition1 && condition2; }
};

/// Both conditions of a family of characteristic sets, with equality of
/// languages decided as mutual inclusion.
FamilyCheck check_characteristic_family(
    const std::vector<RelationalPattern>& family,
    const std::vector<LabeledSample>& samples, const InclusionOracle& included,
    bool erasing = true);

/// Both conditions of a family of telltales.
FamilyCheck check_telltale_family(const std::vector<RelationalPattern>& family,
                                  const std::vector<std::vector<Word>>& telltales,
                                  const InclusionOracle& included,
                                  bool erasing = true);

}  // namespace relpat
