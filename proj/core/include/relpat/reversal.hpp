#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpat/core.hpp"
#include "relpat/member.hpp"
#include "relpat/subst.hpp"

namespace relpat {

struct SignedVariable {
  VariableId base;
  Orientation orientation = Orientation::plain;

  SignedVariable flipped() const { return {base, flip(orientation)}; }
  bool operator==(const SignedVariable&) const = default;
};

/// A terminal or a signed variable.
struct SignedSymbol {
  std::optional<char> terminal;
  SignedVariable variable;

  static SignedSymbol term(char c) { return {c, {}}; }
  static SignedSymbol var(VariableId base,
                          Orientation o = Orientation::plain) {
    return {std::nullopt, {std::move(base), o}};
  }
  bool is_terminal() const noexcept { return terminal.has_value(); }
  bool operator==(const SignedSymbol&) const = default;
};

using SignedString = std::vector<SignedSymbol>;

/// Reverses the order and flips every variable's orientation.
SignedString signed_reverse(const SignedString& s);

/// "x1 x1^rev a x2"
std::string to_string(const SignedString& s);

struct SignedPattern {
  SignedString items;

  bool is_terminal_free() const;
  /// Distinct bases in order of first occurrence.
  std::vector<VariableId> bases() const;
  std::string to_string() const { return relpat::to_string(items); }
  bool operator==(const SignedPattern&) const = default;
};

/// Every occurrence is rewritten to its group's representative, reversed
/// when its color differs from the representative's.
SignedPattern signed_form(const RelationalPattern& rp);

/// Inverse of signed_form. The first occurrence of a base keeps its name and
/// the k-th becomes base_k. Same-orientation occurrences are linked through
/// an opposite one, so a base occurring more than once without any reversed
/// occurrence throws NotRepresentable.
RelationalPattern to_relational(const SignedPattern& sp,
                                const Alphabet& alphabet);

struct VariableMorphism {
  std::map<VariableId, SignedString> images;

  bool operator==(const VariableMorphism&) const = default;
};

/// Plain occurrences become their image, reversed ones the signed reverse of
/// it. Throws MissingImage.
SignedPattern apply_morphism(const VariableMorphism& m, const SignedPattern& sp);

/// Searches a morphism m with apply_morphism(m, source) == target, trying
/// longer images first. Both patterns must be terminal-free. Existence
/// means the target's language is included in the source's.
std::optional<VariableMorphism> morphism_search(const SignedPattern& source,
                                                const SignedPattern& target,
                                                UnifyGuards guards = {});

/// x1 x1^rev x2 x2^rev x3 x3^rev in signed form.
SignedPattern triple_palindrome_signed();
RelationalPattern triple_palindrome_pattern(const Alphabet& alphabet);

/// Lengths of v1, v2, v3 in w = v1 v1^rev v2 v2^rev v3 v3^rev.
struct Decomposition {
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  std::size_t v3 = 0;

  bool operator==(const Decomposition&) const = default;
};

/// Lexicographically smallest valid decomposition, if any.
std::optional<Decomposition> smallest_decomposition(const Word& w);
bool is_valid_decomposition(const Word& w, const Decomposition& d);

struct AntiTelltale {
  SignedPattern signed_pattern;
  RelationalPattern pattern;
  /// witnesses[i] generates T[i] from `pattern`.
  std::vector<Substitution> witnesses;
  /// Maps x1, x2, x3 of the source to y1, y2, y3.
  VariableMorphism phi;
  std::vector<Decomposition> decompositions;
  /// Which words took the "exactly once" branch.
  std::vector<bool> first_case;
};

/// Builds a pattern whose language contains T and is included in that of
/// x1 x1^rev x2 x2^rev x3 x3^rev. Both inclusions are checked before
/// returning. The first alphabet letter maps to x_{2i-1}, the second to
/// x_{2i}. Throws NotAMember, InvalidDecomposition, EmptyConstruction.
AntiTelltale anti_telltale(
    const std::vector<Word>& T,
    const std::optional<std::vector<Decomposition>>& decompositions =
        std::nullopt,
    const Alphabet& alphabet = Alphabet::from_string("ab"));

/// First a^{2k} bb a^{2x} (k != x, both in [1, bound], k outer) that is in
/// the source language and not in the constructed one.
std::optional<Word> properness_witness(const RelationalPattern& source,
                                       const RelationalPattern& constructed,
                                       std::size_t bound,
                                       UnifyGuards guards = {});

}  // namespace relpat
