#include "relpat/reversal.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace relpat {

SignedString signed_reverse(const SignedString& s) {
  SignedString out(s.rbegin(), s.rend());
  for (auto& sym : out) {
    if (!sym.is_terminal()) sym.variable = sym.variable.flipped();
  }
  return out;
}

std::string to_string(const SignedString& s) {
  std::string out;
  bool in_run = false;
  for (const auto& sym : s) {
    if (sym.is_terminal()) {
      if (!in_run && !out.empty()) out.push_back(' ');
      out.push_back(*sym.terminal);
      in_run = true;
      continue;
    }
    if (!out.empty()) out.push_back(' ');
    out += sym.variable.base;
    if (sym.variable.orientation == Orientation::reversed) out += "^rev";
    in_run = false;
  }
  return out;
}

bool SignedPattern::is_terminal_free() const {
  return std::none_of(items.begin(), items.end(),
                      [](const SignedSymbol& s) { return s.is_terminal(); });
}

std::vector<VariableId> SignedPattern::bases() const {
  std::vector<VariableId> out;
  std::set<VariableId> seen;
  for (const auto& sym : items) {
    if (!sym.is_terminal() && seen.insert(sym.variable.base).second) {
      out.push_back(sym.variable.base);
    }
  }
  return out;
}

SignedPattern signed_form(const RelationalPattern& rp) {
  if (rp.kind() != RelationKind::rev) {
    throw Error(ErrorKind::WrongKind, "signed form needs kind=rev");
  }
  const auto& groups = rp.groups();
  SignedPattern sp;
  for (const auto& item : rp.pattern().items()) {
    if (item.is_terminal()) {
      sp.items.push_back(SignedSymbol::term(item.symbol()));
    } else {
      const auto g = groups.group(item.name());
      sp.items.push_back(SignedSymbol::var(groups.representatives[g],
                                           groups.orientation_of(item.name())));
    }
  }
  return sp;
}

namespace {

// Occurrence names: base, base_2, base_3, ...
std::vector<VariableId> occurrence_names(const SignedPattern& sp) {
  std::unordered_map<VariableId, std::size_t> seen;
  std::vector<VariableId> names;
  std::set<VariableId> used;
  for (const auto& sym : sp.items) {
    if (sym.is_terminal()) {
      names.emplace_back();
      continue;
    }
    const std::size_t k = ++seen[sym.variable.base];
    VariableId name = k == 1 ? sym.variable.base
                             : sym.variable.base + "_" + std::to_string(k);
    if (!used.insert(name).second) {
      throw Error(ErrorKind::InvalidPattern,
                  "occurrence name '" + name + "' collides with a base name");
    }
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

RelationalPattern to_relational(const SignedPattern& sp,
                                const Alphabet& alphabet) {
  const auto names = occurrence_names(sp);
  std::vector<Item> items;
  std::map<VariableId, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i < sp.items.size(); ++i) {
    const auto& sym = sp.items[i];
    if (sym.is_terminal()) {
      items.push_back(Item::terminal(*sym.terminal));
    } else {
      items.push_back(Item::variable(names[i]));
      occurrences[sym.variable.base].push_back(i);
    }
  }

  Relation relation{RelationKind::rev, {}};
  for (const auto& base : sp.bases()) {
    const auto& occ = occurrences[base];
    if (occ.size() < 2) continue;
    std::optional<std::size_t> first_plain;
    std::optional<std::size_t> first_reversed;
    for (auto i : occ) {
      const bool rev = sp.items[i].variable.orientation == Orientation::reversed;
      auto& slot = rev ? first_reversed : first_plain;
      if (!slot) slot = i;
    }
    if (!first_plain || !first_reversed) {
      throw Error(ErrorKind::NotRepresentable,
                  "'" + base +
                      "' repeats with a single orientation, which a rev "
                      "relation cannot express");
    }
    for (auto i : occ) {
      const bool rev = sp.items[i].variable.orientation == Orientation::reversed;
      if (!rev) {
        relation.pairs.emplace_back(names[i], names[*first_reversed]);
      } else if (i != *first_reversed) {
        relation.pairs.emplace_back(names[*first_plain], names[i]);
      }
    }
  }
  return RelationalPattern(alphabet, Pattern(std::move(items)),
                           std::move(relation));
}

SignedPattern apply_morphism(const VariableMorphism& m, const SignedPattern& sp) {
  SignedPattern out;
  for (const auto& sym : sp.items) {
    if (sym.is_terminal()) {
      out.items.push_back(sym);
      continue;
    }
    auto it = m.images.find(sym.variable.base);
    if (it == m.images.end()) {
      throw Error(ErrorKind::MissingImage,
                  "no image for '" + sym.variable.base + "'");
    }
    const SignedString piece = sym.variable.orientation == Orientation::plain
                                   ? it->second
                                   : signed_reverse(it->second);
    out.items.insert(out.items.end(), piece.begin(), piece.end());
  }
  return out;
}

namespace {

class MorphismSearch {
 public:
  MorphismSearch(const SignedPattern& source, const SignedPattern& target)
      : source_(source.items), target_(target.items) {}

  std::optional<VariableMorphism> run() {
    if (!dfs(0, 0)) return std::nullopt;
    VariableMorphism m;
    for (auto& [base, img] : images_) m.images[base] = img.value_or(SignedString{});
    return m;
  }

 private:
  std::size_t committed(std::size_t i) const {
    std::size_t need = 0;
    for (; i < source_.size(); ++i) {
      auto it = images_.find(source_[i].variable.base);
      if (it != images_.end() && it->second) need += it->second->size();
    }
    return need;
  }

  bool matches(std::size_t pos, const SignedString& piece) const {
    if (pos + piece.size() > target_.size()) return false;
    return std::equal(piece.begin(), piece.end(), target_.begin() + pos);
  }

  bool dfs(std::size_t i, std::size_t pos) {
    if (pos + committed(i) > target_.size()) return false;
    if (i == source_.size()) return pos == target_.size();
    const auto& var = source_[i].variable;
    const bool plain = var.orientation == Orientation::plain;
    auto& slot = images_[var.base];
    if (slot) {
      const SignedString piece = plain ? *slot : signed_reverse(*slot);
      return matches(pos, piece) && dfs(i + 1, pos + piece.size());
    }
    for (std::size_t len = target_.size() - pos + 1; len-- > 0;) {
      SignedString seg(target_.begin() + pos, target_.begin() + pos + len);
      images_[var.base] = plain ? seg : signed_reverse(seg);
      if (dfs(i + 1, pos + len)) return true;
    }
    images_[var.base].reset();
    return false;
  }

  const SignedString& source_;
  const SignedString& target_;
  std::map<VariableId, std::optional<SignedString>> images_;
};

}  // namespace

std::optional<VariableMorphism> morphism_search(const SignedPattern& source,
                                                const SignedPattern& target,
                                                UnifyGuards guards) {
  if (!source.is_terminal_free() || !target.is_terminal_free()) {
    throw Error(ErrorKind::NotTerminalFree,
                "morphism search needs terminal-free patterns");
  }
  if (source.bases().size() > guards.max_groups) {
    throw Error(ErrorKind::InstanceTooLarge,
                std::to_string(source.bases().size()) +
                    " source variables exceed the guard of " +
                    std::to_string(guards.max_groups));
  }
  if (target.items.size() > guards.max_word) {
    throw Error(ErrorKind::InstanceTooLarge,
                "target length " + std::to_string(target.items.size()) +
                    " exceeds the guard of " + std::to_string(guards.max_word));
  }
  MorphismSearch search(source, target);
  auto m = search.run();
  if (m && !(apply_morphism(*m, source) == target)) {
    throw Error(ErrorKind::PreconditionViolated,
                "internal error: morphism does not map source onto target");
  }
  return m;
}

SignedPattern triple_palindrome_signed() {
  SignedPattern sp;
  for (const char* base : {"x1", "x2", "x3"}) {
    sp.items.push_back(SignedSymbol::var(base));
    sp.items.push_back(SignedSymbol::var(base, Orientation::reversed));
  }
  return sp;
}

RelationalPattern triple_palindrome_pattern(const Alphabet& alphabet) {
  return to_relational(triple_palindrome_signed(), alphabet);
}

bool is_valid_decomposition(const Word& w, const Decomposition& d) {
  if (2 * (d.v1 + d.v2 + d.v3) != w.size()) return false;
  std::size_t at = 0;
  for (std::size_t len : {d.v1, d.v2, d.v3}) {
    const Word v = w.substr(at, len);
    if (w.compare(at + len, len, reversed(v)) != 0) return false;
    at += 2 * len;
  }
  return true;
}

std::optional<Decomposition> smallest_decomposition(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  const std::size_t half = w.size() / 2;
  for (std::size_t a = 0; a <= half; ++a) {
    for (std::size_t b = 0; a + b <= half; ++b) {
      const Decomposition d{a, b, half - a - b};
      if (is_valid_decomposition(w, d)) return d;
    }
  }
  return std::nullopt;
}

AntiTelltale anti_telltale(const std::vector<Word>& T,
                           const std::optional<std::vector<Decomposition>>& decompositions,
                           const Alphabet& alphabet) {
  if (alphabet.size() != 2) {
    throw Error(ErrorKind::NonBinaryAlphabet,
                "the construction is defined over a binary alphabet");
  }
  if (decompositions && decompositions->size() != T.size()) {
    throw Error(ErrorKind::InvalidDecomposition,
                "expected one decomposition per word");
  }
  const char first = alphabet.symbols()[0];
  const char second = alphabet.symbols()[1];

  AntiTelltale result{{}, triple_palindrome_pattern(alphabet), {}, {}, {}, {}};
  std::vector<SignedString> y(3);
  for (std::size_t i = 0; i < T.size(); ++i) {
    const Word& w = T[i];
    if (!alphabet.admits(w)) {
      throw Error(ErrorKind::NotAMember, "'" + w + "' is not over the alphabet");
    }
    Decomposition d;
    if (decompositions) {
      d = (*decompositions)[i];
      if (!is_valid_decomposition(w, d)) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "(" + std::to_string(d.v1) + "," + std::to_string(d.v2) +
                        "," + std::to_string(d.v3) + ") does not split '" + w +
                        "'");
      }
    } else {
      auto found = smallest_decomposition(w);
      if (!found) {
        throw Error(ErrorKind::NotAMember,
                    "'" + w + "' is not in the language of x1 x1^rev x2 x2^rev x3 x3^rev");
      }
      d = *found;
    }
    result.decompositions.push_back(d);

    const Word v1 = w.substr(0, d.v1);
    const Word v2 = w.substr(2 * d.v1, d.v2);
    const Word v3 = w.substr(2 * (d.v1 + d.v2), d.v3);
    const VariableId x_first = "x" + std::to_string(2 * i + 1);
    const VariableId x_second = "x" + std::to_string(2 * i + 2);
    auto invert = [&](const Word& u) {
      SignedString out;
      for (char c : u) out.push_back(SignedSymbol::var(c == first ? x_first : x_second));
      return out;
    };

    bool case_one = false;
    for (char s : {first, second}) {
      if (std::count(v3.begin(), v3.end(), s) == 1 &&
          v1.find(s) == Word::npos && v2.find(s) == Word::npos) {
        case_one = true;
      }
    }
    result.first_case.push_back(case_one);
    std::vector<SignedString> alpha =
        case_one ? std::vector<SignedString>{invert(v1 + v2), invert(v3), {}}
                 : std::vector<SignedString>{invert(v1), invert(v2), invert(v3)};
    for (std::size_t k = 0; k < 3; ++k) {
      y[k].insert(y[k].end(), alpha[k].begin(), alpha[k].end());
    }
  }

  for (std::size_t k = 0; k < 3; ++k) {
    const auto back = signed_reverse(y[k]);
    result.signed_pattern.items.insert(result.signed_pattern.items.end(),
                                       y[k].begin(), y[k].end());
    result.signed_pattern.items.insert(result.signed_pattern.items.end(),
                                       back.begin(), back.end());
    result.phi.images["x" + std::to_string(k + 1)] = y[k];
  }
  if (result.signed_pattern.items.empty()) {
    throw Error(ErrorKind::EmptyConstruction,
                "every word decomposes into empty parts; no pattern remains");
  }
  result.pattern = to_relational(result.signed_pattern, alphabet);

  const auto& sp_items = result.signed_pattern.items;
  const auto& p_items = result.pattern.pattern().items();
  for (std::size_t i = 0; i < T.size(); ++i) {
    const VariableId x_first = "x" + std::to_string(2 * i + 1);
    const VariableId x_second = "x" + std::to_string(2 * i + 2);
    Substitution s;
    for (std::size_t k = 0; k < p_items.size(); ++k) {
      const auto& base = sp_items[k].variable.base;
      Word img;
      if (base == x_first) img = Word(1, first);
      if (base == x_second) img = Word(1, second);
      s.set(p_items[k].name(), img);
    }
    if (apply(result.pattern.pattern(), s) != T[i] ||
        !validate(result.pattern, s).valid) {
      throw Error(ErrorKind::PreconditionViolated,
                  "internal error: witness for '" + T[i] + "' fails");
    }
    result.witnesses.push_back(std::move(s));
  }
  if (!(apply_morphism(result.phi, triple_palindrome_signed()) ==
        result.signed_pattern)) {
    throw Error(ErrorKind::PreconditionViolated,
                "internal error: the morphism does not produce the pattern");
  }
  return result;
}

std::optional<Word> properness_witness(const RelationalPattern& source,
                                       const RelationalPattern& constructed,
                                       std::size_t bound, UnifyGuards guards) {
  const auto& sigma = source.alphabet().symbols();
  if (sigma.size() < 2) return std::nullopt;
  const char a = sigma[0];
  const char b = sigma[1];
  for (std::size_t kappa = 1; kappa <= bound; ++kappa) {
    for (std::size_t xi = 1; xi <= bound; ++xi) {
      if (kappa == xi) continue;
      const Word w = Word(2 * kappa, a) + Word(2, b) + Word(2 * xi, a);
      if (is_member(w, source, true, guards) &&
          !is_member(w, constructed, true, guards)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace relpat
