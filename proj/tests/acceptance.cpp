// Runs the ten acceptance criteria and prints one line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "relpat/charset.hpp"
#include "relpat/member.hpp"
#include "relpat/nf.hpp"
#include "relpat/reversal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace relpat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

// Fixture words.
const Word kNonErasingWord = "aa" "ab" "aaaaaaaaa" "ab" "aaaaa";
const Word kWideWord = "a" + Word(100, 'b') + Word(9, 'a') + "a" + Word(100, 'b');

void criterion1(Outcome& o) {
  const auto p = testing::nonerasing_p();
  const auto q = testing::nonerasing_q();
  o.require(is_member(kNonErasingWord, p, false), "word not in L(p)");
  o.require(!is_member(kNonErasingWord, q, false), "word in L(q)");
  const auto words = sample_lz_words(p, {2, false}, 200, 2024);
  std::size_t in_q = 0;
  for (const auto& gw : words) in_q += is_member(gw.word, q, false);
  o.require(words.size() == 200, "sample size");
  o.require(in_q == words.size(), "sampled word outside L(q)");
  o.detail << in_q << "/" << words.size() << " sampled words in L(q)";
}

void criterion2(Outcome& o) {
  const auto p = testing::wide_p();
  const auto q = testing::wide_q();
  o.require(is_member(kWideWord, p), "word not in L(p)");
  o.require(!is_member(kWideWord, q), "word in L(q)");
  const auto words = sample_lz_words(p, {2, true}, 200, 2024);
  std::size_t in_q = 0;
  for (const auto& gw : words) in_q += is_member(gw.word, q);
  o.require(words.size() == 200, "sample size");
  o.require(in_q == words.size(), "sampled word outside L(q)");
  o.detail << in_q << "/" << words.size() << " sampled words in L(q)";
}

void criterion3(Outcome& o) {
  const auto rp = testing::dependent_groups();
  const auto report = normal_form_with_report(rp);
  const auto got = report.result.pattern().to_string();
  o.require(got == "x1 x2 a x3 b x5 x4 x6 bba x8 x7 x9 aa", "normal form is " + got);
  o.require(report.removed.size() == 1 && report.removed[0].representative == "y1" &&
                report.removed[0].coefficients == std::map<VariableId, std::size_t>{{"x1", 2}},
            "eliminated group");
  const auto dvs = decomposition_vectors(rp);
  const auto y = format_vector(dvs[rp.groups().group("y1")].compact());
  const auto x = format_vector(dvs[rp.groups().group("x1")].compact());
  o.require(y == "<4,0,2,2>", "vector of [y1] is " + y);
  o.require(x == "<2,0,1,1>", "vector of [x1] is " + x);
  o.detail << "p_nf = " << got << ", [y1] " << y << " = 2 * [x1] " << x;
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(4);
  const auto sigma = Alphabet::from_string("ab");
  std::size_t shrunk = 0;
  const int rounds = 50;
  for (int round = 0; round < rounds; ++round) {
    const auto rp = testing::random_pattern(rng, RelationKind::len, sigma, {3, 3, 10, 2});
    const auto nf = normal_form(rp);
    shrunk += nf.pattern().size() < rp.pattern().size();
    o.require(lang_upto(rp, 10) == lang_upto(nf, 10), serialize_pattern_file(rp));
  }
  o.detail << rounds << " patterns, " << shrunk << " lost a group";
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(5);
  const auto sigma = Alphabet::from_string("ab");
  std::size_t words = 0;
  const int rounds = 20;
  for (auto kind : {RelationKind::eq, RelationKind::rev, RelationKind::len}) {
    for (int round = 0; round < rounds; ++round) {
      const auto rp = testing::random_pattern(rng, kind, sigma, {3, 3, 6, 2});
      const auto accepted = lang_upto(rp, 9);
      const auto generated = testing::generated_words(rp, 9, true);
      words += generated.size();
      o.require(std::set<Word>(accepted.begin(), accepted.end()) == generated,
                serialize_pattern_file(rp));
    }
  }
  o.detail << 3 * rounds << " patterns, " << words << " generated words matched";
}

// Binary P(2,3) pattern: terminal blocks of length 3 or 4, every interior
// block holding 2..5 members of each group.
RelationalPattern random_p23(std::mt19937_64& rng) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t groups = uniform(1, 2);
  const std::size_t n = uniform(1, 3);
  std::string pattern;
  std::vector<std::vector<std::string>> members(groups);
  std::size_t next = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    const bool interior = j > 0 && j < n;
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t count = interior ? uniform(2, 5) : uniform(0, 2);
      for (std::size_t k = 0; k < count; ++k) {
        const std::string v = "v" + std::to_string(next++);
        members[g].push_back(v);
        pattern += v + " ";
      }
    }
    if (j < n) {
      for (std::size_t k = uniform(3, 4); k > 0; --k) pattern += (rng() & 1) ? 'a' : 'b';
      pattern += " ";
    }
  }
  std::string pairs;
  for (const auto& m : members) {
    for (std::size_t k = 1; k < m.size(); ++k) pairs += "(" + m[0] + "," + m[k] + ") ";
  }
  return testing::make("ab", "len", pattern, pairs);
}

// Splits every group whose interior blocks can feed two halves of at least
// two members each; the result stays in P(2,3) and its language contains
// that of rp.
std::optional<RelationalPattern> split_groups(const RelationalPattern& rp, std::mt19937_64& rng) {
  const auto& blocks = rp.blocks().variable_blocks;
  const std::size_t n = blocks.size() - 1;
  Relation relation{RelationKind::len, {}};
  bool split_any = false;
  for (GroupId g = 0; g < rp.groups().size(); ++g) {
    bool splittable = n >= 2;
    for (std::size_t j = 1; j < n; ++j) {
      std::size_t count = 0;
      for (const auto& v : blocks[j]) count += rp.groups().group(v) == g;
      splittable = splittable && count >= 4;
    }
    std::vector<VariableId> halves[2];
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t seen = 0;
      for (const auto& v : blocks[j]) {
        if (rp.groups().group(v) != g) continue;
        std::size_t side = 0;
        if (splittable) side = seen < 4 ? seen % 2 : rng() & 1;
        halves[side].push_back(v);
        ++seen;
      }
    }
    split_any = split_any || (splittable && !halves[1].empty());
    for (const auto& h : halves) {
      for (std::size_t k = 1; k < h.size(); ++k) relation.pairs.emplace_back(h[0], h[k]);
    }
  }
  if (!split_any) return std::nullopt;
  return RelationalPattern(rp.alphabet(), rp.pattern(), std::move(relation));
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(6);
  std::size_t holds = 0, perturbed = 0, refuted = 0;
  for (int attempt = 0; attempt < 2000 && (holds < 30 || refuted < 30); ++attempt) {
    const auto p = random_p23(rng);
    const auto q = split_groups(p, rng);
    if (!q) continue;
    if (!is_p23(p).holds || !is_p23(*q).holds) {
      o.require(false, "constructed pattern outside P(2,3)");
      continue;
    }
    const auto v = decide_inclusion_congruous(p, *q);
    o.require(v.decision == Decision::inclusion_holds, "inclusion: " + serialize_pattern_file(p));
    const auto s = slice_compare(p, *q, 12);
    o.require(s.relation == SliceRelation::equal || s.relation == SliceRelation::subset,
              "slice inclusion at 12");
    holds += v.decision == Decision::inclusion_holds;

    ++perturbed;
    const auto back = decide_inclusion_congruous(*q, p);
    if (back.decision != Decision::refuted) continue;
    ++refuted;
    o.require(back.witness && is_member(*back.witness, *q) && !is_member(*back.witness, p),
              "unverified witness");
  }
  o.require(holds >= 30, "fewer than 30 inclusion pairs");
  o.require(refuted >= 30, "fewer than 30 refuted pairs");
  o.detail << holds << " inclusion pairs; " << refuted << "/" << perturbed
           << " reversed pairs refuted with verified witness";
}

std::vector<Word> random_T(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 4), part(0, 5);
  std::vector<Word> T;
  const std::size_t k = count(rng);
  while (T.size() < k) {
    std::size_t len[3];
    std::size_t total;
    do {
      total = 0;
      for (auto& l : len) total += (l = part(rng) / 2);
    } while (total == 0 || 2 * total > 10);
    Word w;
    for (auto l : len) {
      Word v;
      for (std::size_t i = 0; i < l; ++i) v += (rng() & 1) ? 'a' : 'b';
      w += v + Word(v.rbegin(), v.rend());
    }
    T.push_back(w);
  }
  return T;
}

void criterion7(Outcome& o) {
  const auto sigma = Alphabet::from_string("ab");
  const auto source = triple_palindrome_pattern(sigma);
  const auto at =
      anti_telltale(testing::palindrome_words(), testing::palindrome_decompositions(), sigma);
  const std::string phi1 = to_string(at.phi.images.at("x1"));
  const std::string phi2 = to_string(at.phi.images.at("x2"));
  const std::string phi3 = to_string(at.phi.images.at("x3"));
  o.require(phi1 == "x1 x1 x4 x3 x6 x7 x7 x8", "Phi(x1) = " + phi1);
  o.require(phi2 == "x2 x3 x6 x6 x8", "Phi(x2) = " + phi2);
  o.require(phi3 == "x3 x4 x6 x6 x8 x7 x8", "Phi(x3) = " + phi3);
  o.require(is_member("aabbaaaa", source) && !is_member("aabbaaaa", at.pattern),
            "aabbaaaa separation");
  o.require(properness_witness(source, at.pattern, 4) == Word("aabbaaaa"), "properness witness");

  std::mt19937_64 rng(7);
  std::size_t certified = 0;
  const int rounds = 10;
  for (int round = 0; round < rounds; ++round) {
    const auto T = random_T(rng);
    const auto r = anti_telltale(T, std::nullopt, sigma);
    for (std::size_t i = 0; i < T.size(); ++i) {
      o.require(apply(r.pattern.pattern(), r.witnesses[i]) == T[i] &&
                    validate(r.pattern, r.witnesses[i]).valid,
                "T-membership witness");
    }
    o.require(apply_morphism(r.phi, triple_palindrome_signed()) == r.signed_pattern,
              "Phi morphism check");
    const bool proper = properness_witness(source, r.pattern, 4).has_value();
    certified += proper;
  }
  o.require(certified >= 8, "properness certified for fewer than 8 instances");
  o.detail << "golden construction reproduced; properness certified " << certified << "/" << rounds;
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(8);
  const auto sigma = Alphabet::from_string("ab");
  std::size_t pairs = 0, found = 0, refuted = 0, inconclusive = 0;
  while (pairs < 40) {
    const auto source = testing::random_signed_pattern(rng, 4, 3, "x");
    SignedPattern target;
    if (pairs % 2 == 0) {
      // Image of the source under a random morphism.
      VariableMorphism m;
      for (const auto& b : source.bases()) {
        const auto img = testing::random_signed_pattern(rng, 2, 2, "y");
        m.images[b] = (rng() % 4 == 0) ? SignedString{} : img.items;
      }
      target = apply_morphism(m, source);
      if (target.items.empty() || target.items.size() > 4) continue;
      try {
        to_relational(target, sigma);
      } catch (const Error&) {
        continue;
      }
    } else {
      target = testing::random_signed_pattern(rng, 4, 3, "y");
    }
    ++pairs;
    const auto rs = to_relational(source, sigma);
    const auto rt = to_relational(target, sigma);
    const auto m = morphism_search(source, target);
    const auto s = slice_compare(rt, rs, 8);
    if (m) {
      ++found;
      o.require(apply_morphism(*m, source) == target, "morphism does not map source to target");
      o.require(s.relation == SliceRelation::equal || s.relation == SliceRelation::subset,
                source.to_string() + " -> " + target.to_string());
    } else if (s.in_a_not_b) {
      ++refuted;
    } else {
      ++inconclusive;
    }
  }
  o.detail << pairs << " pairs: " << found << " morphisms with slice inclusion, " << refuted
           << " refuted, " << inconclusive << " inconclusive";
}

void criterion9(Outcome& o) {
  const std::vector<RelationalPattern> family{
      testing::make("ab", "len", "u1 u2 aaa u3 u4 bbb u5 u6",
                    "(u1,u2) (u2,u3) (u3,u4) (u4,u5) (u5,u6)"),
      testing::make("ab", "len", "x1 aaa x2 x3 bbb x4"),
      testing::make("ab", "len", "y1 aaa y2 y3 y4 y5 bbb y6", "(y1,y2) (y2,y6) (y3,y4) (y4,y5)"),
      testing::make("ab", "len", "z1 aaa z2 z3 z4 z5 bbb z6", "(z1,z2) (z2,z3) (z4,z5) (z5,z6)"),
  };
  std::vector<std::vector<Word>> telltales;
  for (const auto& rp : family) telltales.push_back(gen_seps(rp, 1).words());
  const auto oracle = congruous_inclusion_oracle(slice_inclusion_oracle(10));
  const auto charsets = charset_from_telltales(family, telltales, oracle, 10);
  const auto check = check_characteristic_family(family, charsets, oracle);
  o.require(check.condition1, "condition 1");
  o.require(check.condition2, "condition 2");
  for (const auto& f : check.failures) o.detail << f << "; ";
  std::size_t size = 0;
  for (const auto& c : charsets) size += c.size();
  o.detail << "4 languages, " << size << " sample words, both conditions "
           << (check.holds() ? "hold" : "fail");
}

void criterion10(Outcome& o) {
  const auto rp = testing::make("ab", "rev", "x1 x2", "(x1,x2)");
  std::size_t agreed = 0, total = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : testing::all_words_of_length(rp.alphabet(), n)) {
      ++total;
      const bool ok = member_unify(w, rp).has_value() == testing::is_even_palindrome(w);
      agreed += ok;
      o.require(ok, "disagreement on " + w);
    }
  }
  o.detail << agreed << "/" << total << " words agree";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"non-erasing fixture with two equal-length patterns", criterion1},
      {"erasing fixture with a long forbidden block", criterion2},
      {"equal-length normal form golden", criterion3},
      {"normal form preserves the slice up to length 10", criterion4},
      {"decider agrees with substitution enumeration", criterion5},
      {"congruous inclusion suite", criterion6},
      {"anti-telltale construction", criterion7},
      {"reversal-obedient morphisms imply inclusion", criterion8},
      {"characteristic sets from telltales", criterion9},
      {"even palindromes", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("[%s] criterion %zu: %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
