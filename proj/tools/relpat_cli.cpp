#include "relpat_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "relpat/charset.hpp"
#include "relpat/classify.hpp"
#include "relpat/member.hpp"
#include "relpat/nf.hpp"
#include "relpat/text_format.hpp"

namespace relpat::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool non_erasing = false;
  std::size_t max_len = 12;
  std::size_t cap = 1'048'576;
  std::size_t var_guard = 12;
  std::size_t word_guard = 30;
  std::uint64_t seed = 0;
  bool plain = false;

  bool erasing() const { return !non_erasing; }
  UnifyGuards guards() const { return {var_guard, word_guard}; }
};

RelationalPattern load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern_file(buffer.str());
}

json substitution_json(const Substitution& s) {
  json out = json::object();
  for (const auto& [v, w] : s.assignment()) out[v] = w;
  return out;
}

json pairs_json(const Relation& r) {
  json out = json::array();
  for (const auto& [v, w] : r.pairs) out.push_back({v, w});
  return out;
}

json verdict_json(const Verdict& v) {
  json out{{"decision", to_string(v.decision)},
           {"method", v.method},
           {"bounded", v.bounded},
           {"sample_size", v.sample_size}};
  if (v.witness) {
    out["witness"] = *v.witness;
    out["witness_in"] = v.witness_in_first ? "first" : "second";
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json forbidden_json(const std::vector<ForbiddenBlock>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    out.push_back({{"index", b.index}, {"block", b.block}, {"shape", b.shape}});
  }
  return out;
}

struct Result {
  json body;
  int code = ok;
};

Result cmd_parse(const RelationalPattern& rp) {
  json groups = json::array();
  for (const auto& g : rp.groups().groups) groups.push_back(g);
  json blocks{{"variable_blocks", rp.blocks().variable_blocks},
              {"terminal_blocks", rp.blocks().terminal_blocks}};
  json out{{"alphabet", rp.alphabet().to_string()},
           {"relation", to_string(rp.kind())},
           {"pattern", rp.pattern().to_string()},
           {"pairs", pairs_json(rp.relation())},
           {"groups", groups},
           {"representatives", rp.groups().representatives},
           {"blocks", blocks},
           {"text", serialize_pattern_file(rp)}};
  if (rp.kind() == RelationKind::rev) {
    json orient = json::object();
    for (const auto& v : rp.pattern().variables()) {
      orient[v] = rp.groups().orientation_of(v) == Orientation::plain ? "=" : "rev";
    }
    out["orientation"] = orient;
  }
  json vectors = json::object();
  const auto dvs = decomposition_vectors(rp);
  for (std::size_t g = 0; g < dvs.size(); ++g) {
    vectors[rp.groups().representatives[g]] = dvs[g].counts;
  }
  out["decomposition_vectors"] = vectors;
  return {out};
}

Result cmd_member(const RelationalPattern& rp, const std::string& word_text,
                  const Globals& g) {
  const Word w = parse_word(word_text, rp.alphabet());
  const auto witness = member(w, rp, g.erasing(), g.guards());
  json out{{"member", witness.has_value()}};
  if (witness) {
    json wj = json::object();
    if (witness->anchoring) {
      wj["anchoring"] = witness->anchoring->positions;
      wj["gaps"] = witness->anchoring->gaps;
    }
    if (witness->coefficients) {
      json coeffs = json::object();
      const auto& reps = rp.groups().representatives;
      for (std::size_t k = 0; k < witness->coefficients->size(); ++k) {
        coeffs[reps[k]] = (*witness->coefficients)[k];
      }
      wj["coefficients"] = coeffs;
    }
    wj["substitution"] = substitution_json(witness->substitution);
    out["witness"] = wj;
  }
  return {out};
}

Result cmd_enumerate(const RelationalPattern& rp, const std::string& group,
                     std::size_t z, std::size_t samples, bool exclude_zero,
                     const Globals& g) {
  const GroupId id = rp.groups().group(group);
  const ContentMode content = samples > 0 ? ContentMode::sampled(samples, g.seed)
                                          : ContentMode::all(g.cap);
  const auto generated = enumerate_single_group_lz(
      rp, id, LengthBound{z, g.erasing()}, content, !exclude_zero);
  std::vector<Word> words;
  for (const auto& gw : generated) words.push_back(gw.word);
  std::sort(words.begin(), words.end(), ShortLex{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return {json{{"group", rp.groups().representatives[id]},
               {"z", z},
               {"words", words},
               {"count", words.size()}}};
}

Result cmd_normalize(const RelationalPattern& rp, const std::string& reading) {
  const auto r = reading == "all-others" ? EliminationReading::all_others
                                         : EliminationReading::subset;
  const auto report = normal_form_with_report(rp, r);
  json removed = json::array();
  for (const auto& g : report.removed) {
    removed.push_back({{"representative", g.representative},
                       {"members", g.members},
                       {"decomposition", g.decomposition},
                       {"coefficients", g.coefficients}});
  }
  return {json{{"pattern", report.result.pattern().to_string()},
               {"pairs", pairs_json(report.result.relation())},
               {"removed", removed},
               {"text", serialize_pattern_file(report.result)}}};
}

Result cmd_charset(const RelationalPattern& rp, const std::string& mode,
                   const Globals& g) {
  LabeledSample sample;
  if (mode == "s2") {
    sample = gen_s2_nonerasing(rp, ContentMode::all(g.cap));
  } else if (mode == "seps1") {
    sample = gen_seps(rp, 1, ContentMode::all(g.cap));
  } else if (mode == "seps2") {
    sample = gen_seps(rp, 2, ContentMode::all(g.cap));
  } else if (mode == "sigma3-witness") {
    sample = witness_set_sigma3(rp);
  } else {
    sample = witness_set_binary_congruous(rp);
  }
  return {json{{"generator", mode}, {"words", sample.words()}}};
}

Result cmd_equiv(const RelationalPattern& a, const RelationalPattern& b,
                 const std::string& method, const Globals& g) {
  EquivOptions options;
  options.method = *equiv_method_from_string(method);
  options.erasing = g.erasing();
  options.slice_bound = g.max_len;
  options.cap = g.cap;
  options.seed = g.seed;
  options.guards = g.guards();
  const auto v = decide_equiv(a, b, options);
  return {verdict_json(v), v.decision == Decision::inapplicable ? precondition : ok};
}

Result cmd_include(const RelationalPattern& a, const RelationalPattern& b,
                   const Globals& g) {
  return {verdict_json(decide_inclusion_congruous(a, b, g.cap))};
}

Result cmd_classify(const RelationalPattern& a,
                    const std::optional<RelationalPattern>& b) {
  json out{{"relation", to_string(a.kind())}, {"groups", a.groups().size()}};
  if (a.kind() == RelationKind::len) {
    const auto p23 = is_p23(a);
    out["p23"] = p23.holds;
    if (!p23.holds) out["p23_violations"] = p23.violations;
  }
  if (a.alphabet().size() == 2) {
    out["forbidden_blocks"] = forbidden_json(forbidden_block_shapes(a, true));
  }
  if (b) {
    out["congruous"] = are_congruous(a.pattern(), b->pattern());
    if (a.alphabet().size() == 2 && b->alphabet() == a.alphabet() &&
        a.kind() == RelationKind::len && b->kind() == RelationKind::len) {
      const auto r = classify_incongruous_pair(a, *b);
      out["first_in_p23"] = r.first_in_p23;
      out["second_in_p23"] = r.second_in_p23;
      out["forbidden_first"] = forbidden_json(r.forbidden_first);
      out["forbidden_second"] = forbidden_json(r.forbidden_second);
      out["seps2_premises"] = r.seps2_premises;
      out["recommended_method"] = r.recommended_method;
      if (r.conjugates) {
        const auto& c = *r.conjugates;
        out["telltale_conjugates"] = {{"left", c.left.to_string()},
                                      {"right", c.right.to_string()},
                                      {"left_in_first", c.left_in_first},
                                      {"n", c.n},
                                      {"m", c.m}};
      }
    }
  }
  return {out};
}

Result cmd_anti_telltale(const std::vector<std::string>& word_texts,
                         const std::string& decompositions,
                         const std::string& alphabet_text, std::size_t bound,
                         const Globals& g) {
  const auto alphabet = Alphabet::from_string(alphabet_text);
  std::vector<Word> T;
  for (const auto& w : word_texts) T.push_back(parse_word(w, alphabet));
  std::optional<std::vector<Decomposition>> decs;
  if (!decompositions.empty()) decs = parse_decompositions(decompositions);
  const auto at = anti_telltale(T, decs, alphabet);

  json witnesses = json::array();
  for (std::size_t i = 0; i < T.size(); ++i) {
    witnesses.push_back({{"word", T[i]}, {"substitution", substitution_json(at.witnesses[i])}});
  }
  json morphism = json::object();
  for (const auto& [base, img] : at.phi.images) morphism[base] = to_string(img);
  json decs_json = json::array();
  for (const auto& d : at.decompositions) decs_json.push_back({d.v1, d.v2, d.v3});
  json out{{"pattern", at.pattern.pattern().to_string()},
           {"signed_pattern", at.signed_pattern.to_string()},
           {"pairs", pairs_json(at.pattern.relation())},
           {"witnesses", witnesses},
           {"morphism", morphism},
           {"decompositions", decs_json},
           {"first_case", at.first_case}};
  const auto source = triple_palindrome_pattern(alphabet);
  if (auto pw = properness_witness(source, at.pattern, bound, g.guards())) {
    out["properness_witness"] = *pw;
  }
  return {out};
}

Result cmd_morphism(const std::string& source_text, const std::string& target_text,
                    const Globals& g) {
  const auto source = parse_signed_pattern(source_text);
  const auto target = parse_signed_pattern(target_text);
  const auto m = morphism_search(source, target, g.guards());
  json out{{"found", m.has_value()}};
  if (m) {
    json images = json::object();
    for (const auto& [base, img] : m->images) images[base] = to_string(img);
    out["morphism"] = images;
  }
  return {out};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidPattern:
    case ErrorKind::DuplicateVariable:
    case ErrorKind::UnknownSymbolInPairs:
    case ErrorKind::NotReversalFriendly:
    case ErrorKind::UnknownGroup:
      return parse_error;
    case ErrorKind::GroupTooLarge:
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::WitnessNotFoundWithinBound:
      return budget;
    case ErrorKind::WrongKind:
    case ErrorKind::NonBinaryAlphabet:
    case ErrorKind::AlphabetTooSmall:
    case ErrorKind::NotP23:
    case ErrorKind::UnambiguityCheckFailed:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotTerminalFree:
    case ErrorKind::NotRepresentable:
    case ErrorKind::NotAMember:
    case ErrorKind::InvalidDecomposition:
    case ErrorKind::EmptyConstruction:
      return precondition;
    default:
      return failure;
  }
}

void print_plain(const json& body, std::ostream& out) {
  for (const auto& [key, value] : body.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

}  // namespace

SignedPattern parse_signed_pattern(std::string_view text) {
  SignedPattern sp;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);
    auto o = Orientation::plain;
    if (token.size() > 4 && token.substr(token.size() - 4) == "^rev") {
      o = Orientation::reversed;
      token.remove_suffix(4);
    }
    for (std::size_t k = 0; k < token.size(); ++k) {
      const char c = token[k];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError(1, start + k + 1, "invalid character in '" + std::string(token) + "'");
      }
    }
    sp.items.push_back(SignedSymbol::var(std::string(token), o));
  }
  if (sp.items.empty()) throw ParseError(1, 1, "empty signed pattern");
  return sp;
}

std::vector<Decomposition> parse_decompositions(std::string_view text) {
  std::vector<Decomposition> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';')) ++i;
  };
  auto expect = [&](char c) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != c) {
      throw ParseError(1, i + 1, std::string("expected '") + c + "'");
    }
    ++i;
  };
  auto number = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(1, i + 1, "expected a number");
    return static_cast<std::size_t>(std::stoul(std::string(text.substr(start, i - start))));
  };
  skip();
  while (i < text.size()) {
    expect('(');
    Decomposition d;
    d.v1 = number();
    expect(',');
    d.v2 = number();
    expect(',');
    d.v3 = number();
    expect(')');
    out.push_back(d);
    skip();
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relational pattern languages: membership, normal forms, samples and deciders", "relpat"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--non-erasing", g.non_erasing, "Variables may not map to the empty word");
  app.add_option("--max-len", g.max_len, "Slice bound L")->capture_default_str();
  app.add_option("--cap", g.cap, "Enumeration cap")->capture_default_str();
  app.add_option("--var-guard", g.var_guard, "Unifier limit on groups")->capture_default_str();
  app.add_option("--word-guard", g.word_guard, "Unifier limit on word length")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled content")->capture_default_str();
  app.add_flag("--plain{true},--json{false}", g.plain, "Output format (JSON by default)");

  std::string file_a;
  std::string file_b;
  std::string word;
  std::string group;
  std::size_t z = 1;
  std::size_t samples = 0;
  bool exclude_zero = false;
  std::string reading = "subset";
  std::string mode = "seps1";
  std::string method = "auto";
  std::vector<std::string> words;
  std::string decompositions;
  std::string alphabet = "ab";
  std::size_t bound = 4;
  std::string source;
  std::string target;

  auto* parse = app.add_subcommand("parse", "Parse a pattern file and show its structure");
  parse->add_option("file", file_a)->required();

  auto* mem = app.add_subcommand("member", "Decide membership of a word");
  mem->add_option("file", file_a)->required();
  mem->add_option("--word", word, "Word in exponent notation, e.g. a^2ab")->required();

  auto* en = app.add_subcommand("enumerate", "Single-group l_z substitution words");
  en->add_option("file", file_a)->required();
  en->add_option("--group", group, "Any variable of the group")->required();
  en->add_option("--z", z, "Length bound")->capture_default_str();
  en->add_option("--samples", samples, "Sample this many contents instead of enumerating");
  en->add_flag("--exclude-zero", exclude_zero, "Skip the length-0 choice");

  auto* norm = app.add_subcommand("normalize", "Equal-length normal form");
  norm->add_option("file", file_a)->required();
  norm->add_option("--reading", reading, "subset or all-others")
      ->check(CLI::IsMember({"subset", "all-others"}))
      ->capture_default_str();

  auto* cs = app.add_subcommand("charset", "Generate a sample set");
  cs->add_option("file", file_a)->required();
  cs->add_option("--mode", mode)
      ->check(CLI::IsMember({"s2", "seps1", "seps2", "sigma3-witness", "p23-witness"}))
      ->capture_default_str();

  auto* eq = app.add_subcommand("equiv", "Decide language equivalence");
  eq->add_option("first", file_a)->required();
  eq->add_option("second", file_b)->required();
  eq->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "sigma3", "binary-p23", "slice"}))
      ->capture_default_str();

  auto* inc = app.add_subcommand("include", "Decide L(first) <= L(second) for congruous pairs");
  inc->add_option("first", file_a)->required();
  inc->add_option("second", file_b)->required();

  auto* cl = app.add_subcommand("classify", "Structural classification");
  cl->add_option("first", file_a)->required();
  cl->add_option("second", file_b);

  auto* at = app.add_subcommand("anti-telltale", "Build a pattern between T and x1 x1^rev x2 x2^rev x3 x3^rev");
  at->add_option("--words", words, "Words of T")->required()->delimiter(',');
  at->add_option("--decompositions", decompositions, "\"(a,b,c);...\" lengths of v1,v2,v3");
  at->add_option("--alphabet", alphabet)->capture_default_str();
  at->add_option("--bound", bound, "Properness search bound")->capture_default_str();

  auto* mo = app.add_subcommand("morphism", "Search a reversal-obedient morphism");
  mo->add_option("--source", source, "Signed pattern, e.g. \"x1 x1^rev\"")->required();
  mo->add_option("--target", target)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    Result r;
    if (*parse) {
      r = cmd_parse(load(file_a));
    } else if (*mem) {
      r = cmd_member(load(file_a), word, g);
    } else if (*en) {
      r = cmd_enumerate(load(file_a), group, z, samples, exclude_zero, g);
    } else if (*norm) {
      r = cmd_normalize(load(file_a), reading);
    } else if (*cs) {
      r = cmd_charset(load(file_a), mode, g);
    } else if (*eq) {
      r = cmd_equiv(load(file_a), load(file_b), method, g);
    } else if (*inc) {
      r = cmd_include(load(file_a), load(file_b), g);
    } else if (*cl) {
      std::optional<RelationalPattern> second;
      if (!file_b.empty()) second = load(file_b);
      r = cmd_classify(load(file_a), second);
    } else if (*at) {
      r = cmd_anti_telltale(words, decompositions, alphabet, bound, g);
    } else {
      r = cmd_morphism(source, target, g);
    }
    if (g.plain) {
      print_plain(r.body, out);
    } else {
      out << r.body.dump() << "\n";
    }
    return r.code;
  } catch (const ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace relpat::cli
