#include "relpat/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <vector>

namespace relpat {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view value, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < value.size()) {
    if (std::isspace(static_cast<unsigned char>(value[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < value.size() && !std::isspace(static_cast<unsigned char>(value[i]))) ++i;
    out.push_back({std::string(value.substr(start, i - start)), column + start});
  }
  return out;
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Expands the exponent grammar. Reports errors at `column` + offset.
Word expand(std::string_view text, const std::optional<Alphabet>& alphabet,
            std::size_t line, std::size_t column) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '^') {
      throw ParseError(line, column + i, "exponent without a preceding symbol");
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(line, column + i, "unexpected whitespace in word");
    }
    if (alphabet && !alphabet->contains(c)) {
      throw ParseError(line, column + i,
                       std::string("symbol '") + c + "' is not in the alphabet");
    }
    ++i;
    std::size_t count = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t digits = i + 1;
      std::size_t end = digits;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == digits) {
        throw ParseError(line, column + i, "expected a number after '^'");
      }
      auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + end, count);
      if (ec != std::errc() || count > (1u << 24)) {
        throw ParseError(line, column + digits, "exponent out of range");
      }
      i = end;
    }
    out.append(count, c);
  }
  return out;
}

bool is_terminal_token(std::string_view token, const Alphabet& alphabet) {
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    if (alphabet.contains(c)) continue;
    if (c == '^' && i > 0 && alphabet.contains(token[i - 1])) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j > 0 && std::isdigit(static_cast<unsigned char>(token[j - 1]))) --j;
      if (j > 0 && token[j - 1] == '^') continue;
    }
    return false;
  }
  return !token.empty();
}

struct PairEntry {
  VariableId first;
  VariableId second;
  std::size_t column;
};

std::vector<PairEntry> parse_pairs(std::string_view value, std::size_t line,
                                   std::size_t column) {
  std::vector<PairEntry> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
  };
  auto read_name = [&] {
    skip_space();
    const std::size_t start = i;
    while (i < value.size() && is_identifier_char(value[i])) ++i;
    if (i == start) throw ParseError(line, column + i, "expected a variable name");
    std::string name(value.substr(start, i - start));
    skip_space();
    return name;
  };
  auto expect = [&](char c) {
    if (i >= value.size() || value[i] != c) {
      throw ParseError(line, column + i, std::string("expected '") + c + "'");
    }
    ++i;
  };
  skip_space();
  while (i < value.size()) {
    const std::size_t at = column + i;
    expect('(');
    auto first = read_name();
    expect(',');
    auto second = read_name();
    expect(')');
    out.push_back({std::move(first), std::move(second), at});
    skip_space();
  }
  return out;
}

}  // namespace

RelationalPattern parse_pattern_file(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line;
    std::size_t column;
  };
  std::map<std::string, Entry> entries;
  static const std::set<std::string> known{"alphabet", "relation", "pattern", "pairs"};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, first + 1, "expected 'key = value'");
    }
    std::string_view key = line.substr(first, eq - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    std::string k(key);
    if (!known.count(k)) {
      throw ParseError(line_no, first + 1, "unknown key '" + k + "'");
    }
    if (entries.count(k)) {
      throw ParseError(line_no, first + 1, "key '" + k + "' given twice");
    }
    entries[k] = {std::string(line.substr(eq + 1)), line_no, eq + 2};
  }

  auto require = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) {
      throw ParseError(line_no, 1, "missing '" + key + "' line");
    }
    return it->second;
  };

  const Entry& alpha_entry = require("alphabet");
  std::vector<char> symbols;
  for (const auto& tok : split_tokens(alpha_entry.value, alpha_entry.column)) {
    for (std::size_t i = 0; i < tok.text.size(); ++i) {
      const char c = tok.text[i];
      if (!std::isalnum(static_cast<unsigned char>(c))) {
        throw ParseError(alpha_entry.line, tok.column + i,
                         std::string("invalid alphabet symbol '") + c + "'");
      }
      if (std::find(symbols.begin(), symbols.end(), c) != symbols.end()) {
        throw ParseError(alpha_entry.line, tok.column + i,
                         std::string("symbol '") + c + "' listed twice");
      }
      symbols.push_back(c);
    }
  }
  if (symbols.empty()) {
    throw ParseError(alpha_entry.line, alpha_entry.column, "empty alphabet");
  }
  Alphabet alphabet(symbols);

  const Entry& rel_entry = require("relation");
  const auto rel_tokens = split_tokens(rel_entry.value, rel_entry.column);
  if (rel_tokens.size() != 1) {
    throw ParseError(rel_entry.line, rel_entry.column, "expected one of eq, rev, len");
  }
  const auto kind = relation_kind_from_string(rel_tokens[0].text);
  if (!kind) {
    throw ParseError(rel_entry.line, rel_tokens[0].column,
                     "unknown relation '" + rel_tokens[0].text + "'");
  }

  const Entry& pat_entry = require("pattern");
  std::vector<Item> items;
  std::set<VariableId> seen;
  for (const auto& tok : split_tokens(pat_entry.value, pat_entry.column)) {
    if (is_terminal_token(tok.text, alphabet)) {
      for (char c : expand(tok.text, alphabet, pat_entry.line, tok.column)) {
        items.push_back(Item::terminal(c));
      }
      continue;
    }
    for (std::size_t i = 0; i < tok.text.size(); ++i) {
      if (!is_identifier_char(tok.text[i])) {
        throw ParseError(pat_entry.line, tok.column + i,
                         "invalid character in variable '" + tok.text + "'");
      }
    }
    if (!seen.insert(tok.text).second) {
      throw ParseError(ErrorKind::DuplicateVariable, pat_entry.line, tok.column,
                       "variable '" + tok.text + "' occurs more than once");
    }
    items.push_back(Item::variable(tok.text));
  }
  if (items.empty()) {
    throw ParseError(pat_entry.line, pat_entry.column, "empty pattern");
  }

  Relation relation{*kind, {}};
  if (auto it = entries.find("pairs"); it != entries.end()) {
    for (auto& p : parse_pairs(it->second.value, it->second.line, it->second.column)) {
      for (const auto* name : {&p.first, &p.second}) {
        if (!seen.count(*name)) {
          throw ParseError(ErrorKind::UnknownSymbolInPairs, it->second.line, p.column,
                           "'" + *name + "' is not a variable of the pattern");
        }
      }
      relation.pairs.emplace_back(std::move(p.first), std::move(p.second));
    }
  }
  return RelationalPattern(std::move(alphabet), Pattern(std::move(items)),
                           std::move(relation));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t run = j - i;
    if (run >= 3) {
      out.push_back(w[i]);
      out += "^" + std::to_string(run);
    } else {
      out.append(run, w[i]);
    }
    i = j;
  }
  return out;
}

std::string serialize_pattern_file(const RelationalPattern& rp) {
  std::string out = "alphabet =";
  for (char c : rp.alphabet().symbols()) {
    out.push_back(' ');
    out.push_back(c);
  }
  out += "\nrelation = ";
  out += to_string(rp.kind());
  out += "\npattern =";
  Word run;
  auto flush = [&] {
    if (!run.empty()) out += " " + format_word(run);
    run.clear();
  };
  for (const auto& item : rp.pattern().items()) {
    if (item.is_terminal()) {
      run.push_back(item.symbol());
    } else {
      flush();
      out += " " + item.name();
    }
  }
  flush();
  out += "\npairs =";
  for (const auto& [v, w] : rp.relation().pairs) out += " (" + v + "," + w + ")";
  out += "\n";
  return out;
}

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return expand(text, alphabet, 1, 1);
}

}  // namespace relpat
