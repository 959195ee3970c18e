#include "relpat/classify.hpp"

#include <algorithm>
#include <set>

namespace relpat {

namespace {

struct Span {
  std::size_t begin;
  std::size_t end;  // one past the last item
};

std::vector<Span> terminal_spans(const Pattern& p) {
  std::vector<Span> spans;
  const auto& items = p.items();
  std::size_t i = 0;
  while (i < items.size()) {
    if (items[i].is_variable()) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < items.size() && items[i].is_terminal()) ++i;
    spans.push_back({begin, i});
  }
  return spans;
}

Pattern slice(const Pattern& p, std::size_t begin, std::size_t end) {
  return Pattern(std::vector<Item>(p.items().begin() + begin,
                                   p.items().begin() + end));
}

// w == s^n (n >= 1)
std::optional<std::size_t> power_of(const Word& w, char s) {
  if (w.empty() || w.find_first_not_of(s) != Word::npos) return std::nullopt;
  return w.size();
}

// w == s^n t^m with n, m >= 1
std::optional<std::pair<std::size_t, std::size_t>> split_two(const Word& w,
                                                             char s, char t) {
  const auto first_t = w.find_first_not_of(s);
  if (first_t == 0 || first_t == Word::npos) return std::nullopt;
  if (w[first_t] != t) return std::nullopt;
  if (w.find_first_not_of(t, first_t) != Word::npos) return std::nullopt;
  return std::make_pair(first_t, w.size() - first_t);
}

std::optional<TelltaleConjugatePair> search_one_way(const Pattern& host_left,
                                                    const Pattern& host_right,
                                                    bool left_in_first) {
  const auto left_blocks = block_decomposition(host_left).terminal_blocks;
  const auto right_blocks = block_decomposition(host_right).terminal_blocks;
  const auto left_spans = terminal_spans(host_left);
  const auto right_spans = terminal_spans(host_right);

  std::set<char> letters;
  for (const auto& b : left_blocks) letters.insert(b.begin(), b.end());
  for (const auto& b : right_blocks) letters.insert(b.begin(), b.end());

  for (std::size_t j = 0; j < left_blocks.size(); ++j) {
    for (std::size_t k = 0; k < right_blocks.size(); ++k) {
      for (std::size_t t = 1; j + t <= left_blocks.size() &&
                              k + t < right_blocks.size();
           ++t) {
        for (char s : letters) {
          for (char u : letters) {
            if (s == u) continue;
            std::vector<std::size_t> n(t), m(t);
            bool ok = true;
            for (std::size_t i = 0; i < t && ok; ++i) {
              auto nm = split_two(left_blocks[j + i], s, u);
              if (!nm) {
                ok = false;
                break;
              }
              n[i] = nm->first;
              m[i] = nm->second;
            }
            if (!ok) continue;
            if (power_of(right_blocks[k], s) != n[0]) continue;
            for (std::size_t i = 1; i < t && ok; ++i) {
              auto mn = split_two(right_blocks[k + i], u, s);
              ok = mn && mn->first == m[i - 1] && mn->second == n[i];
            }
            if (!ok) continue;
            if (power_of(right_blocks[k + t], u) != m[t - 1]) continue;
            if (!conjugate_exponents_ok(n, m)) continue;

            TelltaleConjugatePair pair{
                slice(host_left, left_spans[j].begin,
                      left_spans[j + t - 1].end),
                slice(host_right, right_spans[k].begin,
                      right_spans[k + t].end),
                left_in_first,
                s,
                u,
                n,
                m,
                j,
                k};
            return pair;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

P23Report is_p23(const RelationalPattern& rp) {
  if (rp.kind() != RelationKind::len) {
    throw Error(ErrorKind::WrongKind, "P(2,3) is defined for kind=len");
  }
  P23Report report;
  const auto& blocks = rp.blocks();
  for (std::size_t j = 0; j < blocks.n(); ++j) {
    if (blocks.terminal_blocks[j].size() < 3) {
      report.holds = false;
      report.violations.push_back("terminal block w" + std::to_string(j + 1) +
                                  " = " + blocks.terminal_blocks[j] +
                                  " is shorter than 3");
    }
  }
  const auto dvs = decomposition_vectors(rp);
  for (std::size_t j = 1; j + 1 < blocks.variable_blocks.size(); ++j) {
    for (GroupId g = 0; g < dvs.size(); ++g) {
      if (dvs[g].counts[j] < 2) {
        report.holds = false;
        report.violations.push_back(
            "variable block " + std::to_string(j + 1) + " holds " +
            std::to_string(dvs[g].counts[j]) + " member(s) of group [" +
            rp.groups().representatives[g] + "]");
      }
    }
  }
  return report;
}

std::vector<ForbiddenBlock> forbidden_block_shapes(const RelationalPattern& rp,
                                                   bool include_short) {
  if (rp.alphabet().size() != 2) {
    throw Error(ErrorKind::NonBinaryAlphabet,
                "forbidden block shapes are defined over binary alphabets");
  }
  const std::size_t min_n = include_short ? 0 : 2;
  std::vector<ForbiddenBlock> out;
  const auto& blocks = rp.blocks().terminal_blocks;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const Word& w = blocks[j];
    const std::size_t n = w.size() - 1;
    if (n < min_n) continue;
    const char last = w.back();
    const char first = w.front();
    // s^n t: all but the last letter equal, last differs (n = 0 is "t").
    const bool head_run =
        (n == 0) || (w.find_first_not_of(first) == n && last != first);
    // s t^n: all but the first letter equal, first differs.
    const bool tail_run =
        (n == 0) || (w.find_first_not_of(last, 1) == Word::npos && first != last);
    if (head_run) {
      out.push_back({j, w, std::string(1, first) + "^" + std::to_string(n) +
                               std::string(1, last)});
    } else if (tail_run) {
      out.push_back({j, w, std::string(1, first) + std::string(1, last) + "^" +
                               std::to_string(n)});
    }
  }
  return out;
}

bool are_congruous(const Pattern& p, const Pattern& q) {
  const auto bp = block_decomposition(p);
  const auto bq = block_decomposition(q);
  return bp.terminal_blocks == bq.terminal_blocks &&
         bp.leading_empty() == bq.leading_empty() &&
         bp.trailing_empty() == bq.trailing_empty();
}

bool conjugate_exponents_ok(const std::vector<std::size_t>& n,
                            const std::vector<std::size_t>& m) {
  const std::size_t t = n.size();
  if (t == 0 || m.size() != t) return false;
  for (std::size_t i = 1; i < t; ++i) {
    if (!(n[i] == 1 || (m[i - 1] == 1 && m[i] == 1))) return false;
  }
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (!(m[i] == 1 || (n[i] == 1 && n[i + 1] == 1))) return false;
  }
  return true;
}

std::optional<TelltaleConjugatePair> find_telltale_conjugates(
    const Pattern& p, const Pattern& q) {
  if (auto hit = search_one_way(p, q, true)) return hit;
  return search_one_way(q, p, false);
}

}  // namespace relpat
