#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relpat/core.hpp"

namespace relpat {

struct P23Report {
  bool holds = true;
  std::vector<std::string> violations;
};

/// Membership in P(2,3): every terminal block has length >= 3 and every
/// interior variable block holds at least two members of every group.
P23Report is_p23(const RelationalPattern& rp);

struct ForbiddenBlock {
  std::size_t index = 0;  // 0-based position among terminal blocks
  Word block;
  std::string shape;      // "s^n t" or "s t^n" with the concrete letters
};

/// Terminal blocks of the form s^n t or s t^n (s != t) over a binary
/// alphabet. The default threshold is n >= 2; `include_short` lowers it to
/// n >= 0, which also flags single letters and two-letter blocks.
std::vector<ForbiddenBlock> forbidden_block_shapes(const RelationalPattern& rp,
                                                   bool include_short = false);

/// Same terminal-block sequence, and end variable blocks empty in the same
/// places.
bool are_congruous(const Pattern& p, const Pattern& q);

/// pi  = s^{n1} t^{m1} X1 s^{n2} t^{m2} ... X_{k-1} s^{nk} t^{mk}
/// pi' = s^{n1} Y1 t^{m1} s^{n2} ... t^{m_{k-1}} s^{nk} Yk t^{mk}
struct TelltaleConjugatePair {
  Pattern left;   // pi
  Pattern right;  // pi'
  /// True when `left` was found in the first argument.
  bool left_in_first = true;
  char s = 'a';
  char t = 'b';
  std::vector<std::size_t> n;
  std::vector<std::size_t> m;
  std::size_t left_block = 0;   // first terminal block of pi in its host
  std::size_t right_block = 0;  // first terminal block of pi' in its host
};

/// True iff the exponents satisfy both conjugacy conditions.
bool conjugate_exponents_ok(const std::vector<std::size_t>& n,
                            const std::vector<std::size_t>& m);

/// Exhaustive search over aligned sub-patterns that start and end with
/// terminals and are bounded by variables (or the pattern ends) in their
/// hosts. Both role assignments and both letter orders are tried.
std::optional<TelltaleConjugatePair> find_telltale_conjugates(
    const Pattern& p, const Pattern& q);

}  // namespace relpat
