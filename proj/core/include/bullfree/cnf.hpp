#pragma once

#include <array>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace bullfree {

/// Signed, 1-based DIMACS literal: +v is x_v, -v its negation.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  /// Occurrences of literal `lit` over all clauses (duplicates inside a clause count).
  int occurrences(Literal lit) const;
  /// Smallest c such that every literal occurs at most c times.
  int sparsity() const;
  /// True when `assignment[v]` (index 1..num_vars) satisfies every clause.
  bool satisfied_by(const std::vector<bool>& assignment) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// DIMACS CNF: `c` comment lines, one `p cnf V C` header, clauses as
/// 0-terminated literal lists (possibly spanning lines), optional trailing
/// `%`. Every clause must have exactly three literals. Throws ParseError.
CnfFormula parse_cnf(std::string_view text);
CnfFormula read_cnf(std::istream& in);
CnfFormula read_cnf_file(const std::string& path);

void write_cnf(std::ostream& out, const CnfFormula& f);

}  // namespace bullfree
