#include "bullfree/cnf.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

bool parse_int(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

int CnfFormula::occurrences(Literal lit) const {
  int count = 0;
  for (const auto& c : clauses) {
    for (Literal l : c) count += l == lit;
  }
  return count;
}

int CnfFormula::sparsity() const {
  std::map<Literal, int> counts;
  int best = 0;
  for (const auto& c : clauses) {
    for (Literal l : c) best = std::max(best, ++counts[l]);
  }
  return best;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& c : clauses) {
    bool sat = false;
    for (Literal l : c) {
      const int v = l > 0 ? l : -l;
      if (v < static_cast<int>(assignment.size()) && assignment[v] == (l > 0)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_cnf(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long long declared_clauses = 0;
  std::vector<Literal> pending;
  int pending_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  bool stop = false;
  while (pos <= text.size() && !stop) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream tokens{std::string(line)};
    std::string tok;
    if (!(tokens >> tok) || tok == "c" || tok.front() == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (header) throw ParseError("duplicate problem line", line_no);
      std::string fmt, vars, count, extra;
      long long v = 0;
      if (!(tokens >> fmt >> vars >> count) || fmt != "cnf" || !parse_int(vars, v) ||
          !parse_int(count, declared_clauses) || v < 0 || declared_clauses < 0 || (tokens >> extra)) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", line_no);
      }
      if (v > 1'000'000) throw ParseError("variable count too large", line_no);
      f.num_vars = static_cast<int>(v);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' line", line_no);
    do {
      if (tok == "%") {
        stop = true;
        break;
      }
      long long lit = 0;
      if (!parse_int(tok, lit)) throw ParseError("bad literal '" + tok + "'", line_no);
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError("clause has " + std::to_string(pending.size()) + " literals, expected 3",
                           pending.empty() ? line_no : pending_line);
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (lit > f.num_vars || -lit > f.num_vars) {
        throw ParseError("literal " + tok + " exceeds the declared " + std::to_string(f.num_vars) +
                             " variables",
                         line_no);
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(static_cast<Literal>(lit));
    } while (tokens >> tok);
  }
  if (!header) throw ParseError("missing 'p cnf' line", line_no);
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", pending_line);
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     line_no);
  }
  return f;
}

CnfFormula read_cnf(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cnf(buf.str());
}

CnfFormula read_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_cnf(in);
}

void write_cnf(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

}  // namespace bullfree
