#include "bullfree/trigraph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "bullfree/errors.hpp"

namespace bullfree {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

long long parse_integer(std::string_view field, int line) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("expected an integer, got '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace

Trigraph parse_trigraph(std::string_view text) {
  Trigraph t;
  bool have_header = false;
  std::set<std::pair<Vertex, Vertex>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw ParseError("expected header 'n <count>'", line_no);
      }
      const long long n = parse_integer(fields[1], line_no);
      if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", line_no);
      t = Trigraph(static_cast<int>(n));
      have_header = true;
      continue;
    }

    if (fields[0] == "w") {
      if (fields.size() != 3) throw ParseError("expected 'w <vertex> <weight>'", line_no);
      const long long v = parse_integer(fields[1], line_no);
      const long long w = parse_integer(fields[2], line_no);
      if (v < 0 || v >= t.size()) throw ParseError("vertex out of range", line_no);
      if (w < 0) throw ParseError("weights must be non-negative", line_no);
      t.set_weight(static_cast<Vertex>(v), w);
      continue;
    }

    if (fields.size() != 3) throw ParseError("expected '<u> <v> <+1|0|-1>'", line_no);
    const long long u = parse_integer(fields[0], line_no);
    const long long v = parse_integer(fields[1], line_no);
    const long long s = parse_integer(fields[2], line_no);
    if (u < 0 || u >= t.size() || v < 0 || v >= t.size()) {
      throw ParseError("vertex out of range", line_no);
    }
    if (u == v) throw ParseError("a vertex cannot be paired with itself", line_no);
    if (s < -1 || s > 1) throw ParseError("pair value must be +1, 0 or -1", line_no);
    const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)),
                                        static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError("pair listed twice", line_no);
    t.set(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Adjacency>(s));
  }
  if (!have_header) throw ParseError("missing header 'n <count>'");
  return t;
}

Trigraph read_trigraph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trigraph(buffer.str());
}

Trigraph read_trigraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_trigraph(in);
}

void write_trigraph(std::ostream& out, const Trigraph& t) {
  out << "n " << t.size() << '\n';
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = u + 1; v < t.size(); ++v) {
      switch (t.at(u, v)) {
        case Adjacency::strong_edge: out << u << ' ' << v << " +1\n"; break;
        case Adjacency::switchable: out << u << ' ' << v << " 0\n"; break;
        case Adjacency::strong_antiedge: break;
      }
    }
  }
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.weights()[v] != 1) out << "w " << v << ' ' << t.weights()[v] << '\n';
  }
}

std::string format_trigraph(const Trigraph& t) {
  std::ostringstream out;
  write_trigraph(out, t);
  return out.str();
}

void write_trigraph_file(const std::filesystem::path& path, const Trigraph& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_trigraph(out, t);
}

}  // namespace bullfree
