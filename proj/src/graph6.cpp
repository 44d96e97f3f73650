#include "eqdim/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace eqdim {

namespace {

constexpr uint32_t kMaxOrder = 258047;  // one- and four-byte headers only

uint32_t sextet(std::string_view s, size_t i) {
  if (i >= s.size()) throw std::invalid_argument("graph6: truncated data");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  if (line[0] == ':' || line[0] == ';' || line[0] == '&')
    throw std::invalid_argument("graph6: sparse6/digraph6 not supported");

  size_t pos = 0;
  uint64_t n;
  uint32_t first = sextet(line, pos++);
  if (first < 63) {
    n = first;
  } else {
    // '~' prefix: next three sextets hold an 18-bit order
    uint32_t a = sextet(line, pos++);
    if (a == 63)
      throw std::invalid_argument("graph6: orders above 258047 not supported");
    uint32_t b = sextet(line, pos++);
    uint32_t c = sextet(line, pos++);
    n = (static_cast<uint64_t>(a) << 12) | (b << 6) | c;
  }
  if (n == 0) throw std::invalid_argument("graph6: empty graph header");
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds cap");

  uint64_t nbits = n * (n - 1) / 2;
  uint64_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos < nbytes)
    throw std::invalid_argument("graph6: truncated bit vector");
  if (line.size() - pos > nbytes)
    throw std::invalid_argument("graph6: trailing characters");

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint64_t bit = 0;
  for (uint32_t col = 1; col < n; ++col)
    for (uint32_t row = 0; row < col; ++row, ++bit) {
      uint32_t chunk = sextet(line, pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  // padding bits must be zero
  if (nbits % 6) {
    uint32_t last = sextet(line, pos + nbytes - 1);
    if (last & ((1u << (6 - nbits % 6)) - 1))
      throw std::invalid_argument("graph6: nonzero padding");
  }
  return Graph(static_cast<uint32_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const uint32_t n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds cap");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  uint64_t nbits = static_cast<uint64_t>(n) * (n - 1) / 2;
  std::vector<uint8_t> chunks((nbits + 5) / 6, 0);
  uint64_t bit = 0;
  for (uint32_t col = 1; col < n; ++col)
    for (uint32_t row = 0; row < col; ++row, ++bit)
      if (g.has_edge(row, col)) chunks[bit / 6] |= 1u << (5 - bit % 6);
  for (uint8_t c : chunks) out.push_back(static_cast<char>(c + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<uint64_t, uint64_t>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    uint64_t a, b;
    if (!(ls >> a)) continue;  // blank
    if (!(ls >> b)) throw std::invalid_argument("edge list: expected two numbers per line");
    uint64_t extra;
    if (ls >> extra) throw std::invalid_argument("edge list: expected two numbers per line");
    rows.emplace_back(a, b);
  }
  if (rows.empty()) throw std::invalid_argument("edge list: no data");

  // A first row "n m" is a header when m matches the number of lines after it.
  bool header = rows.size() >= 1 && rows[0].second == rows.size() - 1 &&
                rows[0].first >= 1;
  uint64_t n;
  size_t begin;
  if (header) {
    n = rows[0].first;
    begin = 1;
  } else {
    n = 0;
    for (auto [u, v] : rows) n = std::max({n, u + 1, v + 1});
    begin = 0;
  }
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("edge list: bad order");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t i = begin; i < rows.size(); ++i) {
    auto [u, v] = rows[i];
    if (u >= n || v >= n) throw std::invalid_argument("edge list: endpoint out of range");
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
  }
  return Graph(static_cast<uint32_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind(">>", 0) == 0) continue;  // format banner
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace eqdim
