#include "metriclab/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "metriclab/error.hpp"

namespace metriclab {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6 record truncated", pos);
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
  return c - 63;
}

void encode_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 record", pos);

  long long n = 0;
  if (text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      pos += 2;
      for (int i = 0; i < 6; ++i) n = (n << 6) | decode_byte(text, pos++);
    } else {
      pos += 1;
      for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text, pos++);
    }
  } else {
    n = decode_byte(text, pos++);
  }
  if (n > (1 << 20)) throw ParseError("graph6 order too large to materialise", 0);

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  const std::size_t body = pos;
  if (static_cast<long long>(text.size() - body) < nbytes)
    throw ParseError("graph6 bit section truncated", text.size());
  if (static_cast<long long>(text.size() - body) > nbytes)
    throw ParseError("trailing bytes after graph6 bit section", body + static_cast<std::size_t>(nbytes));

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++bit) {
      std::size_t byte_pos = body + static_cast<std::size_t>(bit / 6);
      int value = decode_byte(text, byte_pos);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // Padding bits must be zero for a canonical record.
  if (nbits % 6 != 0) {
    std::size_t last = body + static_cast<std::size_t>(nbytes - 1);
    int value = decode_byte(text, last);
    int pad = static_cast<int>(6 - nbits % 6);
    if (value & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", last);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  encode_size(out, n);
  int acc = 0;
  int filled = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_index = -1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t offset = line_start;
    line_start = line_end + 1;

    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    offset += static_cast<std::size_t>(t.data() - line.data());

    std::vector<long long> nums;
    bool header = false;
    std::size_t p = 0;
    if (t.front() == 'n' && nums.empty()) {
      header = true;
      p = 1;
    }
    while (p < t.size()) {
      while (p < t.size() && (t[p] == ' ' || t[p] == '\t')) ++p;
      if (p >= t.size()) break;
      long long value = 0;
      auto res = std::from_chars(t.data() + p, t.data() + t.size(), value);
      if (res.ec != std::errc() || value < 0) throw ParseError("expected a nonnegative vertex index", offset + p);
      nums.push_back(value);
      p = static_cast<std::size_t>(res.ptr - t.data());
    }
    if (header) {
      if (nums.size() != 1 || declared >= 0 || !edges.empty())
        throw ParseError("malformed 'n N' header", offset);
      declared = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw ParseError("edge line must hold exactly two indices", offset);
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    max_index = std::max<int>(max_index, static_cast<int>(std::max(nums[0], nums[1])));
  }
  int n = declared >= 0 ? declared : max_index + 1;
  if (max_index >= n) throw ParseError("vertex index exceeds declared order", 0);
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw ParseError("loop edge in edge list", 0);
    g.add_edge(u, v);
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty()) continue;
    out.push_back(parse_graph6(t));
  }
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  auto t = trim(text);
  bool looks_like_edges = t.empty() || t.front() == '#' || t.find_first_of(" \t\n") != std::string_view::npos;
  if (t.substr(0, kHeader.size()) == kHeader) looks_like_edges = false;
  return looks_like_edges ? parse_edge_list(text) : parse_graph6(t);
}

}  // namespace metriclab
