#include "degex/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "degex/error.hpp"

namespace degex {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

std::string describe_edge(std::size_t index, std::span<const Vertex> edge) {
  std::string s = "edge #" + std::to_string(index) + " {";
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(edge[i]);
  }
  return s + "}";
}

std::uint64_t universe_size(std::uint32_t n, std::uint32_t r) {
  try {
    return binom_u64(n, r);
  } catch (const OverflowError&) {
    throw ValidationError("C(" + std::to_string(n) + ", " + std::to_string(r) +
                          ") exceeds the 64-bit edge-rank space");
  }
}

void check_shape(std::uint32_t n, std::uint32_t r) {
  if (r == 0) throw ValidationError("uniformity r must be at least 1");
  universe_size(n, r);
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t r, std::vector<std::uint64_t> ranks)
    : n_(n), r_(r), universe_(universe_size(n, r)), ranks_(std::move(ranks)) {
  vertices_.resize(ranks_.size() * r_);
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    colex_unrank_into(ranks_[i], std::span<Vertex>(vertices_.data() + i * r_, r_));
  }
  if (universe_ > 0 && universe_ <= kDenseLimit) {
    bits_.assign((universe_ + 63) / 64, 0);
    for (std::uint64_t rank : ranks_) bits_[rank / 64] |= std::uint64_t{1} << (rank % 64);
  }
}

Hypergraph Hypergraph::build(std::uint32_t n, std::uint32_t r, std::span<const VertexList> edges) {
  check_shape(n, r);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(edges.size());
  VertexList sorted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexList& e = edges[i];
    if (e.size() != r) {
      throw ValidationError(describe_edge(i, e) + ": expected " + std::to_string(r) + " vertices, got " +
                            std::to_string(e.size()));
    }
    sorted.assign(e.begin(), e.end());
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      throw ValidationError(describe_edge(i, e) + ": repeated vertex " + std::to_string(*dup));
    }
    if (!sorted.empty() && sorted.back() >= n) {
      throw ValidationError(describe_edge(i, e) + ": vertex " + std::to_string(sorted.back()) +
                            " out of range for n = " + std::to_string(n));
    }
    ranks.push_back(colex_rank_unchecked(sorted));
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return Hypergraph(n, r, std::move(ranks));
}

Hypergraph Hypergraph::from_ranks(std::uint32_t n, std::uint32_t r, std::vector<std::uint64_t> ranks) {
  check_shape(n, r);
  const std::uint64_t universe = universe_size(n, r);
  for (std::uint64_t rank : ranks) {
    if (rank >= universe) {
      throw ValidationError("edge rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                            ", " + std::to_string(r) + ")");
    }
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return Hypergraph(n, r, std::move(ranks));
}

Hypergraph Hypergraph::complete(std::uint32_t n, std::uint32_t r) {
  check_shape(n, r);
  std::vector<std::uint64_t> ranks(universe_size(n, r));
  for (std::uint64_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
  return Hypergraph(n, r, std::move(ranks));
}

bool Hypergraph::contains_rank(std::uint64_t rank) const noexcept {
  if (rank >= universe_) return false;
  if (!bits_.empty()) return (bits_[rank / 64] >> (rank % 64)) & 1U;
  return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

std::optional<Vertex> InducedMap::to_local(Vertex parent) const {
  auto it = std::lower_bound(parent_vertices.begin(), parent_vertices.end(), parent);
  if (it == parent_vertices.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - parent_vertices.begin());
}

std::pair<Hypergraph, InducedMap> induced(const Hypergraph& g, std::span<const Vertex> subset) {
  InducedMap map{VertexList(subset.begin(), subset.end())};
  std::sort(map.parent_vertices.begin(), map.parent_vertices.end());
  if (auto dup = std::adjacent_find(map.parent_vertices.begin(), map.parent_vertices.end());
      dup != map.parent_vertices.end()) {
    throw ValidationError("induced: vertex " + std::to_string(*dup) + " listed twice");
  }
  if (!map.parent_vertices.empty() && map.parent_vertices.back() >= g.n()) {
    throw ValidationError("induced: vertex " + std::to_string(map.parent_vertices.back()) +
                          " out of range for n = " + std::to_string(g.n()));
  }

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.n(), kAbsent);
  for (std::size_t i = 0; i < map.parent_vertices.size(); ++i) {
    local[map.parent_vertices[i]] = static_cast<Vertex>(i);
  }

  const auto m = static_cast<std::uint32_t>(map.parent_vertices.size());
  std::vector<std::uint64_t> ranks;
  VertexList relabeled(g.r());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    bool inside = true;
    for (std::size_t j = 0; j < e.size() && inside; ++j) {
      relabeled[j] = local[e[j]];
      inside = relabeled[j] != kAbsent;
    }
    if (inside) ranks.push_back(colex_rank_unchecked(relabeled));
  }
  // Relabeling is order-preserving, so relabeled edges stay sorted.
  std::sort(ranks.begin(), ranks.end());
  return {Hypergraph::from_ranks(m, g.r(), std::move(ranks)), std::move(map)};
}

namespace {

bool blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_no, "expected a nonnegative integer near '" + std::string(line.substr(i, 16)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  std::optional<std::pair<std::uint32_t, std::uint32_t>> header;
  std::vector<std::uint64_t> ranks;
  VertexList edge;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (blank_or_comment(line)) continue;

    auto numbers = parse_numbers(line, line_no);
    if (!header) {
      if (numbers.size() != 2) throw ParseError(line_no, "header must be '<r> <n>'");
      if (numbers[0] == 0 || numbers[0] > UINT32_MAX || numbers[1] > UINT32_MAX) {
        throw ParseError(line_no, "header values out of range");
      }
      header.emplace(static_cast<std::uint32_t>(numbers[0]), static_cast<std::uint32_t>(numbers[1]));
      try {
        check_shape(header->second, header->first);
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    auto [r, n] = *header;
    if (numbers.size() != r) {
      throw ParseError(line_no, "expected " + std::to_string(r) + " vertices, got " + std::to_string(numbers.size()));
    }
    edge.clear();
    for (std::uint64_t v : numbers) {
      if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
      edge.push_back(static_cast<Vertex>(v));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(line_no, "repeated vertex in edge");
    }
    ranks.push_back(colex_rank_unchecked(edge));
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing '<r> <n>' header");
  return Hypergraph::from_ranks(header->second, header->first, std::move(ranks));
}

std::string serialize_hg(const Hypergraph& g) {
  std::string out = std::to_string(g.r()) + " " + std::to_string(g.n()) + "\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph read_hg_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hg(buf.str());
}

void write_hg_file(const std::filesystem::path& path, const Hypergraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << serialize_hg(g);
}

}  // namespace degex
