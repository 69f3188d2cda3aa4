#include "eralign/graph.hpp"

#include <bit>
#include <cctype>

#include "eralign/rational.hpp"

namespace eralign {

std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t n) {
  if (index >= pair_count(n)) throw ParameterError("pair index out of range");
  std::size_t i = 0;
  std::size_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + index};
}

Graph::Graph(std::size_t n) : n_(n), bits_((pair_count(n) + 63) / 64, 0) {
  if (n > kMaxVertices) throw ParameterError("graphs are limited to 64 vertices");
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t e = 0; e < g.pairs(); ++e) g.set_edge(e, true);
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) {
    if (i == j || i >= n || j >= n) throw ParameterError("edge endpoint out of range");
    g.set_edge(i, j, true);
  }
  return g;
}

void Graph::set_edge(std::size_t index, bool present) {
  const std::uint64_t mask = std::uint64_t{1} << (index & 63U);
  if (present) {
    bits_[index >> 6] |= mask;
  } else {
    bits_[index >> 6] &= ~mask;
  }
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    if (u != v && edge(u, v)) ++d;
  }
  return d;
}

std::vector<std::uint64_t> Graph::adjacency() const {
  std::vector<std::uint64_t> rows(n_, 0);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j, ++e) {
      if (edge(e)) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return rows;
}

std::string Graph::serialize() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "n=" + std::to_string(n_) + ";edges=";
  const std::size_t bytes = (pairs() + 7) / 8;
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned byte = 0;
    for (unsigned k = 0; k < 8; ++k) {
      std::size_t e = b * 8 + k;
      if (e < pairs() && edge(e)) byte |= 1U << k;
    }
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 15U]);
  }
  return out;
}

Graph Graph::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  const auto bad = [&](const char* why) {
    return ParameterError(std::string("malformed graph '") + std::string(text) + "': " + why);
  };
  if (text.substr(0, 2) != "n=") throw bad("expected 'n=' prefix");
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw bad("missing ';'");
  std::string_view n_part = text.substr(2, semi - 2);
  if (n_part.empty()) throw bad("missing vertex count");
  std::size_t n = 0;
  for (char c : n_part) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("vertex count is not a number");
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > kMaxVertices) throw bad("more than 64 vertices");
  }
  std::string_view rest = text.substr(semi + 1);
  if (rest.substr(0, 6) != "edges=") throw bad("expected 'edges='");
  std::string_view hex = rest.substr(6);
  Graph g(n);
  const std::size_t bytes = (g.pairs() + 7) / 8;
  if (hex.size() != 2 * bytes) throw bad("edge bitstring has the wrong length");
  const auto nibble = [&](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw bad("non-hex character");
  };
  for (std::size_t b = 0; b < bytes; ++b) {
    unsigned byte = nibble(hex[2 * b]) << 4 | nibble(hex[2 * b + 1]);
    for (unsigned k = 0; k < 8; ++k) {
      std::size_t e = b * 8 + k;
      bool bit = (byte >> k) & 1U;
      if (e >= g.pairs()) {
        if (bit) throw bad("padding bits must be zero");
      } else {
        g.set_edge(e, bit);
      }
    }
  }
  return g;
}

}  // namespace eralign
