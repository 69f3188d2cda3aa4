#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eralign {

/// Number of unordered vertex pairs on n vertices.
constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Lexicographic index of {i, j}, i != j, in [0, C(n,2)).
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of `pair_index`.
std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t n);

/// A labeled simple graph on [n], stored as one indicator bit per vertex pair.
class Graph {
 public:
  /// Graphs are limited to 64 vertices so each adjacency row fits one word.
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n() const { return n_; }
  std::size_t pairs() const { return pair_count(n_); }

  bool edge(std::size_t index) const { return (bits_[index >> 6] >> (index & 63U)) & 1U; }
  bool edge(std::size_t i, std::size_t j) const { return edge(pair_index(i, j, n_)); }
  void set_edge(std::size_t index, bool present);
  void set_edge(std::size_t i, std::size_t j, bool present) { set_edge(pair_index(i, j, n_), present); }

  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;

  /// Row masks: bit j of row i is set iff {i, j} is an edge.
  std::vector<std::uint64_t> adjacency() const;

  /// "n=<n>;edges=<hex>" with pair-index bits packed little-endian within bytes.
  std::string serialize() const;
  static Graph parse(std::string_view text);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace eralign
