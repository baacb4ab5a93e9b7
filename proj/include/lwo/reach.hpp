#ifndef LWO_REACH_HPP
#define LWO_REACH_HPP

// Dense reachability kernels over small directed graphs given as adjacency
// lists. The parallel versions assume a DAG; the *_reference versions work on
// any graph and are kept for cross-checking and benchmarking.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lwo {

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }
  /// row(dst) |= row(src); returns true if dst changed.
  bool orRow(std::size_t dst, std::size_t src);
  /// row(a) & row(b) has a set bit.
  bool rowsIntersect(std::size_t a, std::size_t b) const;
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using Adjacency = std::vector<std::vector<int>>;

/// Nonempty-path reachability by Warshall's algorithm. Serial; any graph.
BitMatrix reachabilityReference(const Adjacency& succ);

/// Nonempty-path reachability of a DAG. Nodes are grouped by height and each
/// height level is processed in parallel.
BitMatrix reachability(const Adjacency& succ);

/// For each arc succ[v][k], whether another successor of v reaches its head.
/// `reach` must be the nonempty-path reachability of the same DAG.
std::vector<std::vector<bool>> redundantArcs(const Adjacency& succ, const BitMatrix& reach);

/// Direct search per arc, without a precomputed closure.
std::vector<std::vector<bool>> redundantArcsReference(const Adjacency& succ);

/// Height of every node of a DAG (sinks have height 0). Throws lwo::Error on
/// a cycle.
std::vector<int> heights(const Adjacency& succ);

}  // namespace lwo

#endif  // LWO_REACH_HPP
