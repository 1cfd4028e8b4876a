#ifndef IMTK_INTERVAL_PARTITION_HPP
#define IMTK_INTERVAL_PARTITION_HPP

#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace imtk {

/// A composition of a linearly ordered part into consecutive non-empty
/// blocks.  Collapsing each block realizes iterated identification of
/// consecutive vertices.
class IntervalPartition {
 public:
  explicit IntervalPartition(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("interval partition needs at least one block");
    for (int s : sizes_)
      if (s < 1) throw std::invalid_argument("interval partition blocks must be non-empty");
  }

  int block_count() const { return static_cast<int>(sizes_.size()); }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  std::span<const int> sizes() const { return sizes_; }

  int block_begin(int b) const {
    int off = 0;
    for (int i = 0; i < b; ++i) off += sizes_[static_cast<std::size_t>(i)];
    return off;
  }
  int block_size(int b) const { return sizes_[static_cast<std::size_t>(b)]; }

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  std::vector<int> sizes_;
};

/// Enumerates compositions of n into m non-empty blocks in lexicographic
/// order of cut positions; the lex-first composition is (1,...,1,n-m+1).
/// Yields nothing when m > n.
class CompositionEnumerator {
 public:
  CompositionEnumerator(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw std::invalid_argument("composition of n>=1 into m>=1 blocks");
    if (m_ <= n_) {
      cuts_.resize(static_cast<std::size_t>(m_ - 1));
      for (int i = 0; i < m_ - 1; ++i) cuts_[static_cast<std::size_t>(i)] = i + 1;
      valid_ = true;
    }
  }

  bool valid() const { return valid_; }

  /// Block sizes of the current composition.
  std::vector<int> sizes() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m_));
    int prev = 0;
    for (int c : cuts_) {
      out.push_back(c - prev);
      prev = c;
    }
    out.push_back(n_ - prev);
    return out;
  }

  IntervalPartition partition() const { return IntervalPartition(sizes()); }

  /// Advances to the next composition; false once exhausted.
  bool next() {
    if (!valid_) return false;
    // next (m-1)-combination of cut positions {1..n-1} in lex order
    const int k = m_ - 1;
    int i = k - 1;
    while (i >= 0 && cuts_[static_cast<std::size_t>(i)] == n_ - k + i) --i;
    if (i < 0) {
      valid_ = false;
      return false;
    }
    ++cuts_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cuts_[static_cast<std::size_t>(j)] = cuts_[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  }

 private:
  int n_;
  int m_;
  std::vector<int> cuts_;
  bool valid_ = false;
};

}  // namespace imtk

#endif
