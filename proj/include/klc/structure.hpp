#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klc {

/// Three-index table of structure constants: x * y = sum_z c(x, y, z) z.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(int size)
      : size_(size), data_(static_cast<std::size_t>(size) * size * size, 0) {
    if (size < 0) throw std::invalid_argument("StructureTensor: negative size");
  }

  int size() const { return size_; }

  std::int64_t& operator()(int x, int y, int z) { return data_[offset(x, y, z)]; }
  std::int64_t operator()(int x, int y, int z) const { return data_[offset(x, y, z)]; }

  std::int64_t max_entry() const {
    std::int64_t best = 0;
    for (auto v : data_) best = v > best ? v : best;
    return best;
  }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t offset(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * size_ + y) * size_ + z;
  }

  int size_ = 0;
  std::vector<std::int64_t> data_;
};

/// Equivalence classes of a preorder together with the induced partial order.
struct CellOrder {
  /// Cells as sorted index lists, ordered by smallest member.
  std::vector<std::vector<int>> cells;
  /// Cell number of every basis index.
  std::vector<int> cell_of;
  /// leq[i][j] holds when cell i lies below cell j.
  std::vector<std::vector<bool>> leq;

  bool less_equal(int cell_a, int cell_b) const { return leq[cell_a][cell_b]; }
  bool comparable(int cell_a, int cell_b) const {
    return leq[cell_a][cell_b] || leq[cell_b][cell_a];
  }
};

struct CellPartition {
  CellOrder left;
  CellOrder right;
  CellOrder two_sided;
};

}  // namespace klc
