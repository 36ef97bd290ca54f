#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace nagata {

/// Graded Betti numbers beta_{i,j}. When bounded, entries with i > max_i or
/// j > max_j were not computed and read as unknown rather than zero.
class BettiTable {
 public:
  BettiTable() = default;

  void set(int i, int j, std::int64_t v);
  void add(int i, int j, std::int64_t v);

  /// Value, or nullopt when outside the computed range.
  std::optional<std::int64_t> get(int i, int j) const;
  /// Value, treating unknown as zero. Use only on complete tables.
  std::int64_t at(int i, int j) const;

  bool known(int i, int j) const {
    return (max_i_ < 0 || i <= max_i_) && (max_j_ < 0 || j <= max_j_);
  }
  void bound(int max_i, int max_j) {
    max_i_ = max_i;
    max_j_ = max_j;
  }
  int bound_i() const { return max_i_; }
  int bound_j() const { return max_j_; }
  bool complete() const { return max_i_ < 0 && max_j_ < 0; }

  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  /// Last nonzero column.
  int proj_dim() const;
  /// Last nonzero row, i.e. max j - i over nonzero entries.
  int regularity() const;
  std::int64_t total(int i) const;
  std::int64_t sum() const;

  /// Entries in row r = j - i, columns 0..proj_dim().
  std::map<int, std::int64_t> row(int r) const;

  /// Column i, row j - i layout; "-" for zero and "?" for not computed.
  std::string to_string() const;

  bool operator==(const BettiTable& o) const {
    return entries_ == o.entries_ && max_i_ == o.max_i_ && max_j_ == o.max_j_;
  }

  int codim = -1;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
  int max_i_ = -1;
  int max_j_ = -1;
};

/// beta_{i,j} = beta_{c-i, s-j} for every entry, with s = a + n.
bool check_betti_symmetry(const BettiTable& b, int c, int s);

}  // namespace nagata
