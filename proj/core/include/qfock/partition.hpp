#pragma once

// Integer partitions and colored partitions (one partition per Dynkin node).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qfock {

using Partition = std::vector<int>;  // weakly decreasing positive parts

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions(int n);

class ColoredPartition {
 public:
  ColoredPartition() = default;
  explicit ColoredPartition(int colors) : parts_(static_cast<std::size_t>(colors)) {}

  int colors() const { return static_cast<int>(parts_.size()); }
  const Partition& parts(int color) const { return parts_[static_cast<std::size_t>(color)]; }
  int total() const { return total_; }
  bool empty() const { return total_ == 0; }
  int length() const;

  /// Inserts one part, keeping the color's parts sorted; zero is ignored.
  void add_part(int color, int part);
  /// Removes one occurrence; returns false if absent.
  bool remove_part(int color, int part);
  int multiplicity(int color, int part) const;
  void set_parts(int color, Partition p);

  friend auto operator<=>(const ColoredPartition&, const ColoredPartition&) = default;
  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  // total_ first so that ordering groups by energy.
  int total_ = 0;
  std::vector<Partition> parts_;
};

/// Every colored partition with the given number of colors and total.
std::vector<ColoredPartition> colored_partitions(int colors, int total);

/// "{1:[2,1], 3:[1]}" with 1-based colors; empty colors omitted; "{}" for the
/// empty partition.
std::string to_string(const ColoredPartition& p);
/// Inverse of to_string; throws ParseError.
ColoredPartition parse_colored_partition(std::string_view text, int colors);

/// Multiplicities m_k of a partition, as (part, count) pairs in decreasing part order.
std::vector<std::pair<int, int>> multiplicities(const Partition& p);

}  // namespace qfock
