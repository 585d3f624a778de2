#include "doctest.h"

#include <set>

#include "qfock/partition.hpp"
#include "qfock/verify.hpp"

using namespace qfock;

TEST_CASE("partition counts") {
  const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(partitions(-1).empty());
  for (const auto& lam : partitions(6)) CHECK(std::is_sorted(lam.rbegin(), lam.rend()));
}

TEST_CASE("colored partition enumeration agrees with the generating function") {
  for (int colors = 1; colors <= 4; ++colors) {
    const auto counts = colored_partition_counts(colors, 6);
    for (int k = 0; k <= 6; ++k) {
      const auto all = colored_partitions(colors, k);
      CHECK(BigInt(static_cast<long>(all.size())) == counts[k]);
      std::set<ColoredPartition> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
      for (const auto& c : all) CHECK(c.total() == k);
    }
  }
  CHECK(colored_partition_counts(2, 4) == std::vector<BigInt>{1, 2, 5, 10, 20});
}

TEST_CASE("parts stay sorted and totals track edits") {
  ColoredPartition c(3);
  c.add_part(1, 2);
  c.add_part(1, 5);
  c.add_part(1, 2);
  c.add_part(0, 0);
  CHECK(c.parts(1) == Partition{5, 2, 2});
  CHECK(c.total() == 9);
  CHECK(c.length() == 3);
  CHECK(c.multiplicity(1, 2) == 2);
  CHECK(c.remove_part(1, 2));
  CHECK_FALSE(c.remove_part(2, 1));
  CHECK(c.total() == 7);
  CHECK(multiplicities(Partition{3, 3, 1}) == std::vector<std::pair<int, int>>{{3, 2}, {1, 1}});
}

TEST_CASE("text round trip") {
  for (const auto& c : colored_partitions(3, 4)) CHECK(parse_colored_partition(to_string(c), 3) == c);
  ColoredPartition c(3);
  c.add_part(0, 2);
  c.add_part(0, 1);
  c.add_part(2, 1);
  CHECK(to_string(c) == "{1:[2,1], 3:[1]}");
  CHECK(to_string(ColoredPartition(2)) == "{}");
  CHECK(parse_colored_partition(" { 3 : [1] , 1:[1,2] } ", 3) == c);
  CHECK_THROWS_AS(parse_colored_partition("{4:[1]}", 3), ParseError);
  CHECK_THROWS_AS(parse_colored_partition("{1:[0]}", 3), ParseError);
  CHECK_THROWS_AS(parse_colored_partition("{1:[1]", 3), ParseError);
}
