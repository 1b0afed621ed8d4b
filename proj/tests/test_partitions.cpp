#include "doctest.h"

#include <numeric>

#include "nilorb/partition.hpp"

using namespace nilorb;

namespace {

// Independent partition counter (classic recurrence, memoized per call).
long partition_count(int n) {
  std::vector<std::vector<long>> table(static_cast<std::size_t>(n) + 1,
                                       std::vector<long>(static_cast<std::size_t>(n) + 1, -1));
  auto rec = [&](auto&& self, int rest, int maxpart) -> long {
    if (rest == 0) return 1;
    if (maxpart == 0) return 0;
    long& memo = table[static_cast<std::size_t>(rest)][static_cast<std::size_t>(maxpart)];
    if (memo >= 0) return memo;
    long total = 0;
    for (int d = std::min(rest, maxpart); d >= 1; --d) total += self(self, rest - d, d);
    return memo = total;
  };
  return rec(rec, n, n);
}

}  // namespace

TEST_CASE("partition basics and transpose involution") {
  const auto p = Partition::from_parts({5, 3, 3, 1});
  CHECK(p.size() == 12);
  CHECK(p.part_count() == 4);
  CHECK(p.largest_part() == 5);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.transpose().parts_descending() == std::vector<int>{4, 3, 3, 1, 1});
  for (int n = 0; n <= 12; ++n)
    for (const auto& q : enumerate_partitions(n)) CHECK(q.transpose().transpose() == q);
}

TEST_CASE("transpose square sum matches direct computation") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& q : enumerate_partitions(n)) {
      long direct = 0;
      for (int part : q.transpose().parts_descending())
        direct += static_cast<long>(part) * part;
      CHECK(q.transpose_square_sum() == direct);
    }
  }
}

TEST_CASE("enumeration count agrees with the recurrence") {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 0; n <= 15; ++n) {
    CHECK(static_cast<long>(enumerate_partitions(n).size()) == expected[n]);
    CHECK(partition_count(n) == expected[n]);
  }
}

TEST_CASE("parity classes") {
  CHECK(Partition::from_parts({3, 2, 2, 1}).is_symmetric());
  CHECK_FALSE(Partition::from_parts({3, 2, 1}).is_symmetric());
  CHECK(Partition::from_parts({4, 3, 3}).is_skew_symmetric());
  CHECK_FALSE(Partition::from_parts({3, 3, 3}).is_skew_symmetric());
  CHECK(Partition::from_parts({1}).is_trivial());
  CHECK_FALSE(Partition::from_parts({2}).is_trivial());
}

TEST_CASE("fine partition validation and signature") {
  const auto base = Partition::from_parts({3, 2, 2, 1});
  const FinePartition fine(base, FineFlavor::OddOnly, {{3, {1, 0}}, {1, {0, 1}}});
  CHECK(fine.signature() == 0);
  CHECK(fine.split_at(3) == std::pair<int, int>{1, 0});
  CHECK(fine.refines(3));
  CHECK_FALSE(fine.refines(2));
  CHECK_THROWS_AS(FinePartition(base, FineFlavor::OddOnly, {{3, {1, 0}}}), validation_error);
  CHECK_THROWS_AS(FinePartition(base, FineFlavor::OddOnly,
                                {{3, {2, 0}}, {1, {0, 1}}}),
                  validation_error);
  CHECK_THROWS_AS(FinePartition(base, FineFlavor::OddOnly,
                                {{3, {1, 0}}, {1, {0, 1}}, {2, {1, 1}}}),
                  validation_error);
}

TEST_CASE("fine enumeration count is the product of (m_d + 1)") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& base : enumerate_partitions(n)) {
      for (auto flavor : {FineFlavor::All, FineFlavor::OddOnly, FineFlavor::EvenOnly}) {
        long expected = 1;
        for (auto [d, m] : base.multiplicities())
          if (flavor_refines(flavor, d)) expected *= m + 1;
        CHECK(static_cast<long>(enumerate_fine(base, flavor).size()) == expected);
      }
    }
  }
}

TEST_CASE("text round trip") {
  for (const auto& base : enumerate_partitions(8)) {
    CHECK(parse_partition(to_string(base)) == base);
    for (auto flavor : {FineFlavor::All, FineFlavor::OddOnly, FineFlavor::EvenOnly})
      for (const auto& fine : enumerate_fine(base, flavor))
        CHECK(parse_fine_partition(to_string(fine), flavor) == fine);
  }
  CHECK(parse_partition("[5,3,3,1]") == Partition::from_parts({5, 3, 3, 1}));
  const auto fine = parse_fine_partition("[3:(1,0),1:(0,1)]", FineFlavor::OddOnly);
  CHECK(fine.base() == Partition::from_parts({3, 1}));
  CHECK(fine.signature() == 0);
  CHECK_THROWS_AS(parse_partition("[3,0]"), validation_error);
  CHECK_THROWS_AS(parse_partition("3,1"), parse_error);
  CHECK_THROWS_AS(parse_fine_partition("[3:(1,0", FineFlavor::OddOnly), parse_error);
  CHECK_THROWS_AS(parse_fine_partition("[2:(1,0)]", FineFlavor::OddOnly), parse_error);
}

TEST_CASE("descending-lex order is a strict total order on labels") {
  const auto all = enumerate_partitions(9);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) CHECK_FALSE(all[i].precedes(all[j]));
      else CHECK(all[i].precedes(all[j]) != all[j].precedes(all[i]));
    }
}
