#include "doctest.h"

#include <algorithm>

#include "nilorb/classical.hpp"

using namespace nilorb;

namespace {

std::vector<long> dim_multiset(const std::vector<OrbitRecord>& recs) {
  std::vector<long> dims;
  for (const auto& r : recs)
    for (int c = 0; c < r.component_count; ++c) dims.push_back(r.dim_value);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_CASE("sl(4,R): labels, dimensions, component counts") {
  const auto recs = enumerate_orbits(sl_r(4));
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].label() == "[4]");
  CHECK(recs[1].label() == "[3,1]");
  CHECK(recs[2].label() == "[2,2]");
  CHECK(recs[3].label() == "[2,1,1]");
  const long dims[] = {12, 10, 8, 6};
  const int comps[] = {2, 1, 2, 1};  // two orbits per label with all parts even
  for (int i = 0; i < 4; ++i) {
    CHECK(recs[i].dim_value == dims[i]);
    CHECK(recs[i].component_count == comps[i]);
  }
  CHECK(total_orbit_count(recs) == 6);
}

TEST_CASE("su(2,1): signature filters the splits") {
  const auto recs = enumerate_orbits(su(2, 1));
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].label() == "[3:(1,0)]");
  CHECK(recs[0].dim_value == 6);
  CHECK(recs[1].dim_value == 4);
  CHECK(recs[2].dim_value == 4);
  for (const auto& r : recs) {
    CHECK(r.component_count == 1);
    REQUIRE(r.fine.has_value());
    CHECK(r.fine->signature() == 1);
  }
}

TEST_CASE("so(3,2): component counts from the mod-4 sign patterns") {
  const auto recs = enumerate_orbits(so(3, 2));
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].label() == "[5:(1,0)]");
  CHECK(recs[0].dim_value == 8);
  CHECK(recs[0].component_count == 2);
  CHECK(recs[3].dim_value == 4);
  CHECK(total_orbit_count(recs) == 7);
}

TEST_CASE("so(p,0): compact form loses nothing to signature but splits are forced") {
  const auto recs = enumerate_orbits(so(5, 0));
  for (const auto& r : recs) {
    REQUIRE(r.fine.has_value());
    for (auto [d, pq] : r.fine->splits()) CHECK(pq.second == 0);
  }
}

TEST_CASE("sp(4,R): skew-symmetric bases only") {
  const auto recs = enumerate_orbits(sp_r(4));
  REQUIRE(recs.size() == 7);  // [4]x2 splits, [2,2]x3, [2,1,1]x2
  for (const auto& r : recs) {
    CHECK(r.partition.is_skew_symmetric());
    CHECK(r.component_count == 1);
  }
  CHECK(dim_multiset(recs) == std::vector<long>{4, 4, 6, 6, 6, 8, 8});
}

TEST_CASE("iso pair so(3,2) / sp(4,R): equal orbit counts and dimension multisets") {
  const auto a = enumerate_orbits(so(3, 2));
  const auto b = enumerate_orbits(sp_r(4));
  CHECK(total_orbit_count(a) == total_orbit_count(b));
  CHECK(dim_multiset(a) == dim_multiset(b));
}

TEST_CASE("quaternionic families") {
  const auto h = enumerate_orbits(sl_h(2));
  REQUIRE(h.size() == 1);
  CHECK(h[0].label() == "[2]");
  CHECK(h[0].dim_value == 8);

  const auto s = enumerate_orbits(sp_h(1, 1));
  REQUIRE(s.size() == 1);
  CHECK(s[0].dim_value == 6);
  CHECK(s[0].fine->signature() == 0);

  const auto u = enumerate_orbits(ustar_h(2));
  REQUIRE(u.size() == 2);  // [2:(1,0)], [2:(0,1)] -- no signature constraint
  CHECK(u[0].dim_value == 2);
  CHECK(u[1].dim_value == 2);
}

TEST_CASE("complex families report complex dimensions") {
  const auto recs = enumerate_orbits(sl_c(3));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].dim_value == 6);
  CHECK(recs[1].dim_value == 4);

  const auto so3 = enumerate_orbits(so_c(3));
  REQUIRE(so3.size() == 1);
  CHECK(so3[0].dim_value == 2);
  // so(3,C) and sl(2,C) are isomorphic; sl(2,C)'s regular orbit has dim 2 too
  CHECK(enumerate_orbits(sl_c(2))[0].dim_value == 2);

  // so(6,C) / sl(4,C): same dimensions, same orbit totals
  CHECK(dim_multiset(enumerate_orbits(so_c(6))) == dim_multiset(enumerate_orbits(sl_c(4))));
}

TEST_CASE("so(n,C) very even labels carry two orbits") {
  bool saw_two = false;
  for (const auto& r : enumerate_orbits(so_c(8))) {
    bool all_even = true;
    for (auto [d, m] : r.partition.multiplicities())
      if (d % 2 != 0 && m > 0) all_even = false;
    CHECK(r.component_count == (all_even ? 2 : 1));
    if (all_even) saw_two = true;
  }
  CHECK(saw_two);
}

TEST_CASE("label validation") {
  CHECK_NOTHROW(validate_label(sl_r(4), Partition::from_parts({3, 1})));
  CHECK_THROWS_AS(validate_label(sl_r(4), Partition::from_parts({3, 2})), validation_error);
  CHECK_THROWS_AS(validate_label(sp_r(4), Partition::from_parts({3, 1})), validation_error);
  const FinePartition good(Partition::from_parts({3}), FineFlavor::All, {{3, {1, 0}}});
  CHECK_NOTHROW(validate_label(su(2, 1), good));
  CHECK_THROWS_AS(validate_label(su(1, 2), good), validation_error);  // signature -1 needed
  CHECK_THROWS_AS(validate_label(sl_r(3), good), validation_error);   // plain labels only
}

TEST_CASE("complexification parents") {
  auto p1 = complex_parent(sl_h(2), Partition::from_parts({2}));
  CHECK(p1.form == sl_c(4));
  CHECK(p1.partition == Partition::from_parts({2, 2}));
  // real orbit dim of sl(2,H) [2] equals the parent's complex orbit dim
  CHECK(orbit_dimension(sl_h(2), Partition::from_parts({2})) ==
        orbit_dimension(p1.form, p1.partition));

  auto p2 = complex_parent(ustar_h(2), Partition::from_parts({2}));
  CHECK(p2.form == so_c(4));
  CHECK(p2.partition == Partition::from_parts({2, 2}));

  auto p3 = complex_parent(so(3, 2), Partition::from_parts({5}));
  CHECK(p3.form == so_c(5));
  CHECK(p3.partition == Partition::from_parts({5}));
}

TEST_CASE("exceptional and invalid inputs are refused") {
  CHECK_THROWS_AS(enumerate_orbits(exceptional("G2(2)")), validation_error);
  CHECK_THROWS_AS(enumerate_orbits(so(2, 2)), validation_error);
  CHECK_NOTHROW(enumerate_orbits(so(2, 2), false));
}

TEST_CASE("signature normalization in enumeration") {
  // su(1,2) and su(2,1) describe the same algebra; enumeration normalizes
  const auto a = enumerate_orbits(su(1, 2));
  const auto b = enumerate_orbits(su(2, 1));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].label() == b[i].label());
}
