#include <doctest.h>

#include "hopftwist/errors.hpp"
#include "hopftwist/group.hpp"
#include "testutil.hpp"

using namespace hopftwist;
using testutil::cyclicGroup;
using testutil::directProduct;

TEST_CASE("valid small groups") {
  Group z2 = Group::fromCayley({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inverse(1) == 1);

  Group klein = testutil::kleinGroup();
  CHECK(klein.order() == 4);
  CHECK(klein.isAbelian());
  for (int i = 0; i < 4; ++i) CHECK(klein.inverse(i) == i);

  Group d4 = testutil::dihedral4Group();
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.isAbelian());
  CHECK(d4.exponent() == 4);
}

TEST_CASE("rejected tables") {
  CHECK_THROWS_WITH_AS(Group::fromCayley({{0, 1}, {1, 1}}),
                       doctest::Contains("not a permutation"), Error);
  CHECK_THROWS_WITH_AS(Group::fromCayley({{1, 0}, {0, 1}}),
                       doctest::Contains("identity"), Error);
  // Latin square with identity that is not associative (smallest such loop)
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(Group::fromCayley(loop), doctest::Contains("associativity"), Error);
}

TEST_CASE("subgroups") {
  Group z4 = cyclicGroup(4);
  SUBCASE("trivial") {
    auto [s, emb] = subgroupFromElements(z4, {0});
    CHECK(s.order() == 1);
    CHECK(emb == std::vector<int>{0});
  }
  SUBCASE("order-2 subgroup of Z4") {
    auto [s, emb] = subgroupFromElements(z4, {0, 2});
    CHECK(s.order() == 2);
    CHECK(emb == std::vector<int>{0, 2});
    CHECK(s.mul(1, 1) == 0);
  }
  SUBCASE("not closed") {
    CHECK_THROWS_WITH_AS(subgroupFromElements(z4, {0, 1}), doctest::Contains("not closed"),
                         Error);
  }
  SUBCASE("must contain identity") {
    CHECK_THROWS_AS(subgroupFromElements(z4, {2}), Error);
  }
}

TEST_CASE("element orders and inverse involution") {
  Group z6 = cyclicGroup(6);
  CHECK(z6.elementOrder(1) == 6);
  CHECK(z6.elementOrder(2) == 3);
  CHECK(z6.elementOrder(3) == 2);
  for (int i = 0; i < 6; ++i) CHECK(z6.inverse(z6.inverse(i)) == i);
}
