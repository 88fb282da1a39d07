#include <doctest.h>

#include "diffpow/exponent_vector.hpp"

using namespace diffpow;

TEST_CASE("construction validates entries") {
  CHECK_THROWS_AS(ExponentVector({}), DimensionMismatchError);
  CHECK_THROWS_AS(ExponentVector({-1, 2}), OverflowError);
  CHECK_THROWS_AS(ExponentVector({kMaxExponent + 1}), OverflowError);
  CHECK(ExponentVector({0, 0, 0}).is_zero());
  CHECK(ExponentVector::zero(3) == ExponentVector({0, 0, 0}));
  CHECK(ExponentVector::axis(3, 1, 4) == ExponentVector({0, 4, 0}));
}

TEST_CASE("degree, support, divisibility") {
  const ExponentVector v({2, 0, 5});
  CHECK(v.total_degree() == 7);
  CHECK(v.support() == std::vector<int>{0, 2});
  CHECK(v.support_size() == 2);
  CHECK(ExponentVector({1, 0, 3}).divides(v) == false);
  CHECK(ExponentVector({2, 0, 3}).divides(v));
  CHECK(v.divides(v));
}

TEST_CASE("checked arithmetic") {
  const ExponentVector a({kMaxExponent, 1});
  CHECK_THROWS_AS(a + ExponentVector({1, 0}), OverflowError);
  CHECK((ExponentVector({1, 2}) + ExponentVector({3, 4})) == ExponentVector({4, 6}));
  CHECK(component_max(ExponentVector({1, 5}), ExponentVector({4, 2})) ==
        ExponentVector({4, 5}));
  CHECK_THROWS_AS(ExponentVector({2, 2}).scaled(kMaxExponent), OverflowError);
  CHECK(ExponentVector({2, 3}).scaled(3) == ExponentVector({6, 9}));
  CHECK(ExponentVector({1, 2}).minus(ExponentVector({0, 3})) == std::nullopt);
  CHECK(*ExponentVector({4, 3}).minus(ExponentVector({1, 3})) == ExponentVector({3, 0}));
  CHECK_THROWS_AS(require_same_dim(ExponentVector({1}), ExponentVector({1, 2})),
                  DimensionMismatchError);
}

TEST_CASE("squarefree part and lex order") {
  CHECK(ExponentVector({2, 0, 5}).squarefree_part() == ExponentVector({1, 0, 1}));
  CHECK(ExponentVector({1, 1}).is_squarefree());
  CHECK(ExponentVector({0, 9}) < ExponentVector({1, 0}));
  CHECK(ExponentVector({1, 2}) < ExponentVector({1, 3}));
}
