#include <doctest.h>

#include "sl2real/mat2.hpp"
#include "sl2real/oracle.hpp"
#include "support.hpp"

using namespace sl2real;
using sl2real::testing::error_code_of;

TEST_CASE("compose") {
  CHECK(compose(gen::U(), gen::V()) == Mat2{2, 1, 1, 1});
  const Mat2 a{7, -3, 12, 5};
  CHECK(compose(Mat2::identity(), a) == a);
  CHECK(compose(gen::diag_flip(), gen::swap()) == Mat2{0, 1, -1, 0});
}

TEST_CASE("inverse") {
  CHECK(inverse(Mat2{2, 1, 1, 1}) == Mat2{1, -1, -1, 2});
  CHECK(inverse(gen::diag_flip()) == gen::diag_flip());
  CHECK(error_code_of([] { inverse(Mat2{2, 0, 0, 2}); }) == ErrorCode::NotUnimodular);
}

TEST_CASE("real structures") {
  CHECK(is_real_structure(gen::diag_flip()));
  CHECK(is_real_structure(gen::swap()));
  CHECK_FALSE(is_real_structure(gen::U()));
  CHECK_FALSE(is_real_structure(Mat2{-1, 0, 0, -1}));

  CHECK(real_structure_kind(gen::diag_flip()) == RealStructureKind::Diagonal);
  CHECK(real_structure_kind(gen::swap()) == RealStructureKind::Exchange);
  CHECK(real_structure_kind(Mat2{1, 0, 5, -1}) == RealStructureKind::Exchange);
  CHECK(error_code_of([] { real_structure_kind(gen::U()); }) == ErrorCode::NotARealStructure);
}

TEST_CASE("(1 0;5 -1) is not conjugate to diag(1,-1) within bound 10") {
  const Mat2 j{1, 0, 5, -1};
  CHECK_FALSE(oracle::brute_force_intertwiner(j, gen::diag_flip(), 10, {1, -1}));
  CHECK(oracle::brute_force_intertwiner(j, gen::swap(), 10, {1, -1}));
}

TEST_CASE("mod-2 kind agrees with explicit conjugators for all involutions up to 10") {
  const auto all = oracle::enumerate_involutions(10);
  REQUIRE(all.size() > 100);
  for (const Mat2& j : all) {
    const bool to_diag = oracle::brute_force_intertwiner(j, gen::diag_flip(), 12, {1, -1}).has_value();
    const bool to_swap = oracle::brute_force_intertwiner(j, gen::swap(), 12, {1, -1}).has_value();
    INFO(j);
    CHECK(to_diag != to_swap);
    CHECK(to_diag == (real_structure_kind(j) == RealStructureKind::Diagonal));
  }
}

TEST_CASE("arithmetic properties") {
  for (int i = 0; i < 300; ++i) {
    const Mat2 a = testing::random_gl_word(12);
    CHECK(compose(a, inverse(a)) == Mat2::identity());
    CHECK(inverse(a) * a == Mat2::identity());
    CHECK((-a).det() == a.det());
    CHECK((-a) * (-a) == a * a);
    CHECK(power(a, 3) == a * a * a);
    CHECK(power(a, -2) == inverse(a * a));
  }
}

TEST_CASE("real structures are closed under conjugation and keep their kind") {
  for (int i = 0; i < 300; ++i) {
    const Mat2 j = testing::uniform(0, 1) ? gen::diag_flip() : gen::swap();
    const Mat2 p = testing::random_gl_word(12);
    const Mat2 k = conjugate_by(j, p);
    REQUIRE(is_real_structure(k));
    CHECK(k.trace() == 0);
    CHECK(k.det() == -1);
    CHECK(real_structure_kind(k) == real_structure_kind(j));
  }
}

TEST_CASE("arbitrary precision") {
  const Mat2 big = power(gen::U(), 1) * power(Mat2{2, 1, 1, 1}, 200);
  CHECK(big.det() == 1);
  CHECK(big.max_abs_entry() > Int(1) << 128);
  CHECK(inverse(big) * big == Mat2::identity());
}

TEST_CASE("floor_div") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(6, 3) == 2);
}

TEST_CASE("compact form") {
  CHECK(to_compact(Mat2{15, 4, -11, 3}) == "15,4;-11,3");
}
