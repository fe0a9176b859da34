#include <doctest.h>

#include "sl2real/oracle.hpp"
#include "sl2real/realness.hpp"
#include "support.hpp"

using namespace sl2real;
using namespace sl2real::oracle;

namespace {

// Independent count: scan every 2x2 integer matrix in the box.
std::size_t naive_involution_count(int bound) {
  std::size_t n = 0;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          const Mat2 m{a, b, c, d};
          n += m * m == Mat2::identity() && m.det() == -1;
        }
  return n;
}

bool conjugates_to_inverse(const Mat2& q, const Mat2& a) {
  return q.det() == -1 && q * inverse(a) == a * q;
}

}  // namespace

TEST_CASE("enumerate_involutions") {
  CHECK(enumerate_involutions(1).size() == 12);
  CHECK(enumerate_involutions(0).empty());
  const auto b1 = enumerate_involutions(1);
  const auto b2 = enumerate_involutions(2);
  CHECK(b2.size() == naive_involution_count(2));
  for (const Mat2& j : b1) CHECK(std::find(b2.begin(), b2.end(), j) != b2.end());
  std::size_t previous = 0;
  for (int b = 0; b <= 8; ++b) {
    const auto all = enumerate_involutions(b);
    CHECK(all.size() >= previous);
    previous = all.size();
    for (const Mat2& j : all) CHECK(is_real_structure(j));
  }
  CHECK(enumerate_involutions(4).size() == naive_involution_count(4));
}

TEST_CASE("for_each_involution stops early") {
  int seen = 0;
  for_each_involution(5, [&](const Mat2&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("brute_force_factor") {
  const Mat2 g{2, 1, 1, 1};
  const auto f = brute_force_factor(g, 2);
  REQUIRE(f);
  CHECK(is_real_structure(f->first));
  CHECK(is_real_structure(f->second));
  CHECK(f->first * f->second == g);
  // The factorization from the constructive path is also in range.
  CHECK(Mat2{1, -1, 0, -1} * Mat2{1, 0, -1, -1} == g);

  const auto e = brute_force_factor(gen::e_pi(), 1);
  REQUIRE(e);
  CHECK(e->first * e->second == gen::e_pi());

  CHECK_FALSE(brute_force_factor(Mat2{12, 5, 7, 3}, 50));
}

TEST_CASE("brute_force_conjugator") {
  const Mat2 g{2, 1, 1, 1};
  const auto q = brute_force_conjugator(g, 2);
  REQUIRE(q);
  CHECK(conjugates_to_inverse(*q, g));
  CHECK(q->max_abs_entry() <= 2);
  CHECK(conjugates_to_inverse(Mat2{1, -1, 0, -1}, g));

  CHECK_FALSE(brute_force_conjugator(Mat2{12, 5, 7, 3}, 25));

  const auto i = brute_force_conjugator(Mat2{}, 1);
  REQUIRE(i);
  CHECK(i->det() == -1);
  CHECK(i->max_abs_entry() <= 1);
}

TEST_CASE("integer_kernel") {
  const auto e = integer_kernel(gen::e_pi());
  CHECK(e.rank() == 2);
  CHECK(lattice_contains(e, gen::diag_flip()));
  CHECK(lattice_contains(e, gen::swap()));
  // and nothing else: each basis vector is an integer combination of the two.
  for (const auto& v : e.vectors) {
    CHECK(v[1] == v[2]);
    CHECK(v[3] == -v[0]);
  }

  const auto g = integer_kernel(Mat2{2, 1, 1, 1});
  CHECK(g.rank() == 2);
  CHECK(lattice_contains(g, Mat2{1, -1, 0, -1}));

  const Mat2 h{12, 5, 7, 3};
  const auto k = integer_kernel(h);
  CHECK(k.rank() == 2);
  // No det -1 member with entries <= 25, by direct enumeration of the box.
  for (int x = -25; x <= 25; ++x)
    for (int y = -25; y <= 25; ++y)
      for (int z = -25; z <= 25; ++z)
        for (int w = -25; w <= 25; ++w)
          if (x * w - y * z == -1) {
            const Mat2 m{x, y, z, w};
            if (m * h == inverse(h) * m) FAIL("unexpected conjugator " << m);
          }
}

TEST_CASE("kernel vectors and combinations solve the system") {
  for (int i = 0; i < 200; ++i) {
    const Mat2 a = testing::random_sl_word(8);
    const Mat2 ai = inverse(a);
    const auto basis = integer_kernel(a);
    for (const auto& v : basis.vectors) {
      const Mat2 m{v[0], v[1], v[2], v[3]};
      CHECK(m * a == ai * m);
    }
    std::vector<Int> coeffs;
    for (std::size_t k = 0; k < basis.rank(); ++k) coeffs.emplace_back(testing::uniform(-9, 9));
    const Mat2 m = basis.combination(coeffs);
    CHECK(m * a == ai * m);
    if (!a.is_central() && is_real(a)) CHECK(lattice_contains(basis, factor_real(a).c_plus()));
  }
}

TEST_CASE("intertwiner_kernel") {
  const Mat2 a{2, 1, 1, 1};
  const Mat2 b{1, 1, 1, 2};
  const auto basis = intertwiner_kernel(a, b);
  for (const auto& v : basis.vectors) {
    const Mat2 m{v[0], v[1], v[2], v[3]};
    CHECK(m * a == b * m);
  }
  const auto p = brute_force_intertwiner(a, b, 3, {1});
  REQUIRE(p);
  CHECK(*p * a == b * *p);
  CHECK(p->det() == 1);
  CHECK_FALSE(brute_force_intertwiner(gen::U(), gen::U(-1), 20, {1}));
  CHECK(brute_force_intertwiner(gen::U(), gen::U(-1), 1, {-1}));
}

TEST_CASE("oracle agreement on entries <= 3") {
  for (const Mat2& a : testing::small_sl2(3)) {
    const bool real = is_real(a);
    const auto f = brute_force_factor(a, 50);
    INFO(a);
    CHECK(f.has_value() == real);
    if (f) {
      CHECK(is_real_structure(f->first));
      CHECK(is_real_structure(f->second));
      CHECK(f->first * f->second == a);
    }
    const auto q = brute_force_conjugator(a, 25);
    if (q) {
      CHECK(real);
      CHECK(conjugates_to_inverse(*q, a));
    }
    if (real) CHECK(conjugates_to_inverse(factor_real(a).c_plus(), a));
  }
}
