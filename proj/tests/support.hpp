#pragma once

#include "sl2real/cycle.hpp"
#include "sl2real/farey.hpp"
#include "sl2real/mat2.hpp"

#include <optional>
#include <random>
#include <vector>

namespace sl2real::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2024ULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline int random_sign() { return uniform(0, 1) == 0 ? 1 : -1; }

/// Product of up to max_len generators from {U, V, U^-1, V^-1}.
inline Mat2 random_sl_word(int max_len) {
  static const Mat2 gens[] = {gen::U(), gen::V(), gen::U(-1), gen::V(-1)};
  Mat2 m;
  const int len = uniform(0, max_len);
  for (int i = 0; i < len; ++i) m = m * gens[uniform(0, 3)];
  return m;
}

/// As random_sl_word, with the two reflections diag(1,-1) and (0 1;1 0) added.
inline Mat2 random_gl_word(int max_len) {
  static const Mat2 gens[] = {gen::U(),         gen::V(),         gen::U(-1),
                              gen::V(-1),       gen::diag_flip(), gen::swap()};
  Mat2 m;
  const int len = uniform(0, max_len);
  for (int i = 0; i < len; ++i) m = m * gens[uniform(0, 5)];
  return m;
}

inline Cycle random_cycle(int max_half_len, int max_exponent) {
  const int n = 2 * uniform(1, max_half_len);
  std::vector<Int> exps;
  for (int i = 0; i < n; ++i) exps.emplace_back(uniform(1, max_exponent));
  return Cycle(std::move(exps));
}

/// Random odd-bipalindromic cycle of length <= max_len: two odd palindromes.
inline Cycle random_odd_bipalindromic(int max_len, int max_exponent) {
  auto palindrome = [&](int len) {
    std::vector<Int> p(static_cast<std::size_t>(len));
    for (int i = 0; i <= (len - 1) / 2; ++i) {
      p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(len - 1 - i)] =
          uniform(1, max_exponent);
    }
    return p;
  };
  const int total = 2 * uniform(1, max_len / 2);
  const int first = 2 * uniform(0, total / 2 - 1) + 1;
  std::vector<Int> exps = palindrome(first);
  const std::vector<Int> second = palindrome(total - first);
  exps.insert(exps.end(), second.begin(), second.end());
  return Cycle(rotate_left(exps, static_cast<std::size_t>(uniform(0, total - 1))));
}

inline Mat2 random_hyperbolic(int max_half_len = 4, int max_exponent = 6, int conj_len = 8) {
  const Mat2 r = random_sl_word(conj_len);
  return scaled(r * cycle_matrix(random_cycle(max_half_len, max_exponent)) * inverse(r),
                random_sign());
}

/// All A in SL(2,Z) with |entries| <= bound, excluding +-I.
inline std::vector<Mat2> small_sl2(int bound) {
  std::vector<Mat2> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          const Mat2 m{a, b, c, d};
          if (m.det() == 1 && !m.is_central()) out.push_back(m);
        }
  return out;
}

}  // namespace sl2real::testing

#include "sl2real/errors.hpp"

namespace sl2real::testing {

template <class F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace sl2real::testing
