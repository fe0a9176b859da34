#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <iosfwd>
#include <string>

namespace sl2real {

using Int = boost::multiprecision::cpp_int;

/// 2x2 matrix of arbitrary-precision integers, row-major: (a b; c d).
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  bool in_gl2z() const;
  bool in_sl2z() const { return det() == 1; }
  bool is_central() const;  // +-I
  Int max_abs_entry() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 compose(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& m);
Mat2 scaled(const Mat2& m, const Int& k);

/// Exact inverse of a unimodular matrix. Throws NotUnimodular when |det| != 1.
Mat2 inverse(const Mat2& m);

/// m^n for n >= 0; negative n uses the inverse.
Mat2 power(const Mat2& m, long long n);

/// rhs * m * rhs^-1
Mat2 conjugate_by(const Mat2& m, const Mat2& rhs);

namespace gen {
inline Mat2 U(const Int& k = 1) { return {1, k, 0, 1}; }
inline Mat2 V(const Int& k = 1) { return {1, 0, k, 1}; }
inline Mat2 S(const Int& k) { return {1, -k, 0, -1}; }  // involution, S_k*T_l = U^k V^l
inline Mat2 T(const Int& k) { return {1, 0, -k, -1}; }
inline Mat2 diag_flip() { return {1, 0, 0, -1}; }
inline Mat2 swap() { return {0, 1, 1, 0}; }
inline Mat2 e_pi() { return {0, 1, -1, 0}; }
inline Mat2 e_2pi3() { return {0, 1, -1, 1}; }
inline Mat2 P(const Int& n) { return {1, 0, n, 1}; }
}  // namespace gen

enum class RealStructureKind { Diagonal, Exchange };

std::string_view to_string(RealStructureKind kind);

/// J^2 = I and det J = -1.
bool is_real_structure(const Mat2& j);

/// Diagonal iff J = I (mod 2). Throws NotARealStructure.
RealStructureKind real_structure_kind(const Mat2& j);

/// "a,b;c,d"
std::string to_compact(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Floor division for arbitrary signs; den != 0.
Int floor_div(const Int& num, const Int& den);

}  // namespace sl2real
