#include "sl2real/mat2.hpp"

#include "sl2real/errors.hpp"

#include <algorithm>
#include <ostream>

namespace sl2real {

bool Mat2::in_gl2z() const {
  const Int dt = det();
  return dt == 1 || dt == -1;
}

bool Mat2::is_central() const {
  return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
}

Int Mat2::max_abs_entry() const {
  return std::max({abs(a), abs(b), abs(c), abs(d)});
}

Mat2 compose(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) { return compose(lhs, rhs); }

Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2 scaled(const Mat2& m, const Int& k) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }

Mat2 inverse(const Mat2& m) {
  const Int dt = m.det();
  if (dt == 1) return {m.d, -m.b, -m.c, m.a};
  if (dt == -1) return {-m.d, m.b, m.c, -m.a};
  throw Error(ErrorCode::NotUnimodular, "determinant of " + to_compact(m) + " is " + dt.str());
}

Mat2 power(const Mat2& m, long long n) {
  Mat2 base = n < 0 ? inverse(m) : m;
  unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  Mat2 result;
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Mat2 conjugate_by(const Mat2& m, const Mat2& rhs) { return rhs * m * inverse(rhs); }

std::string_view to_string(RealStructureKind kind) {
  return kind == RealStructureKind::Diagonal ? "Diagonal" : "Exchange";
}

bool is_real_structure(const Mat2& j) {
  return j.det() == -1 && j * j == Mat2::identity();
}

RealStructureKind real_structure_kind(const Mat2& j) {
  if (!is_real_structure(j)) {
    throw Error(ErrorCode::NotARealStructure, to_compact(j));
  }
  // The two GL(2,Z)-classes of det -1 involutions differ in GL(2, Z/2).
  const bool diagonal_mod2 = (j.b % 2 == 0) && (j.c % 2 == 0);
  return diagonal_mod2 ? RealStructureKind::Diagonal : RealStructureKind::Exchange;
}

std::string to_compact(const Mat2& m) {
  return m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "(" << m.a << " " << m.b << "; " << m.c << " " << m.d << ")";
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;  // truncates toward zero
  Int r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

}  // namespace sl2real
