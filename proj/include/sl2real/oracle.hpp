#pragma once

#include "sl2real/mat2.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sl2real::oracle {

/// Primitive basis of an integer solution lattice. Vectors are the entries
/// (x, y, z, w) of an unknown matrix (x y; z w).
struct LatticeBasis {
  std::vector<std::array<Int, 4>> vectors;

  std::size_t rank() const { return vectors.size(); }
  Mat2 combination(const std::vector<Int>& coefficients) const;
};

/// Calls visit for every det -1 involution (x y; z -x) with entries bounded by
/// `bound`, in lexicographic order of (x, y, z). Stops early when visit returns false.
void for_each_involution(long long bound, const std::function<bool(const Mat2&)>& visit);

std::vector<Mat2> enumerate_involutions(long long bound);

/// First (J1, J2) in involution scan order with J1 * J2 = A and J2 a real
/// structure with |entries| <= bound * (max|A| + 1).
std::optional<std::pair<Mat2, Mat2>> brute_force_factor(const Mat2& a, long long bound);

/// Lattice of P with P*A = B*P.
LatticeBasis intertwiner_kernel(const Mat2& a, const Mat2& b);

/// Lattice of Q with Q*A = A^-1*Q. Requires det A = 1.
LatticeBasis integer_kernel(const Mat2& a);

bool lattice_contains(const LatticeBasis& basis, const Mat2& m);

/// Lexicographically least (by entries) P with P*A = B*P, |entries| <= bound
/// and det P among allowed_dets.
std::optional<Mat2> brute_force_intertwiner(const Mat2& a, const Mat2& b, long long bound,
                                            std::vector<int> allowed_dets);

/// Lexicographically least Q with det Q = -1, |entries| <= bound and Q^-1*A*Q = A^-1.
std::optional<Mat2> brute_force_conjugator(const Mat2& a, long long bound);

}  // namespace sl2real::oracle
