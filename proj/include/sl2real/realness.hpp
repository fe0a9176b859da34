#pragma once

#include "sl2real/cycle.hpp"
#include "sl2real/mat2.hpp"

#include <optional>

namespace sl2real {

/// Rotating the cycle left by `rotation` gives a palindrome of odd length
/// `first_block_len` followed by a second odd palindrome.
struct Split {
  std::size_t rotation;
  std::size_t first_block_len;
  friend bool operator==(const Split&, const Split&) = default;
};

/// Least (rotation, block length) odd/odd palindromic split of the stored order, if any.
std::optional<Split> is_odd_bipalindromic(const Cycle& c);

/// A = c_plus * c_minus with both factors det -1 involutions. The constructor
/// checks all three identities, so an unverified value cannot exist.
class RealFactorization {
 public:
  RealFactorization(Mat2 c_plus, Mat2 c_minus, const Mat2& target);

  const Mat2& c_plus() const { return c_plus_; }
  const Mat2& c_minus() const { return c_minus_; }
  Mat2 product() const { return c_plus_ * c_minus_; }
  RealStructureKind kind_plus() const { return real_structure_kind(c_plus_); }
  RealStructureKind kind_minus() const { return real_structure_kind(c_minus_); }

 private:
  Mat2 c_plus_;
  Mat2 c_minus_;
};

/// Factorization into two linear real structures. Throws NotSL2,
/// CentralInput (for +-I), NotReal (hyperbolic, cycle not odd-bipalindromic).
RealFactorization factor_real(const Mat2& a, const CycleOptions& options = {});

/// +-I = (+-diag(1,-1)) * diag(1,-1).
RealFactorization central_factorization(const Mat2& a);

/// Throws NotSL2.
bool is_real(const Mat2& a, const CycleOptions& options = {});

enum class Group { GL, SL };

/// Conjugacy in GL(2,Z) or SL(2,Z) of two SL(2,Z) matrices. Throws NotSL2.
bool conjugacy_test(const Mat2& a, const Mat2& b, Group group, const CycleOptions& options = {});

struct WeakRealReport {
  bool is_real;
  long long bound;
  std::optional<Mat2> witness;  // oracle's det -1 Q with Q^-1 A Q = A^-1
  bool c_plus_conjugates;       // c_plus of the factorization is itself such a Q
  bool bound_insufficient;      // real, but no witness within the bound
  bool consistent;              // no witness contradicts a non-real verdict
};

WeakRealReport weakly_real_equals_real_check(const Mat2& a, long long bound,
                                             const CycleOptions& options = {});

}  // namespace sl2real
