#pragma once

#include "sl2real/mat2.hpp"

#include <string>

namespace sl2real {

/// Exact quadratic irrational (p + sqrt(d)) / q.
///
/// Construction rescales to the form where q divides d - p^2, which keeps
/// the continued-fraction recurrence in integers. d must be a positive
/// non-square and q nonzero.
class Surd {
 public:
  Surd(Int p, Int d, Int q);

  const Int& p() const { return p_; }
  const Int& d() const { return d_; }
  const Int& q() const { return q_; }

  /// Exact floor.
  Int floor() const;
  /// Algebraic conjugate (p - sqrt(d)) / q, returned as (-p + sqrt(d)) / -q.
  Surd conjugate() const;
  /// x > 1 and -1 < conjugate < 0; such a surd has a purely periodic expansion.
  bool is_reduced() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  Int p_, d_, q_;
};

/// Sign of alpha + beta * sqrt(d), d a positive non-square.
int sign_of(const Int& alpha, const Int& beta, const Int& d);

/// Sign of x - num/den (den > 0).
int compare(const Surd& x, const Int& num, const Int& den);

Int isqrt(const Int& n);

}  // namespace sl2real
