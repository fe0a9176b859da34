#pragma once

#include "sl2real/cycle.hpp"
#include "sl2real/mat2.hpp"
#include "sl2real/surd.hpp"

#include <vector>

namespace sl2real {

/// Fixed point of z -> (az+b)/(cz+d) belonging to the dominant eigenvalue.
/// Throws NotSL2 / NotHyperbolic.
Surd attracting_fixed_point(const Mat2& a);
Surd repelling_fixed_point(const Mat2& a);

struct CfStep {
  Int digit;
  Surd next;
};

/// One step of the continued fraction: digit = floor(x), next = 1/(x - digit).
CfStep cf_step(const Surd& x);

struct CfExpansion {
  std::vector<Int> preperiod;
  std::vector<Int> period;
  Surd first_reduced;  // the surd at which the purely periodic part starts
};

/// Expands x until it reaches a reduced surd, then records one full period.
/// Throws ReductionOverflow if more than options.cf_cap pre-period steps are needed.
CfExpansion periodic_expansion(const Surd& x, const CycleOptions& options = {});

struct CuttingCycle {
  Cycle cycle;  // exponents match the conjugator: A = sign * R * U^e0 V^e1 ... * R^-1
  int sign;
  Mat2 conjugator;  // in SL(2,Z)
};

/// Cutting period-cycle of a hyperbolic matrix together with a verified
/// conjugator onto the positive word. Throws NotSL2, NotHyperbolic,
/// ReductionOverflow.
CuttingCycle cutting_cycle(const Mat2& a, const CycleOptions& options = {});

/// Unique positive word in U, V with the given product. The input must be
/// nonnegative, unimodular and not the identity; otherwise NotFactorable.
Word greedy_factor(const Mat2& b);

Mat2 word_to_matrix(const Word& w);

/// U^e0 V^e1 ... V^e(2n-1) for the cycle's stored order.
Mat2 cycle_matrix(const Cycle& c);

struct SeriesReport {
  std::vector<Int> cf_period;  // primitive period of the attracting fixed point
  Cycle cycle;
  std::size_t repetition;  // number of copies of cf_period making up the cycle
  bool consistent;
};

SeriesReport series_crosscheck(const Mat2& a, const CycleOptions& options = {});

}  // namespace sl2real
