#pragma once

#include "sl2real/cycle.hpp"
#include "sl2real/mat2.hpp"

#include <variant>

namespace sl2real {

enum class ClassTag { Central, Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(ClassTag tag);

/// Trace trichotomy (plus +-I). Throws NotSL2.
ClassTag trace_class(const Mat2& a);

struct CentralClass {
  int sign;
  friend bool operator==(const CentralClass&, const CentralClass&) = default;
};
struct EllipticClass {
  int trace;
  friend bool operator==(const EllipticClass&, const EllipticClass&) = default;
};
struct ParabolicClass {
  Int shift;  // n >= 1
  int sign;
  friend bool operator==(const ParabolicClass&, const ParabolicClass&) = default;
};
struct HyperbolicClass {
  Cycle cycle;
  int sign;
  friend bool operator==(const HyperbolicClass&, const HyperbolicClass&) = default;
};

/// Complete GL(2,Z)-conjugacy invariant.
using MatClass = std::variant<CentralClass, EllipticClass, ParabolicClass, HyperbolicClass>;

ClassTag tag_of(const MatClass& cls);

MatClass classify(const Mat2& a, const CycleOptions& options = {});

/// target = sign * conjugator * representative * conjugator^-1, checked on construction.
class CanonicalForm {
 public:
  CanonicalForm(const Mat2& target, Mat2 representative, Mat2 conjugator, int sign);

  const Mat2& representative() const { return representative_; }
  const Mat2& conjugator() const { return conjugator_; }
  int sign() const { return sign_; }

 private:
  Mat2 representative_;
  Mat2 conjugator_;
  int sign_;
};

/// Representative E_pi, E_2pi/3 or -E_2pi/3 by trace 0, 1, -1; sign is always +1.
CanonicalForm elliptic_canonicalize(const Mat2& a);

/// Representative P_n = (1 0; n 1), sign = sign of the trace.
CanonicalForm parabolic_canonicalize(const Mat2& a);

/// The unipotent entry m of sign*R^-1*A*R = (1 0; m 1) for R in SL(2,Z):
/// an SL(2,Z)-conjugacy invariant, with |m| = n.
Int parabolic_signed_shift(const Mat2& a);

}  // namespace sl2real
