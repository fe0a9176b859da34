#include "sl2real/classify.hpp"

#include "sl2real/errors.hpp"
#include "sl2real/farey.hpp"

#include <array>
#include <stdexcept>
#include <tuple>

namespace sl2real {

namespace {

void require_sl2(const Mat2& a) {
  if (!a.in_sl2z()) throw Error(ErrorCode::NotSL2, to_compact(a) + " has det " + a.det().str());
}

// s*a + t*b = g with g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Small conjugators tried when matching a reduced elliptic against its
// representative; the value order puts the identity and diag(1,-1) first.
constexpr std::array<int, 5> kSmallValues = {1, 0, -1, 2, -2};

Mat2 match_small_conjugator(const Mat2& rep, const Mat2& reduced) {
  for (int a : kSmallValues)
    for (int b : kSmallValues)
      for (int c : kSmallValues)
        for (int d : kSmallValues) {
          const Mat2 q{a, b, c, d};
          if (!q.in_gl2z()) continue;
          if (q * rep == reduced * q) return q;
        }
  throw std::logic_error("no small conjugator from " + to_compact(rep) + " to " +
                         to_compact(reduced));
}

struct ParabolicReduction {
  int sign;
  Mat2 conjugator;  // det +1
  Int shift;        // signed unipotent entry
};

ParabolicReduction reduce_parabolic(const Mat2& a) {
  if (trace_class(a) != ClassTag::Parabolic) throw Error(ErrorCode::NotParabolic, to_compact(a));
  const int sign = a.trace() > 0 ? 1 : -1;
  const Mat2 u = scaled(a, sign);

  // Primitive fixed vector (p, q), q >= 0: (a-1, c) up to scale, or (1, 0) at infinity.
  Int p = 1, q = 0;
  if (u.c != 0) {
    const Int num = u.a - u.d;
    const Int den = 2 * u.c;
    const Int g = gcd(num, den);
    p = num / g;
    q = den / g;
    if (q < 0) {
      p = -p;
      q = -q;
    }
  }

  // Bezout completion x*q - y*p = 1, choosing the least nonnegative x (y = 0 when p = 0).
  Int x, y;
  if (p == 0) {
    x = 1;
    y = 0;
  } else {
    auto [g, s, t] = extended_gcd(q, -p);
    x = s;
    y = t;
    const Int ap = abs(p);
    const Int shifted = x - ap * floor_div(x, ap);
    const Int k = (shifted - x) / p;
    x = shifted;
    y += k * q;
  }
  const Mat2 conj{x, p, y, q};
  const Mat2 b = inverse(conj) * u * conj;
  if (b.a != 1 || b.b != 0 || b.d != 1) {
    throw std::logic_error("parabolic reduction failed for " + to_compact(a));
  }
  return {sign, conj, b.c};
}

}  // namespace

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Central: return "Central";
    case ClassTag::Elliptic: return "Elliptic";
    case ClassTag::Parabolic: return "Parabolic";
    case ClassTag::Hyperbolic: return "Hyperbolic";
  }
  return "Unknown";
}

ClassTag trace_class(const Mat2& a) {
  require_sl2(a);
  if (a.is_central()) return ClassTag::Central;
  const Int t = abs(a.trace());
  if (t < 2) return ClassTag::Elliptic;
  if (t == 2) return ClassTag::Parabolic;
  return ClassTag::Hyperbolic;
}

ClassTag tag_of(const MatClass& cls) {
  return std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CentralClass>) return ClassTag::Central;
        else if constexpr (std::is_same_v<T, EllipticClass>) return ClassTag::Elliptic;
        else if constexpr (std::is_same_v<T, ParabolicClass>) return ClassTag::Parabolic;
        else return ClassTag::Hyperbolic;
      },
      cls);
}

MatClass classify(const Mat2& a, const CycleOptions& options) {
  switch (trace_class(a)) {
    case ClassTag::Central:
      return CentralClass{a.a > 0 ? 1 : -1};
    case ClassTag::Elliptic:
      return EllipticClass{a.trace().convert_to<int>()};
    case ClassTag::Parabolic: {
      const CanonicalForm form = parabolic_canonicalize(a);
      return ParabolicClass{form.representative().c, form.sign()};
    }
    case ClassTag::Hyperbolic: {
      CuttingCycle cut = cutting_cycle(a, options);
      return HyperbolicClass{std::move(cut.cycle), cut.sign};
    }
  }
  throw std::logic_error("unreachable");
}

CanonicalForm::CanonicalForm(const Mat2& target, Mat2 representative, Mat2 conjugator, int sign)
    : representative_(std::move(representative)), conjugator_(std::move(conjugator)), sign_(sign) {
  if (!conjugator_.in_gl2z() || (sign_ != 1 && sign_ != -1) ||
      scaled(conjugator_ * representative_ * inverse(conjugator_), sign_) != target) {
    throw std::logic_error("canonical form does not reconstruct " + to_compact(target));
  }
}

CanonicalForm elliptic_canonicalize(const Mat2& a) {
  if (trace_class(a) != ClassTag::Elliptic) throw Error(ErrorCode::NotElliptic, to_compact(a));

  // Move the fixed point z = ((a-d) + i sqrt(4-t^2)) / 2c into the standard
  // fundamental domain; Re z = (a-d)/2c and |z|^2 = -b/c.
  const Mat2 flip{0, -1, 1, 0};
  const Mat2 flip_inv{0, 1, -1, 0};
  Mat2 b = a;
  Mat2 conj;
  for (;;) {
    const Int k = floor_div(b.a - b.d + b.c, 2 * b.c);
    if (k != 0) {
      b = gen::U(-k) * b * gen::U(k);
      conj = conj * gen::U(k);
    }
    const bool inside_unit_circle = b.c > 0 ? (-b.b < b.c) : (-b.b > b.c);
    if (!inside_unit_circle) break;
    b = flip * b * flip_inv;
    conj = conj * flip_inv;
  }

  Mat2 rep;
  const Int t = a.trace();
  if (t == 0) rep = gen::e_pi();
  else if (t == 1) rep = gen::e_2pi3();
  else rep = -gen::e_2pi3();
  return CanonicalForm(a, rep, conj * match_small_conjugator(rep, b), 1);
}

CanonicalForm parabolic_canonicalize(const Mat2& a) {
  ParabolicReduction red = reduce_parabolic(a);
  if (red.shift < 0) {
    red.conjugator = red.conjugator * gen::diag_flip();
    red.shift = -red.shift;
  }
  return CanonicalForm(a, gen::P(red.shift), red.conjugator, red.sign);
}

Int parabolic_signed_shift(const Mat2& a) { return reduce_parabolic(a).shift; }

}  // namespace sl2real
