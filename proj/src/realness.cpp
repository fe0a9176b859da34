#include "sl2real/realness.hpp"

#include "sl2real/classify.hpp"
#include "sl2real/errors.hpp"
#include "sl2real/farey.hpp"
#include "sl2real/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace sl2real {

namespace {

bool is_palindrome(const std::vector<Int>& seq, std::size_t begin, std::size_t len) {
  for (std::size_t i = 0; i < len / 2; ++i) {
    if (seq[begin + i] != seq[begin + len - 1 - i]) return false;
  }
  return true;
}

// Factorizations of the canonical representatives into (left, right) involutions.
std::pair<Mat2, Mat2> elliptic_table(const Mat2& rep) {
  if (rep == gen::e_pi()) return {gen::diag_flip(), gen::swap()};
  if (rep == gen::e_2pi3()) return {Mat2{1, 0, 1, -1}, gen::swap()};
  // -E_2pi/3 is (0 1;1 0)-conjugate to (-1 1;-1 0) = (1 -1;0 -1)(0 1;1 0).
  if (rep == -gen::e_2pi3()) return {Mat2{-1, 0, -1, 1}, gen::swap()};
  throw std::logic_error("unexpected elliptic representative " + to_compact(rep));
}

std::pair<Mat2, Mat2> parabolic_table(const Int& n, int sign) {
  if (sign > 0) return {Mat2{1, 0, n, -1}, gen::diag_flip()};
  return {Mat2{1, 0, n, -1}, Mat2{-1, 0, 0, 1}};
}

RealFactorization from_canonical(const Mat2& a, const CanonicalForm& form,
                                 const std::pair<Mat2, Mat2>& table, int absorbed_sign) {
  const Mat2& q = form.conjugator();
  const Mat2 q_inv = inverse(q);
  return RealFactorization(scaled(q * table.first * q_inv, absorbed_sign),
                           q * table.second * q_inv, a);
}

RealFactorization factor_hyperbolic(const Mat2& a, const CycleOptions& options) {
  const CuttingCycle cut = cutting_cycle(a, options);
  const std::optional<Split> split = is_odd_bipalindromic(cut.cycle);
  if (!split) {
    throw Error(ErrorCode::NotReal, to_compact(a) + " has a cycle that is not odd-bipalindromic");
  }

  // Rotate the word to the split point. The skipped prefix joins the
  // conjugator; an odd offset starts with V, so swap U and V.
  const std::vector<Int>& exps = cut.cycle.exponents();
  Mat2 conj = cut.conjugator;
  for (std::size_t i = 0; i < split->rotation; ++i) {
    conj = conj * (i % 2 == 0 ? gen::U(exps[i]) : gen::V(exps[i]));
  }
  if (split->rotation % 2 != 0) conj = conj * gen::swap();
  const std::vector<Int> rotated = rotate_left(exps, split->rotation);

  // U^a = S_a * diag(1,-1), V^a = diag(1,-1) * T_a, so U^a V^b = S_a T_b.
  Mat2 first, second;
  for (std::size_t j = 0; j < rotated.size(); ++j) {
    const Mat2 factor = (j % 2 == 0) ? gen::S(rotated[j]) : gen::T(rotated[j]);
    if (j < split->first_block_len) first = first * factor;
    else second = second * factor;
  }
  const Mat2 conj_inv = inverse(conj);
  return RealFactorization(scaled(conj * first * conj_inv, cut.sign), conj * second * conj_inv,
                           a);
}

}  // namespace

std::optional<Split> is_odd_bipalindromic(const Cycle& c) {
  const std::size_t n = c.size();
  for (std::size_t r = 0; r < n; ++r) {
    const std::vector<Int> seq = rotate_left(c.exponents(), r);
    for (std::size_t len = 1; len < n; len += 2) {
      if (is_palindrome(seq, 0, len) && is_palindrome(seq, len, n - len)) return Split{r, len};
    }
  }
  return std::nullopt;
}

RealFactorization::RealFactorization(Mat2 c_plus, Mat2 c_minus, const Mat2& target)
    : c_plus_(std::move(c_plus)), c_minus_(std::move(c_minus)) {
  if (!is_real_structure(c_plus_) || !is_real_structure(c_minus_) ||
      c_plus_ * c_minus_ != target) {
    throw std::logic_error("real factorization of " + to_compact(target) + " does not verify");
  }
}

RealFactorization factor_real(const Mat2& a, const CycleOptions& options) {
  switch (trace_class(a)) {
    case ClassTag::Central:
      throw Error(ErrorCode::CentralInput, to_compact(a));
    case ClassTag::Elliptic: {
      const CanonicalForm form = elliptic_canonicalize(a);
      return from_canonical(a, form, elliptic_table(form.representative()), form.sign());
    }
    case ClassTag::Parabolic: {
      const CanonicalForm form = parabolic_canonicalize(a);
      return from_canonical(a, form, parabolic_table(form.representative().c, form.sign()), 1);
    }
    case ClassTag::Hyperbolic:
      return factor_hyperbolic(a, options);
  }
  throw std::logic_error("unreachable");
}

RealFactorization central_factorization(const Mat2& a) {
  if (trace_class(a) != ClassTag::Central) throw Error(ErrorCode::InvalidArgument, to_compact(a));
  return RealFactorization(scaled(gen::diag_flip(), a.a), gen::diag_flip(), a);
}

bool is_real(const Mat2& a, const CycleOptions& options) {
  switch (trace_class(a)) {
    case ClassTag::Central:
    case ClassTag::Elliptic:
    case ClassTag::Parabolic:
      return true;
    case ClassTag::Hyperbolic:
      return is_odd_bipalindromic(cutting_cycle(a, options).cycle).has_value();
  }
  throw std::logic_error("unreachable");
}

bool conjugacy_test(const Mat2& a, const Mat2& b, Group group, const CycleOptions& options) {
  const ClassTag tag = trace_class(a);
  if (tag != trace_class(b)) return false;
  switch (tag) {
    case ClassTag::Central:
      return a == b;
    case ClassTag::Elliptic: {
      if (a.trace() != b.trace()) return false;
      if (group == Group::GL) return true;
      // The centralizer of an elliptic representative lies in SL(2,Z), so
      // the determinant of any conjugator onto it is an SL invariant.
      return elliptic_canonicalize(a).conjugator().det() ==
             elliptic_canonicalize(b).conjugator().det();
    }
    case ClassTag::Parabolic: {
      if (a.trace() != b.trace()) return false;
      if (group == Group::SL) return parabolic_signed_shift(a) == parabolic_signed_shift(b);
      return parabolic_canonicalize(a).representative() ==
             parabolic_canonicalize(b).representative();
    }
    case ClassTag::Hyperbolic: {
      const CuttingCycle ca = cutting_cycle(a, options);
      const CuttingCycle cb = cutting_cycle(b, options);
      if (ca.sign != cb.sign) return false;
      if (group == Group::GL) return ca.cycle == cb.cycle;
      return ca.cycle.equal_up_to_even_rotation(cb.cycle);
    }
  }
  throw std::logic_error("unreachable");
}

WeakRealReport weakly_real_equals_real_check(const Mat2& a, long long bound,
                                             const CycleOptions& options) {
  WeakRealReport report{};
  report.bound = bound;
  report.is_real = is_real(a, options);
  report.witness = oracle::brute_force_conjugator(a, bound);
  if (report.is_real) {
    const RealFactorization f =
        a.is_central() ? central_factorization(a) : factor_real(a, options);
    const Mat2& q = f.c_plus();
    report.c_plus_conjugates = q.det() == -1 && inverse(q) * a * q == inverse(a);
  }
  report.bound_insufficient = report.is_real && !report.witness;
  report.consistent =
      !(report.witness && !report.is_real) && (!report.is_real || report.c_plus_conjugates);
  return report;
}

}  // namespace sl2real
