#include "sl2real/farey.hpp"

#include "sl2real/classify.hpp"
#include "sl2real/errors.hpp"

#include <stdexcept>

namespace sl2real {

namespace {

void require_hyperbolic(const Mat2& a) {
  if (trace_class(a) != ClassTag::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, to_compact(a));
  }
}

// x = digit + 1/x'  <=>  x = (digit 1; 1 0) . x'
Mat2 cf_matrix(const Int& digit) { return {digit, 1, 1, 0}; }

Mat2 letter_power(Letter letter, const Int& k) {
  return letter == Letter::U ? gen::U(k) : gen::V(k);
}

}  // namespace

Surd attracting_fixed_point(const Mat2& a) {
  require_hyperbolic(a);
  // Eigenvector (lambda - d, c) for lambda = (t + s*sqrt(t^2-4))/2, s = sign(t).
  const Int t = a.trace();
  const Int disc = t * t - 4;
  if (t > 0) return Surd(a.a - a.d, disc, 2 * a.c);
  return Surd(a.d - a.a, disc, -2 * a.c);
}

Surd repelling_fixed_point(const Mat2& a) { return attracting_fixed_point(a).conjugate(); }

CfStep cf_step(const Surd& x) {
  Int digit = x.floor();
  // 1/(x - digit) = q (p' + sqrt d) / (d - p'^2) with p' = digit*q - p.
  Int p_next = digit * x.q() - x.p();
  Int q_next = (x.d() - p_next * p_next) / x.q();
  return {std::move(digit), Surd(std::move(p_next), x.d(), std::move(q_next))};
}

CfExpansion periodic_expansion(const Surd& x, const CycleOptions& options) {
  std::vector<Int> preperiod;
  Surd current = x;
  while (!current.is_reduced()) {
    if (preperiod.size() >= options.cf_cap) {
      throw Error(ErrorCode::ReductionOverflow,
                  "continued fraction of " + x.to_string() + " not periodic after " +
                      std::to_string(options.cf_cap) + " steps");
    }
    CfStep step = cf_step(current);
    preperiod.push_back(std::move(step.digit));
    current = std::move(step.next);
  }
  const Surd first_reduced = current;
  std::vector<Int> period;
  do {
    CfStep step = cf_step(current);
    period.push_back(std::move(step.digit));
    current = std::move(step.next);
  } while (!(current == first_reduced));
  return {std::move(preperiod), std::move(period), first_reduced};
}

CuttingCycle cutting_cycle(const Mat2& a, const CycleOptions& options) {
  require_hyperbolic(a);
  const int sign = a.trace() > 0 ? 1 : -1;

  const CfExpansion cf = periodic_expansion(attracting_fixed_point(a), options);
  std::vector<Int> digits = cf.preperiod;
  if (digits.size() % 2 != 0) {
    // Step once more inside the period so that the conjugator has det +1.
    digits.push_back(cf.period.front());
  }
  Mat2 conj;
  for (const auto& digit : digits) conj = conj * cf_matrix(digit);

  const Mat2 reduced = scaled(inverse(conj) * a * conj, sign);
  const Word w = greedy_factor(reduced);

  std::vector<Int> runs = w.exponents();
  Letter first = w.starts_with();
  if (runs.size() % 2 != 0) {
    if (runs.size() == 1) throw std::logic_error("hyperbolic matrix reduced to a single letter");
    // X^e0 ... X^ek: conjugate the last run around to the front.
    Int last = runs.back();
    runs.pop_back();
    conj = conj * letter_power(first, -last);
    runs.front() += last;
  }
  if (first == Letter::V) {
    conj = conj * gen::V(runs.front());
    runs = rotate_left(runs, 1);
  }

  Cycle cycle(std::move(runs));
  if (scaled(conj * cycle_matrix(cycle) * inverse(conj), sign) != a) {
    throw std::logic_error("cutting_cycle reconstruction failed for " + to_compact(a));
  }
  return {std::move(cycle), sign, std::move(conj)};
}

Word greedy_factor(const Mat2& b) {
  if (b.a < 0 || b.b < 0 || b.c < 0 || b.d < 0 || b.det() != 1 || b == Mat2::identity()) {
    throw Error(ErrorCode::NotFactorable, to_compact(b) + " is not a nonidentity positive word");
  }
  std::vector<Int> runs;
  Letter first = Letter::U;
  Letter previous = Letter::U;
  Mat2 rest = b;
  while (rest != Mat2::identity()) {
    Letter letter;
    if (rest.a >= rest.c && rest.b >= rest.d) {
      letter = Letter::U;  // rest = U * (a-c, b-d; c, d)
      rest.a -= rest.c;
      rest.b -= rest.d;
    } else if (rest.c >= rest.a && rest.d >= rest.b) {
      letter = Letter::V;  // rest = V * (a, b; c-a, d-b)
      rest.c -= rest.a;
      rest.d -= rest.b;
    } else {
      throw Error(ErrorCode::NotFactorable, to_compact(b));
    }
    if (runs.empty()) {
      first = letter;
      runs.emplace_back(1);
    } else if (letter == previous) {
      runs.back() += 1;
    } else {
      runs.emplace_back(1);
    }
    previous = letter;
  }
  return Word(std::move(runs), first);
}

Mat2 word_to_matrix(const Word& w) {
  Mat2 out;
  const auto& exps = w.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) out = out * letter_power(w.letter_at(i), exps[i]);
  return out;
}

Mat2 cycle_matrix(const Cycle& c) { return word_to_matrix(c.word()); }

SeriesReport series_crosscheck(const Mat2& a, const CycleOptions& options) {
  const CfExpansion cf = periodic_expansion(attracting_fixed_point(a), options);
  CuttingCycle cut = cutting_cycle(a, options);

  const std::size_t per = cf.period.size();
  const std::size_t len = cut.cycle.size();
  std::size_t repetition = len / per;
  bool consistent = false;
  if (len % per == 0) {
    std::vector<Int> repeated;
    repeated.reserve(len);
    for (std::size_t k = 0; k < repetition; ++k) {
      repeated.insert(repeated.end(), cf.period.begin(), cf.period.end());
    }
    consistent = Cycle(std::move(repeated)) == cut.cycle;
  } else {
    repetition = 0;
  }
  return {cf.period, std::move(cut.cycle), repetition, consistent};
}

}  // namespace sl2real
