#include "sl2real/surd.hpp"

#include "sl2real/errors.hpp"

#include <cmath>

namespace sl2real {

namespace {

int sign(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative " + n.str());
  return boost::multiprecision::sqrt(n);
}

Surd::Surd(Int p, Int d, Int q) : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw Error(ErrorCode::InvalidArgument, "surd with zero denominator");
  if (d_ <= 0) throw Error(ErrorCode::InvalidArgument, "surd radicand must be positive");
  const Int root = isqrt(d_);
  if (root * root == d_) {
    throw Error(ErrorCode::InvalidArgument, "surd radicand " + d_.str() + " is a perfect square");
  }
  if ((d_ - p_ * p_) % q_ != 0) {
    const Int aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
  }
}

Int Surd::floor() const {
  const Int s = isqrt(d_);
  if (q_ > 0) return floor_div(p_ + s, q_);
  return floor_div(-p_ - s - 1, -q_);
}

Surd Surd::conjugate() const { return Surd(-p_, d_, -q_); }

bool Surd::is_reduced() const {
  return q_ > 0 && sign_of(p_ - q_, 1, d_) > 0  // x > 1
         && sign_of(p_, -1, d_) < 0             // conjugate < 0
         && sign_of(p_ + q_, -1, d_) > 0;       // conjugate > -1
}

double Surd::to_double() const {
  const long double num =
      p_.convert_to<long double>() + std::sqrt(d_.convert_to<long double>());
  return static_cast<double>(num / q_.convert_to<long double>());
}

std::string Surd::to_string() const {
  return "(" + p_.str() + "+sqrt(" + d_.str() + "))/" + q_.str();
}

int sign_of(const Int& alpha, const Int& beta, const Int& d) {
  const int sa = sign(alpha);
  const int sb = sign(beta);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return alpha * alpha > beta * beta * d ? sa : sb;
}

int compare(const Surd& x, const Int& num, const Int& den) {
  return sign_of(x.p() * den - num * x.q(), den, x.d()) * sign(x.q());
}

}  // namespace sl2real
