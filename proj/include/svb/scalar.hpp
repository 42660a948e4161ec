#ifndef SVB_SCALAR_HPP
#define SVB_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace svb {

/// Exact rational scalar. Always stored normalized: positive denominator,
/// gcd(|num|, den) = 1. All arithmetic is exact.
class Scalar {
public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(const mpz_class& n) : v_(n) {}

  Scalar(long n, long d) : Scalar(mpz_class(n), mpz_class(d)) {}

  Scalar(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  static Scalar from_mpq(const mpq_class& q) {
    Scalar s;
    s.v_ = q;
    s.v_.canonicalize();
    return s;
  }

  /// Parses "p" or "p/q".
  static Scalar parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Scalar(mpz_class(text));
      return Scalar(mpz_class(text.substr(0, slash)),
                    mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Scalar operator-() const { return from_mpq(-v_); }
  Scalar operator+(const Scalar& o) const { return from_mpq(v_ + o.v_); }
  Scalar operator-(const Scalar& o) const { return from_mpq(v_ - o.v_); }
  Scalar operator*(const Scalar& o) const { return from_mpq(v_ * o.v_); }
  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return from_mpq(v_ / o.v_);
  }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return from_mpq(1 / v_);
  }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }
  bool operator<(const Scalar& o) const { return v_ < o.v_; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& mpq() const { return v_; }

private:
  mpq_class v_;
};

/// Reduced representative with positive denominator.
inline Scalar scalar_normalize(const mpz_class& num, const mpz_class& den) {
  return Scalar(num, den);
}

inline Scalar scalar_normalize(long num, long den) {
  return Scalar(num, den);
}

}  // namespace svb

#endif
