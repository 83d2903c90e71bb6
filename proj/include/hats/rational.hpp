// Exact rational arithmetic on arbitrary-precision integers (GMP).
// Values are always stored canonicalized (lowest terms, positive denominator).

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hats {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }

  // Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  static Rational from_uint(uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Rational(mpq_class(z));
  }
  static Rational ratio(uint64_t num, uint64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    return from_uint(num) / from_uint(den);
  }
  // 2^-e
  static Rational dyadic(unsigned e) {
    mpq_class q(1);
    q /= (mpz_class(1) << e);
    return Rational(q);
  }

  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  std::string str() const {
    return q_.get_den() == 1 ? num_str() : num_str() + "/" + den_str();
  }
  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  // Exact integer extraction; throws unless the value is an integer in range.
  long to_long() const {
    if (q_.get_den() != 1) throw std::domain_error("Rational: not an integer: " + str());
    if (!q_.get_num().fits_slong_p()) throw std::overflow_error("Rational: integer too large: " + str());
    return q_.get_num().get_si();
  }
  uint64_t to_uint64() const {
    if (q_.get_den() != 1 || q_ < 0) throw std::domain_error("Rational: not a nonnegative integer: " + str());
    mpz_class n = q_.get_num();
    uint64_t out = 0;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw std::overflow_error("Rational: integer exceeds 64 bits");
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
  }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_even_integer() const {
    return is_integer() && mpz_even_p(q_.get_num().get_mpz_t());
  }
  double to_double() const { return q_.get_d(); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace hats
