#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace jfrac {

using Rational = mpq_class;

// Owning wrapper around mpfr_t. Binary operations round to the larger of
// the two operand precisions; mixed operations with long/Rational use the
// BigFloat operand's precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const Rational& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  // Accepts anything mpfr_set_str understands in base 10, e.g. "1e-30", "0.3".
  static BigFloat parse(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator+=(long o);
  BigFloat& operator-=(long o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);
  BigFloat& operator*=(const Rational& o);

  BigFloat operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Scientific notation with the given number of significant digits;
  // digits = 0 picks enough digits to round-trip the precision.
  std::string to_string(int digits = 0) const;

 private:
  mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator+(const BigFloat& a, long b);
BigFloat operator-(const BigFloat& a, long b);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator/(const BigFloat& a, long b);
BigFloat operator+(long a, const BigFloat& b);
BigFloat operator-(long a, const BigFloat& b);
BigFloat operator*(long a, const BigFloat& b);
BigFloat operator/(long a, const BigFloat& b);
BigFloat operator+(const BigFloat& a, const Rational& b);
BigFloat operator-(const BigFloat& a, const Rational& b);
BigFloat operator*(const BigFloat& a, const Rational& b);
BigFloat operator/(const BigFloat& a, const Rational& b);
BigFloat operator+(const Rational& a, const BigFloat& b);
BigFloat operator-(const Rational& a, const BigFloat& b);
BigFloat operator*(const Rational& a, const BigFloat& b);
BigFloat operator/(const Rational& a, const BigFloat& b);

int compare(const BigFloat& a, const BigFloat& b);
inline bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return compare(a, b) != 0; }
bool operator<(const BigFloat& a, long b);
bool operator>(const BigFloat& a, long b);
bool operator==(const BigFloat& a, long b);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat gamma_fn(const BigFloat& x);
BigFloat pi(mpfr_prec_t prec);
BigFloat max(const BigFloat& a, const BigFloat& b);

// Minimal complex arithmetic over BigFloat (no MPC on this platform).
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  explicit Complex(const BigFloat& r) : re(r), im(0L, r.prec()) {}
  Complex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}

  mpfr_prec_t prec() const { return re.prec(); }
  Complex& operator+=(const Complex& o);
  Complex& operator+=(long o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator/=(long o);
  Complex operator-() const { return {-re, -im}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
Complex operator*(const Complex& a, const BigFloat& b);
Complex operator*(const BigFloat& a, const Complex& b);
Complex operator*(const Complex& a, const Rational& b);
BigFloat abs(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
std::string to_string(const Complex& z, int digits = 0);

}  // namespace jfrac
