#include "jfrac/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "jfrac/errors.hpp"

namespace jfrac {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw InvalidParams("not a decimal number: '" + s + "'");
  return r;
}

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const Rational& o) {
  mpfr_mul_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 1;
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN),
                                           [](char* p) { mpfr_free_str(p); });
  std::string m(s.get());
  std::string out;
  std::size_t start = 0;
  if (m[0] == '-') {
    out = "-";
    start = 1;
  }
  out += m[start];
  out += '.';
  out += m.substr(start + 1);
  out += 'e' + std::to_string(static_cast<long>(e) - 1);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(long a, const BigFloat& b) {
  BigFloat r(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator+(const BigFloat& a, const Rational& b) {
  BigFloat r(a.prec());
  mpfr_add_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const Rational& b) {
  BigFloat r(a.prec());
  mpfr_sub_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const Rational& b) {
  BigFloat r(a.prec());
  mpfr_mul_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const Rational& b) {
  BigFloat r(a.prec());
  mpfr_div_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}
BigFloat operator+(const Rational& a, const BigFloat& b) { return b + a; }
BigFloat operator-(const Rational& a, const BigFloat& b) { return -(b - a); }
BigFloat operator*(const Rational& a, const BigFloat& b) { return b * a; }
BigFloat operator/(const Rational& a, const BigFloat& b) { return BigFloat(a, b.prec()) / b; }

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }
bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define JFRAC_UNARY(name, fn)                  \
  BigFloat name(const BigFloat& x) {           \
    BigFloat r(x.prec());                      \
    fn(r.raw(), x.raw(), MPFR_RNDN);           \
    return r;                                  \
  }
JFRAC_UNARY(abs, mpfr_abs)
JFRAC_UNARY(sqrt, mpfr_sqrt)
JFRAC_UNARY(exp, mpfr_exp)
JFRAC_UNARY(log, mpfr_log)
JFRAC_UNARY(sin, mpfr_sin)
JFRAC_UNARY(cos, mpfr_cos)
JFRAC_UNARY(cot, mpfr_cot)
#undef JFRAC_UNARY

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(wider(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(wider(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat gamma_fn(const BigFloat& x) {
  if (x.is_integer() && x.sign() <= 0) throw GammaPole("Gamma pole at " + x.to_string(20));
  BigFloat r(x.prec());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator+=(long o) {
  re += o;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex& Complex::operator/=(long o) {
  re /= o;
  im /= o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(const Complex& a, const BigFloat& b) { return {a.re * b, a.im * b}; }
Complex operator*(const BigFloat& a, const Complex& b) { return b * a; }
Complex operator*(const Complex& a, const Rational& b) { return {a.re * b, a.im * b}; }

BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }

Complex exp(const Complex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(BigFloat(1L, z.prec())) / pow(z, -n);
  Complex r(BigFloat(1L, z.prec()));
  Complex b = z;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::string to_string(const Complex& z, int digits) {
  std::string im = z.im.to_string(digits);
  if (im[0] != '-') im = "+" + im;
  return z.re.to_string(digits) + im + "i";
}

}  // namespace jfrac
