#include "jfrac/scalar.hpp"

#include <cctype>
#include <sstream>

namespace jfrac {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = t.substr(epos + 1);
    std::string digits = es;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
    if (!all_digits(digits)) throw InvalidParams("not a rational: '" + s + "'");
    exp10 = std::stol(es);
    t = t.substr(0, epos);
  }
  std::string ip = t, fp;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    ip = t.substr(0, dot);
    fp = t.substr(dot + 1);
  }
  if (ip.empty()) ip = "0";
  if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw InvalidParams("not a rational: '" + s + "'");
  mpz_class num(ip + fp);
  Rational r(num, 1);
  r *= rpow(Rational(10), exp10 - static_cast<long>(fp.size()));
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  std::string p = trim(s.substr(0, slash)), q = trim(s.substr(slash + 1));
  std::string pd = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? p.substr(1) : p;
  if (!all_digits(pd) || !all_digits(q)) throw InvalidParams("not a rational: '" + raw + "'");
  mpz_class den(q);
  if (den == 0) throw InvalidParams("zero denominator: '" + raw + "'");
  mpz_class num(pd);
  if (!p.empty() && p[0] == '-') num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_rational(item));
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational ratio(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational rpow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw DomainError("0 raised to a negative power");
    return rpow(Rational(1) / x, -e);
  }
  Rational r = 1, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

PrecisionContext::PrecisionContext() : PrecisionContext(256, "1e-30") {}

PrecisionContext::PrecisionContext(int bits, const std::string& rel_tol, int max_terms_,
                                   int consecutive_small_)
    : precision_bits(bits), max_terms(max_terms_), consecutive_small(consecutive_small_) {
  if (bits < 64) throw InvalidParams("precision_bits must be >= 64");
  if (max_terms_ < 16) throw InvalidParams("max_terms must be >= 16");
  if (consecutive_small_ < 1) throw InvalidParams("consecutive_small must be >= 1");
  rel_tolerance = BigFloat::parse(rel_tol, bits);
  if (!(rel_tolerance > 0L) || !(rel_tolerance < 1L)) throw InvalidParams("rel_tolerance must lie in (0, 1)");
}

ProductValue q_pochhammer_inf_checked(const BigFloat& a, const BigFloat& q, const PrecisionContext& ctx) {
  if (!(abs(q) < 1L)) throw NonConvergent("(a;q)_inf needs |q| < 1");
  BigFloat eps(1L, ctx.precision_bits);
  mpfr_div_2si(eps.raw(), eps.raw(), ctx.precision_bits, MPFR_RNDN);
  ProductValue out{ctx.num(1), 0, ctx.num(0)};
  BigFloat f = a;
  int small = 0;
  for (int k = 0; k < ctx.max_terms; ++k) {
    if (f.is_zero()) {
      out.factors_used = k;
      return out;
    }
    out.value *= (1L - f);
    if (abs(f) < eps) {
      if (++small >= ctx.consecutive_small) {
        out.factors_used = k + 1;
        // sum_{j>k} |a q^j| <= |a q^k| |q| / (1 - |q|)
        out.tail_bound = abs(f) * abs(q) / (1L - abs(q));
        return out;
      }
    } else {
      small = 0;
    }
    if (out.value.is_zero()) {
      out.factors_used = k + 1;
      return out;
    }
    f *= q;
  }
  throw NonConvergent("(a;q)_inf did not settle within max_terms factors");
}

BigFloat q_pochhammer_inf(const BigFloat& a, const BigFloat& q, const PrecisionContext& ctx) {
  return q_pochhammer_inf_checked(a, q, ctx).value;
}

BigFloat q_pochhammer_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx) {
  if (a == 1) return ctx.num(0);
  return q_pochhammer_inf(ctx.num(a), ctx.num(q), ctx);
}

}  // namespace jfrac
