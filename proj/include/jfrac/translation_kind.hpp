#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "jfrac/scalar.hpp"

namespace jfrac {

struct TranslationKind;

struct Classical {};
struct QTranslation {
  Rational q;
};
// Substitution t -> t + s in the algebra st = q ts.
struct NonCommutative {
  Rational q;
};
// (GT)_s x^m = sum_j c_j s^j d_{m-j} t^{m-j}.
struct Generalized {
  std::vector<Rational> c;
  std::vector<Rational> d;
};
struct AffineShift {
  Rational a;
  Rational b;
  std::shared_ptr<const TranslationKind> inner;
};

struct TranslationKind {
  std::variant<Classical, QTranslation, NonCommutative, Generalized, AffineShift> v;

  static TranslationKind classical() { return {Classical{}}; }
  static TranslationKind q_translation(const Rational& q);
  static TranslationKind non_commutative(const Rational& q);
  static TranslationKind generalized(std::vector<Rational> c, std::vector<Rational> d);
  static TranslationKind affine(const Rational& a, const Rational& b, const TranslationKind& inner);

  std::string name() const;
};

}  // namespace jfrac
