#include "jfrac/translation_kind.hpp"

namespace jfrac {

TranslationKind TranslationKind::q_translation(const Rational& q) {
  if (!(q > 0 && q < 1)) throw InvalidParams("q-translation needs 0 < q < 1");
  return {QTranslation{q}};
}

TranslationKind TranslationKind::non_commutative(const Rational& q) {
  if (!(q > 0 && q < 1)) throw InvalidParams("non-commutative translation needs 0 < q < 1");
  return {NonCommutative{q}};
}

TranslationKind TranslationKind::generalized(std::vector<Rational> c, std::vector<Rational> d) {
  return {Generalized{std::move(c), std::move(d)}};
}

TranslationKind TranslationKind::affine(const Rational& a, const Rational& b, const TranslationKind& inner) {
  if (a == 0) throw InvalidParams("affine translation needs a != 0");
  return {AffineShift{a, b, std::make_shared<const TranslationKind>(inner)}};
}

std::string TranslationKind::name() const {
  struct Visitor {
    std::string operator()(const Classical&) const { return "classical"; }
    std::string operator()(const QTranslation& k) const { return "q-translation(q=" + to_string(k.q) + ")"; }
    std::string operator()(const NonCommutative& k) const { return "non-commutative(q=" + to_string(k.q) + ")"; }
    std::string operator()(const Generalized&) const { return "generalized"; }
    std::string operator()(const AffineShift& k) const {
      return "affine(a=" + to_string(k.a) + ",b=" + to_string(k.b) + "," + k.inner->name() + ")";
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace jfrac
