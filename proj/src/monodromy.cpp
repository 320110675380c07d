#include "optb/monodromy.hpp"

namespace optb {

MappingClass MappingClass::identity() {
  return MappingClass({}, Word::from_string("x"), Word::from_string("y"));
}

MappingClass token_class(TwistToken t) {
  auto w = [](const char* s) { return Word::from_string(s); };
  switch (t) {
    case TwistToken::R: return MappingClass({t}, w("x"), w("yx"));
    case TwistToken::RInv: return MappingClass({t}, w("x"), w("yX"));
    case TwistToken::L: return MappingClass({t}, w("xy"), w("y"));
    case TwistToken::LInv: return MappingClass({t}, w("xY"), w("y"));
    case TwistToken::Neg: return MappingClass({t}, w("X"), w("Y"));
  }
  throw std::logic_error("token_class: bad token");
}

Word apply(const MappingClass& m, const Word& w) {
  const Word inv_x = invert(m.image_x());
  const Word inv_y = invert(m.image_y());
  std::vector<Letter> raw;
  raw.reserve(w.size() * (m.image_x().size() + m.image_y().size() + 1));
  for (Letter l : w.letters()) {
    const Word& img = l.generator() == Letter::Gen::X
                          ? (l.is_inverse() ? inv_x : m.image_x())
                          : (l.is_inverse() ? inv_y : m.image_y());
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return reduce(raw);
}

MappingClass compose(const MappingClass& outer, const MappingClass& inner) {
  std::vector<TwistToken> tokens(outer.tokens_.begin(), outer.tokens_.end());
  tokens.insert(tokens.end(), inner.tokens_.begin(), inner.tokens_.end());
  return MappingClass(std::move(tokens), apply(outer, inner.image_x()),
                      apply(outer, inner.image_y()));
}

MappingClass lift(const Mat2& m) {
  MappingClass acc = MappingClass::identity();
  for (TwistToken t : decompose_twists(m)) {
    acc = compose(acc, token_class(t));
  }
  return acc;
}

MappingClass invert(const MappingClass& m) {
  MappingClass acc = MappingClass::identity();
  for (auto it = m.tokens_.rbegin(); it != m.tokens_.rend(); ++it) {
    acc = compose(acc, token_class(token_inverse(*it)));
  }
  return acc;
}

MappingClass mc_power(const MappingClass& m, std::int64_t n) {
  const MappingClass base = n < 0 ? invert(m) : m;
  std::int64_t k = n < 0 ? -n : n;
  MappingClass acc = MappingClass::identity();
  for (; k > 0; --k) acc = compose(acc, base);
  return acc;
}

Mat2 abelianization(const MappingClass& m) {
  const AbelianVector cx = abelianize(m.image_x());
  const AbelianVector cy = abelianize(m.image_y());
  return Mat2{cx.ex, cy.ex, cx.ey, cy.ey};
}

const Word& boundary_word() {
  static const Word commutator = Word::from_string("xyXY");
  return commutator;
}

bool boundary_image_ok(const MappingClass& m) {
  return is_conjugate(boundary_word(), apply(m, boundary_word()));
}

}  // namespace optb
