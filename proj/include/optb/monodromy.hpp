#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optb/matrices.hpp"
#include "optb/words.hpp"

namespace optb {

/// An automorphism of the rank-2 free group realizing a homology matrix and
/// preserving the boundary word [x, y] up to conjugacy. Built from twist
/// generator lifts; keeps the generator images alongside the token
/// provenance.
class MappingClass {
 public:
  static MappingClass identity();

  const Word& image_x() const { return img_x_; }
  const Word& image_y() const { return img_y_; }
  std::span<const TwistToken> tokens() const { return tokens_; }

 private:
  MappingClass(std::vector<TwistToken> tokens, Word img_x, Word img_y)
      : tokens_(std::move(tokens)),
        img_x_(std::move(img_x)),
        img_y_(std::move(img_y)) {}

  std::vector<TwistToken> tokens_;
  Word img_x_;
  Word img_y_;

  friend MappingClass lift(const Mat2& m);
  friend MappingClass compose(const MappingClass& outer,
                              const MappingClass& inner);
  friend MappingClass invert(const MappingClass& m);
  friend MappingClass token_class(TwistToken t);
};

/// The fixed generator lift for one twist token:
///   R: x -> x,    y -> yx      r: x -> x,    y -> yx^-1
///   L: x -> xy,   y -> y       l: x -> xy^-1, y -> y
///   N: x -> x^-1, y -> y^-1
MappingClass token_class(TwistToken t);

/// Lift of a det +1 matrix: the composition of token lifts along
/// decompose_twists. Its abelianization equals the input matrix.
MappingClass lift(const Mat2& m);

/// Substitution homomorphism: replaces each letter by the image of its
/// generator and reduces.
Word apply(const MappingClass& m, const Word& w);

/// apply(compose(outer, inner), w) = apply(outer, apply(inner, w)).
MappingClass compose(const MappingClass& outer, const MappingClass& inner);

/// Inverse automorphism: reversed token list with each token inverted.
MappingClass invert(const MappingClass& m);

/// n-fold composition; negative n through the inverse.
MappingClass mc_power(const MappingClass& m, std::int64_t n);

/// Matrix with columns abelianize(image_x), abelianize(image_y).
Mat2 abelianization(const MappingClass& m);

/// True iff the image of the boundary word [x, y] is conjugate to [x, y].
bool boundary_image_ok(const MappingClass& m);

/// The boundary word x y x^-1 y^-1.
const Word& boundary_word();

}  // namespace optb
