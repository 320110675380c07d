#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace optb {

/// 2x2 integer matrix, row-major entries (a b / c d). Group-facing
/// operations require |det| = 1 and reject other inputs; all arithmetic is
/// exact in 64 bits with overflow detection.
struct Mat2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  static constexpr Mat2 identity() { return Mat2{1, 0, 0, 1}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// Thrown when a bounded conjugator search comes up empty; callers may retry
/// with a larger bound.
class ConjugatorNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t det(const Mat2& m);
std::int64_t trace(const Mat2& m);
bool is_unimodular(const Mat2& m);

/// Throws std::domain_error unless |det| = 1 (resp. det = +1).
void require_unimodular(const Mat2& m, const char* context);
void require_sl2(const Mat2& m, const char* context);

Mat2 mul(const Mat2& lhs, const Mat2& rhs);
Mat2 neg(const Mat2& m);

/// Exact inverse via the adjugate; requires |det| = 1.
Mat2 inverse(const Mat2& m);

/// Integer power; negative exponents via the inverse.
Mat2 power(const Mat2& m, std::int64_t n);

/// A^2 - tr(A) A + E for det +1 input. Always the zero matrix; exposed as an
/// assertable operation.
Mat2 cayley_hamilton_defect(const Mat2& m);

/// Entry-wise residues in {0, 1}.
Mat2 mod2(const Mat2& m);

/// GL2(Z)-conjugation target: p A p^-1 = n with n11*n22 >= 0 and
/// |n11| >= |n22|.
struct NormalForm {
  Mat2 n;
  Mat2 p;
};

/// True iff m satisfies the normal-form inequalities above.
bool satisfies_normal_form(const Mat2& m);

/// Bounded search for the normal form of a det +1 matrix. Returns (A, E) if A
/// already qualifies; otherwise the first conjugator in the deterministic
/// candidate order (identity first, then shells of growing max |entry|, each
/// shell in lexicographic order with entries ordered 0, 1, -1, 2, -2, ...).
/// Throws ConjugatorNotFound if no conjugator has max |entry| <= bound.
NormalForm morimoto_normal_form(const Mat2& m, std::int64_t bound = 5);

/// First p in the same candidate order with p A p^-1 = B, det p = +-1 and
/// max |entry| <= bound, or nullopt.
std::optional<Mat2> bounded_gl2_conjugacy(const Mat2& a, const Mat2& b,
                                          std::int64_t bound);

/// Generators used to factor SL2(Z): R = (1 1 / 0 1), L = (1 0 / 1 1) and
/// their inverses, plus Neg = -E.
enum class TwistToken : std::uint8_t { R, RInv, L, LInv, Neg };

Mat2 token_matrix(TwistToken t);
TwistToken token_inverse(TwistToken t);
char token_char(TwistToken t);

/// Euclidean factorization of a det +1 matrix over the twist generators;
/// multiplying the tokens left to right reproduces the input exactly.
std::vector<TwistToken> decompose_twists(const Mat2& m);

}  // namespace optb
