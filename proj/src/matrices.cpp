#include "optb/matrices.hpp"

#include <cstdlib>
#include <string>

namespace optb {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("Mat2 arithmetic overflow (addition)");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw std::overflow_error("Mat2 arithmetic overflow (subtraction)");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("Mat2 arithmetic overflow (multiplication)");
  }
  return r;
}

std::string entries_str(const Mat2& m) {
  return "[" + std::to_string(m.a) + "," + std::to_string(m.b) + "," +
         std::to_string(m.c) + "," + std::to_string(m.d) + "]";
}

// Visits unimodular conjugator candidates in the documented deterministic
// order; stops when fn returns true.
template <typename Fn>
void visit_conjugators(std::int64_t bound, Fn&& fn) {
  if (fn(Mat2::identity())) return;
  for (std::int64_t shell = 1; shell <= bound; ++shell) {
    std::vector<std::int64_t> values;
    values.push_back(0);
    for (std::int64_t v = 1; v <= shell; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
    for (std::int64_t a : values) {
      for (std::int64_t b : values) {
        for (std::int64_t c : values) {
          for (std::int64_t d : values) {
            const std::int64_t m = std::max(
                std::max(std::llabs(a), std::llabs(b)),
                std::max(std::llabs(c), std::llabs(d)));
            if (m != shell) continue;
            const Mat2 p{a, b, c, d};
            if (!is_unimodular(p)) continue;
            if (fn(p)) return;
          }
        }
      }
    }
  }
}

}  // namespace

std::int64_t det(const Mat2& m) {
  return checked_sub(checked_mul(m.a, m.d), checked_mul(m.b, m.c));
}

std::int64_t trace(const Mat2& m) { return checked_add(m.a, m.d); }

bool is_unimodular(const Mat2& m) {
  const std::int64_t dt = det(m);
  return dt == 1 || dt == -1;
}

void require_unimodular(const Mat2& m, const char* context) {
  if (!is_unimodular(m)) {
    throw std::domain_error(std::string(context) + ": matrix " +
                            entries_str(m) + " has determinant " +
                            std::to_string(det(m)) + ", expected +-1");
  }
}

void require_sl2(const Mat2& m, const char* context) {
  if (det(m) != 1) {
    throw std::domain_error(std::string(context) + ": matrix " +
                            entries_str(m) + " has determinant " +
                            std::to_string(det(m)) + ", expected +1");
  }
}

Mat2 mul(const Mat2& lhs, const Mat2& rhs) {
  return Mat2{
      checked_add(checked_mul(lhs.a, rhs.a), checked_mul(lhs.b, rhs.c)),
      checked_add(checked_mul(lhs.a, rhs.b), checked_mul(lhs.b, rhs.d)),
      checked_add(checked_mul(lhs.c, rhs.a), checked_mul(lhs.d, rhs.c)),
      checked_add(checked_mul(lhs.c, rhs.b), checked_mul(lhs.d, rhs.d))};
}

Mat2 neg(const Mat2& m) { return Mat2{-m.a, -m.b, -m.c, -m.d}; }

Mat2 inverse(const Mat2& m) {
  require_unimodular(m, "inverse");
  const Mat2 adj{m.d, -m.b, -m.c, m.a};
  return det(m) == 1 ? adj : neg(adj);
}

Mat2 power(const Mat2& m, std::int64_t n) {
  require_unimodular(m, "power");
  Mat2 base = n < 0 ? inverse(m) : m;
  std::int64_t k = n < 0 ? -n : n;
  Mat2 acc = Mat2::identity();
  for (; k > 0; --k) acc = mul(acc, base);
  return acc;
}

Mat2 cayley_hamilton_defect(const Mat2& m) {
  require_sl2(m, "cayley_hamilton_defect");
  const std::int64_t t = trace(m);
  const Mat2 sq = mul(m, m);
  return Mat2{checked_add(checked_sub(sq.a, checked_mul(t, m.a)), 1),
              checked_sub(sq.b, checked_mul(t, m.b)),
              checked_sub(sq.c, checked_mul(t, m.c)),
              checked_add(checked_sub(sq.d, checked_mul(t, m.d)), 1)};
}

Mat2 mod2(const Mat2& m) {
  auto r = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
  return Mat2{r(m.a), r(m.b), r(m.c), r(m.d)};
}

bool satisfies_normal_form(const Mat2& m) {
  const bool product_nonneg = m.a == 0 || m.d == 0 || (m.a > 0) == (m.d > 0);
  return product_nonneg && std::llabs(m.a) >= std::llabs(m.d);
}

NormalForm morimoto_normal_form(const Mat2& m, std::int64_t bound) {
  require_sl2(m, "morimoto_normal_form");
  if (satisfies_normal_form(m)) return NormalForm{m, Mat2::identity()};
  std::optional<NormalForm> found;
  visit_conjugators(bound, [&](const Mat2& p) {
    const Mat2 n = mul(mul(p, m), inverse(p));
    if (!satisfies_normal_form(n)) return false;
    found = NormalForm{n, p};
    return true;
  });
  if (!found) {
    throw ConjugatorNotFound("morimoto_normal_form: no conjugator with "
                             "max |entry| <= " +
                             std::to_string(bound) + " for " + entries_str(m));
  }
  return *found;
}

std::optional<Mat2> bounded_gl2_conjugacy(const Mat2& a, const Mat2& b,
                                          std::int64_t bound) {
  require_unimodular(a, "bounded_gl2_conjugacy");
  require_unimodular(b, "bounded_gl2_conjugacy");
  std::optional<Mat2> found;
  visit_conjugators(bound, [&](const Mat2& p) {
    // p a p^-1 = b  <=>  p a = b p (p invertible).
    if (mul(p, a) != mul(b, p)) return false;
    found = p;
    return true;
  });
  return found;
}

Mat2 token_matrix(TwistToken t) {
  switch (t) {
    case TwistToken::R: return Mat2{1, 1, 0, 1};
    case TwistToken::RInv: return Mat2{1, -1, 0, 1};
    case TwistToken::L: return Mat2{1, 0, 1, 1};
    case TwistToken::LInv: return Mat2{1, 0, -1, 1};
    case TwistToken::Neg: return Mat2{-1, 0, 0, -1};
  }
  throw std::logic_error("token_matrix: bad token");
}

TwistToken token_inverse(TwistToken t) {
  switch (t) {
    case TwistToken::R: return TwistToken::RInv;
    case TwistToken::RInv: return TwistToken::R;
    case TwistToken::L: return TwistToken::LInv;
    case TwistToken::LInv: return TwistToken::L;
    case TwistToken::Neg: return TwistToken::Neg;
  }
  throw std::logic_error("token_inverse: bad token");
}

char token_char(TwistToken t) {
  switch (t) {
    case TwistToken::R: return 'R';
    case TwistToken::RInv: return 'r';
    case TwistToken::L: return 'L';
    case TwistToken::LInv: return 'l';
    case TwistToken::Neg: return 'N';
  }
  throw std::logic_error("token_char: bad token");
}

std::vector<TwistToken> decompose_twists(const Mat2& m) {
  require_sl2(m, "decompose_twists");
  std::vector<TwistToken> tokens;
  Mat2 rest = m;

  // Emitting R^k (resp. L^k) appends the tokens and strips the factor off the
  // front of the remainder: row1 -= k * row2 (resp. row2 -= k * row1).
  auto emit_r = [&](std::int64_t k) {
    const TwistToken t = k > 0 ? TwistToken::R : TwistToken::RInv;
    for (std::int64_t i = std::llabs(k); i > 0; --i) tokens.push_back(t);
    rest.a = checked_sub(rest.a, checked_mul(k, rest.c));
    rest.b = checked_sub(rest.b, checked_mul(k, rest.d));
  };
  auto emit_l = [&](std::int64_t k) {
    const TwistToken t = k > 0 ? TwistToken::L : TwistToken::LInv;
    for (std::int64_t i = std::llabs(k); i > 0; --i) tokens.push_back(t);
    rest.c = checked_sub(rest.c, checked_mul(k, rest.a));
    rest.d = checked_sub(rest.d, checked_mul(k, rest.b));
  };

  // Euclid on the first column (always coprime for det +1).
  while (rest.c != 0) {
    if (rest.a != 0 && std::llabs(rest.c) >= std::llabs(rest.a)) {
      emit_l(rest.c / rest.a);
    } else if (rest.a == 0) {
      emit_r(rest.c > 0 ? -1 : 1);  // column (0, +-1) -> (1, +-1)
    } else {
      emit_r(rest.a / rest.c);
    }
  }
  // Residual is upper triangular with a = d = +-1.
  if (rest.a == -1) {
    tokens.push_back(TwistToken::Neg);
    rest = neg(rest);
  }
  if (rest.b != 0) emit_r(rest.b);
  return tokens;
}

}  // namespace optb
