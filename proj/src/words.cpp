#include "optb/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace optb {

namespace {

// Booth's least-rotation algorithm; returns the start index of the
// lexicographically least rotation.
std::size_t least_rotation_index(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k;
}

bool rotation_matches(std::span<const Letter> s, std::size_t offset,
                      std::span<const Letter> target) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[(offset + i) % n] != target[i]) return false;
  }
  return true;
}

}  // namespace

Word Word::from_string(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    auto l = Letter::from_char(c);
    if (!l) {
      throw std::invalid_argument(std::string("invalid word character '") + c +
                                  "' (expected one of x, X, y, Y)");
    }
    raw.push_back(*l);
  }
  return reduce(raw);
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.to_char());
  return out;
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce(raw);
}

Word invert(const Word& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return reduce(raw);
}

Word conjugate(const Word& u, const Word& g) {
  return concat(concat(g, u), invert(g));
}

CyclicWord CyclicWord::canonical_of(std::span<const Letter> cr) {
  const std::size_t k = least_rotation_index(cr);
  std::vector<Letter> rotated;
  rotated.reserve(cr.size());
  for (std::size_t i = 0; i < cr.size(); ++i) {
    rotated.push_back(cr[(k + i) % cr.size()]);
  }
  return CyclicWord(std::move(rotated));
}

CyclicWord CyclicWord::inverse_class() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.push_back(it->inverse());
  }
  return canonical_of(inv);
}

Word CyclicWord::linear() const { return reduce(letters_); }

std::string CyclicWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.to_char());
  return out;
}

CyclicReduction cyclic_reduce(const Word& u) {
  auto all = u.letters();
  std::size_t lo = 0;
  std::size_t hi = all.size();
  while (hi - lo >= 2 && all[lo] == all[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.stem = reduce(all.subspan(0, lo));
  r.core_word = reduce(all.subspan(lo, hi - lo));
  r.core = CyclicWord::canonical_of(r.core_word.letters());
  return r;
}

bool is_conjugate(const Word& u, const Word& v) {
  return cyclic_reduce(u).core == cyclic_reduce(v).core;
}

std::optional<Word> solve_conjugacy(const Word& u, const Word& v) {
  const CyclicReduction cu = cyclic_reduce(u);
  const CyclicReduction cv = cyclic_reduce(v);
  if (cu.core != cv.core) return std::nullopt;
  if (cu.core.empty()) return Word{};

  // Find the smallest k with rot_k(core_v) = core_u; then with w the length-k
  // prefix of core_v, g = stem_u . w^-1 . stem_v^-1 satisfies g v g^-1 = u.
  auto cword = cv.core_word.letters();
  const std::size_t n = cword.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!rotation_matches(cword, k, cu.core_word.letters())) continue;
    std::vector<Letter> raw;
    raw.reserve(cu.stem.size() + k + cv.stem.size());
    raw.insert(raw.end(), cu.stem.letters().begin(), cu.stem.letters().end());
    for (std::size_t i = k; i-- > 0;) raw.push_back(cword[i].inverse());
    for (auto it = cv.stem.letters().rbegin(); it != cv.stem.letters().rend();
         ++it) {
      raw.push_back(it->inverse());
    }
    return reduce(raw);
  }
  return std::nullopt;  // unreachable: equal canonical classes always rotate
}

AbelianVector abelianize(const Word& u) {
  AbelianVector v;
  for (Letter l : u.letters()) {
    const std::int64_t s = l.is_inverse() ? -1 : 1;
    if (l.generator() == Letter::Gen::X) {
      v.ex += s;
    } else {
      v.ey += s;
    }
  }
  return v;
}

CyclicWord slope_word(std::int64_t p, std::int64_t q) {
  const std::int64_t ap = std::llabs(p);
  const std::int64_t aq = std::llabs(q);
  if (std::gcd(ap, aq) != 1) {
    throw std::domain_error("slope_word requires coprime (p, q); got (" +
                            std::to_string(p) + ", " + std::to_string(q) +
                            ")");
  }
  const Letter lx(Letter::Gen::X, p < 0);
  const Letter ly(Letter::Gen::Y, q < 0);
  if (aq == 0) return CyclicWord::canonical_of(std::vector<Letter>{lx});
  if (ap == 0) return CyclicWord::canonical_of(std::vector<Letter>{ly});

  // Read the two position families in circle order: x's at k/|p| and y's at
  // (j + 1/2)/|q|, scaled by 2|p||q| to stay in integers. For even |p| the
  // families collide exactly once; the x is read first there.
  std::vector<Letter> seq;
  seq.reserve(static_cast<std::size_t>(ap + aq));
  std::int64_t k = 0;
  std::int64_t j = 0;
  while (k < ap || j < aq) {
    const std::int64_t xpos = 2 * k * aq;
    const std::int64_t ypos = (2 * j + 1) * ap;
    if (k < ap && (j >= aq || xpos <= ypos)) {
      seq.push_back(lx);
      ++k;
    } else {
      seq.push_back(ly);
      ++j;
    }
  }
  return CyclicWord::canonical_of(seq);
}

}  // namespace optb
