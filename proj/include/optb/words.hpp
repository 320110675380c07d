#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace optb {

/// One letter of the rank-2 free group: a generator or its inverse.
///
/// Codes are chosen so that the canonical letter order x < x^-1 < y < y^-1
/// coincides with the numeric order of the code.
class Letter {
 public:
  enum class Gen : std::uint8_t { X = 0, Y = 1 };

  constexpr Letter(Gen g, bool inverse)
      : code_(static_cast<std::uint8_t>(
            (static_cast<std::uint8_t>(g) << 1) | (inverse ? 1 : 0))) {}

  static constexpr Letter x() { return Letter(Gen::X, false); }
  static constexpr Letter y() { return Letter(Gen::Y, false); }
  static constexpr Letter x_inv() { return Letter(Gen::X, true); }
  static constexpr Letter y_inv() { return Letter(Gen::Y, true); }

  constexpr Gen generator() const { return static_cast<Gen>(code_ >> 1); }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }

  /// 'x'/'y' for generators, 'X'/'Y' for their inverses.
  constexpr char to_char() const { return "xXyY"[code_]; }
  static constexpr std::optional<Letter> from_char(char c) {
    switch (c) {
      case 'x': return x();
      case 'X': return x_inv();
      case 'y': return y();
      case 'Y': return y_inv();
      default: return std::nullopt;
    }
  }

  constexpr std::uint8_t code() const { return code_; }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  explicit constexpr Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

/// A freely reduced word over {x, y}; the empty word is the identity.
/// Instances are immutable and always reduced.
class Word {
 public:
  Word() = default;

  /// Parses the compact encoding ('x','y' positive, 'X','Y' inverse, ""
  /// identity) and reduces. Throws std::invalid_argument on other characters.
  static Word from_string(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;

  friend Word reduce(std::span<const Letter> raw);
};

struct CyclicReduction;

/// A cyclically reduced word up to rotation, stored in its canonical
/// (lexicographically least) rotation; represents a conjugacy class.
class CyclicWord {
 public:
  CyclicWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  CyclicWord inverse_class() const;
  /// The canonical rotation as a linear word.
  Word linear() const;
  std::string to_string() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> canonical)
      : letters_(std::move(canonical)) {}
  std::vector<Letter> letters_;

  // Rotates a cyclically reduced letter sequence into canonical position.
  static CyclicWord canonical_of(std::span<const Letter> cyclically_reduced);

  friend CyclicReduction cyclic_reduce(const Word& u);
  friend CyclicWord slope_word(std::int64_t p, std::int64_t q);
};

/// Image of a word in H_1: signed letter counts (ex, ey).
struct AbelianVector {
  std::int64_t ex = 0;
  std::int64_t ey = 0;

  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;
  AbelianVector operator+(const AbelianVector& o) const {
    return {ex + o.ex, ey + o.ey};
  }
};

/// Result of cyclic reduction: u = stem . core_word . stem^-1 exactly,
/// with core_word cyclically reduced and core its canonical rotation class.
struct CyclicReduction {
  CyclicWord core;
  Word stem;
  Word core_word;
};

/// Free reduction of an arbitrary letter sequence; idempotent.
Word reduce(std::span<const Letter> raw);

/// Reduced product u.v.
Word concat(const Word& u, const Word& v);

/// Reversed word with all signs flipped; concat(u, invert(u)) is the identity.
Word invert(const Word& u);

/// Reduced form of g.u.g^-1.
Word conjugate(const Word& u, const Word& g);

/// Maximal-stem cyclic reduction of u.
CyclicReduction cyclic_reduce(const Word& u);

/// True iff u and v are conjugate (equal canonical cyclic reductions).
bool is_conjugate(const Word& u, const Word& v);

/// If u and v are conjugate, a witness g with conjugate(v, g) = u, built
/// deterministically as stem_u . rotation^-1 . stem_v^-1 for the smallest
/// rotation offset; otherwise nullopt.
std::optional<Word> solve_conjugacy(const Word& u, const Word& v);

/// Signed letter counts; a homomorphism onto Z^2.
AbelianVector abelianize(const Word& u);

/// Cutting-sequence cyclic word of the simple loop of slope class (p, q):
/// |p| letters x^sign(p) and |q| letters y^sign(q) in the balanced
/// interleaving. Requires gcd(|p|, |q|) = 1; throws std::domain_error
/// otherwise (in particular for (0, 0)).
CyclicWord slope_word(std::int64_t p, std::int64_t q);

}  // namespace optb
