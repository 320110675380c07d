#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "optb/matrices.hpp"
#include "optb/monodromy.hpp"
#include "optb/words.hpp"

namespace optb {

/// One factor of a generalized-torsion product: the conjugate
/// w . phi^N(g) . w^-1.
struct CertTerm {
  Word w;
  std::int64_t N = 0;

  friend bool operator==(const CertTerm&, const CertTerm&) = default;
};

/// Witness that the fiber element g is a generalized torsion of the bundle
/// group of `matrix`: the product of the terms, evaluated with phi the lift
/// of the normal form, freely reduces to the identity. Words are expressed
/// in normal-form coordinates; `normal.p` records the change of basis from
/// the original matrix.
struct Certificate {
  Mat2 matrix;
  NormalForm normal;
  Word g;
  std::vector<CertTerm> terms;
};

struct Biorderable {};

/// Outcome of the trace test: bi-orderable for trace >= 2, otherwise a
/// synthesized certificate.
using Decision = std::variant<Biorderable, Certificate>;

/// Signals a broken convention or spec-level contradiction during synthesis;
/// never raised for a valid det +1, trace < 2 input once conventions agree.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of cancelling one x^-1 occurrence: Q . (w x w^-1) = remainder.
struct CancelStep {
  Word remainder;
  Word conjugator;
};

/// Splits Q = alpha . x^-1 . beta at the last x^-1 occurrence and returns
/// remainder = reduce(alpha beta), conjugator = beta^-1. The x^-1 count
/// strictly decreases and no letters are introduced. Throws
/// std::invalid_argument if Q contains no x^-1.
CancelStep cancel_negative_occurrence(const Word& q);

/// Builds a verified certificate for a det +1 matrix with trace < 2.
/// Branches on the trace of the Morimoto normal form:
///   trace 1:   conjugate the normal form onto (1 -1 / 1 0); g cancels
///              against phi^3(g) through one conjugacy solve.
///   trace 0, diagonal 0: same with phi^2.
///   otherwise: peel x^-1 occurrences from the cyclically reduced images of
///              x under phi and phi^-1, then join the two telescopes.
Certificate synthesize(const Mat2& m, std::int64_t nf_bound = 5);

/// Trace test: trace >= 2 yields Biorderable, otherwise Torsion with a
/// synthesized certificate. Requires det +1.
Decision decide(const Mat2& m);

/// Recomputes phi from the certificate alone and evaluates the product of
/// conjugates by free reduction; true iff it is the identity, g is not the
/// identity, and the term list is nonempty.
bool verify_fiber(const Certificate& cert);

/// Same decision computed in the ambient semidirect product: multiplies the
/// elements (w,0)(e,N)(g,0)(e,-N)(w^-1,0) and tests against (empty, 0).
/// Agrees with verify_fiber on every certificate.
bool verify_ambient(const Certificate& cert);

/// Structural consistency: det(matrix) = +1, p unimodular,
/// p . matrix . p^-1 = n, and n satisfies the normal-form inequalities.
bool normal_form_consistent(const Certificate& cert);

/// Sum over terms of n^N . abelianize(g); zero for any certificate whose
/// fiber identity holds.
AbelianVector homology_balance(const Certificate& cert);

}  // namespace optb
