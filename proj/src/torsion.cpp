#include "optb/torsion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "optb/semidirect.hpp"

namespace optb {

namespace {

const Word& gen_x() {
  static const Word w = Word::from_string("x");
  return w;
}

std::size_t count_x_inverse(const Word& w) {
  return static_cast<std::size_t>(std::count(
      w.letters().begin(), w.letters().end(), Letter::x_inv()));
}

// Lazily materialized powers of one mapping class; verification touches only
// a handful of small exponents.
class PowerCache {
 public:
  explicit PowerCache(const MappingClass& base) : base_(base) {}

  const MappingClass& get(std::int64_t n) {
    auto it = powers_.find(n);
    if (it == powers_.end()) {
      it = powers_.emplace(n, mc_power(base_, n)).first;
    }
    return it->second;
  }

 private:
  const MappingClass& base_;
  std::map<std::int64_t, MappingClass> powers_;
};

[[noreturn]] void synthesis_failure(const Mat2& input, const NormalForm& nf,
                                    const char* branch, const char* stage,
                                    const std::string& detail) {
  std::ostringstream os;
  os << "synthesize: " << stage << " failed in " << branch << " branch"
     << " (input [" << input.a << "," << input.b << "," << input.c << ","
     << input.d << "], normal form [" << nf.n.a << "," << nf.n.b << ","
     << nf.n.c << "," << nf.n.d << "]); " << detail
     << "; this indicates a convention bug, not an invalid input";
  throw SynthesisError(os.str());
}

// Peels every x^-1 occurrence off q, appending one zero-exponent term per
// step; returns the final remainder.
Word peel_negative(Word q, std::vector<CertTerm>& terms) {
  while (count_x_inverse(q) > 0) {
    CancelStep step = cancel_negative_occurrence(q);
    terms.push_back(CertTerm{step.conjugator, 0});
    q = std::move(step.remainder);
  }
  return q;
}

}  // namespace

CancelStep cancel_negative_occurrence(const Word& q) {
  const auto letters = q.letters();
  std::size_t pos = letters.size();
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (letters[i] == Letter::x_inv()) {
      pos = i;
      break;
    }
  }
  if (pos == letters.size()) {
    throw std::invalid_argument(
        "cancel_negative_occurrence: word '" + q.to_string() +
        "' contains no x^-1");
  }
  const Word alpha = reduce(letters.subspan(0, pos));
  const Word beta = reduce(letters.subspan(pos + 1));
  return CancelStep{concat(alpha, beta), invert(beta)};
}

Certificate synthesize(const Mat2& m, std::int64_t nf_bound) {
  require_sl2(m, "synthesize");
  if (trace(m) >= 2) {
    throw std::domain_error("synthesize: trace " + std::to_string(trace(m)) +
                            " >= 2, group is bi-orderable");
  }

  NormalForm nf = [&] {
    try {
      return morimoto_normal_form(m, nf_bound);
    } catch (const ConjugatorNotFound&) {
      return morimoto_normal_form(m, 8);
    }
  }();

  Certificate cert;
  cert.matrix = m;
  cert.g = gen_x();

  if (trace(nf.n) == 1) {
    // Move the normal form onto the one order-6 representative the
    // construction is written for.
    const Mat2 target{1, -1, 1, 0};
    std::optional<Mat2> q = bounded_gl2_conjugacy(nf.n, target, 5);
    if (!q) q = bounded_gl2_conjugacy(nf.n, target, 8);
    if (!q) {
      synthesis_failure(m, nf, "trace-1", "conjugation onto (1 -1 / 1 0)",
                        "no conjugator with max |entry| <= 8");
    }
    nf = NormalForm{target, mul(*q, nf.p)};
    cert.normal = nf;

    const MappingClass phi = lift(nf.n);
    const Word u = apply(mc_power(phi, 3), gen_x());
    const auto h = solve_conjugacy(invert(gen_x()), u);
    if (!h) {
      synthesis_failure(m, nf, "trace-1", "conjugacy solve",
                        "phi^3(x) = " + u.to_string() +
                            " is not conjugate to x^-1");
    }
    cert.terms = {CertTerm{Word{}, 0}, CertTerm{*h, 3}};
  } else if (nf.n.a == 0) {
    // Zero diagonal: the square of the monodromy reverses the loop.
    cert.normal = nf;
    const MappingClass phi = lift(nf.n);
    const Word u = apply(mc_power(phi, 2), gen_x());
    const auto h = solve_conjugacy(invert(gen_x()), u);
    if (!h) {
      synthesis_failure(m, nf, "zero-diagonal", "conjugacy solve",
                        "phi^2(x) = " + u.to_string() +
                            " is not conjugate to x^-1");
    }
    cert.terms = {CertTerm{Word{}, 0}, CertTerm{*h, 2}};
  } else {
    // a <= d <= 0 with a < 0. Work with the cyclically reduced images so the
    // telescopes end on pure powers of y; the stems fold into the
    // conjugators of the +-1 terms.
    cert.normal = nf;
    const MappingClass phi = lift(nf.n);

    const CyclicReduction fwd = cyclic_reduce(apply(phi, gen_x()));
    cert.terms.push_back(CertTerm{invert(fwd.stem), 1});
    const Word q1 = peel_negative(fwd.core_word, cert.terms);

    if (!q1.empty()) {
      const CyclicReduction bwd = cyclic_reduce(apply(invert(phi), gen_x()));
      std::vector<CertTerm> phase2;
      phase2.push_back(CertTerm{invert(bwd.stem), -1});
      const Word q2 = peel_negative(bwd.core_word, phase2);

      const auto join = solve_conjugacy(invert(q1), q2);
      if (!join) {
        synthesis_failure(m, nf, "negative-trace", "telescope join",
                          "phase products " + q1.to_string() + " / " +
                              q2.to_string() + " are not inverse-conjugate");
      }
      for (CertTerm& t : phase2) {
        cert.terms.push_back(CertTerm{concat(*join, t.w), t.N});
      }
    }
  }

  if (!verify_fiber(cert)) {
    synthesis_failure(m, cert.normal, "post-check", "fiber identity",
                      "product of conjugates does not reduce to the identity");
  }
  if (homology_balance(cert) != AbelianVector{0, 0}) {
    synthesis_failure(m, cert.normal, "post-check", "homology balance",
                      "exponent multiset does not cancel in H_1");
  }
  return cert;
}

Decision decide(const Mat2& m) {
  require_sl2(m, "decide");
  if (trace(m) >= 2) return Biorderable{};
  return synthesize(m);
}

bool verify_fiber(const Certificate& cert) {
  if (cert.g.empty() || cert.terms.empty()) return false;
  const MappingClass phi = lift(cert.normal.n);
  PowerCache powers(phi);
  Word product;
  for (const CertTerm& t : cert.terms) {
    product = concat(product, conjugate(apply(powers.get(t.N), cert.g), t.w));
  }
  return product.empty();
}

bool verify_ambient(const Certificate& cert) {
  if (cert.g.empty() || cert.terms.empty()) return false;
  const MappingClass phi = lift(cert.normal.n);
  BundleElement acc;
  for (const CertTerm& t : cert.terms) {
    acc = sd_mul(phi, acc, BundleElement{t.w, 0});
    acc = sd_mul(phi, acc, BundleElement{Word{}, t.N});
    acc = sd_mul(phi, acc, BundleElement{cert.g, 0});
    acc = sd_mul(phi, acc, BundleElement{Word{}, -t.N});
    acc = sd_mul(phi, acc, BundleElement{invert(t.w), 0});
  }
  return acc == BundleElement{};
}

bool normal_form_consistent(const Certificate& cert) {
  if (det(cert.matrix) != 1 || det(cert.normal.n) != 1) return false;
  if (!is_unimodular(cert.normal.p)) return false;
  if (mul(mul(cert.normal.p, cert.matrix), inverse(cert.normal.p)) !=
      cert.normal.n) {
    return false;
  }
  return satisfies_normal_form(cert.normal.n);
}

AbelianVector homology_balance(const Certificate& cert) {
  const AbelianVector g = abelianize(cert.g);
  AbelianVector sum;
  for (const CertTerm& t : cert.terms) {
    const Mat2 p = power(cert.normal.n, t.N);
    sum = sum + AbelianVector{p.a * g.ex + p.b * g.ey,
                              p.c * g.ex + p.d * g.ey};
  }
  return sum;
}

}  // namespace optb
