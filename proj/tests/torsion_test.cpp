#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "optb/torsion.hpp"
#include "test_support.hpp"

using namespace optb;
using namespace optb::testing;

namespace {

Word W(const char* s) { return Word::from_string(s); }

std::size_t count_x_neg(const Word& w) {
  return static_cast<std::size_t>(std::count(
      w.letters().begin(), w.letters().end(), Letter::x_inv()));
}

std::size_t count_x_total(const Word& w) {
  return static_cast<std::size_t>(std::count_if(
      w.letters().begin(), w.letters().end(),
      [](Letter l) { return l.generator() == Letter::Gen::X; }));
}

std::vector<std::int64_t> exponents_sorted(const Certificate& cert) {
  std::vector<std::int64_t> ns;
  for (const CertTerm& t : cert.terms) ns.push_back(t.N);
  std::sort(ns.begin(), ns.end());
  return ns;
}

// A single-letter edit of one conjugator word, resampled until the edited
// term contributes a different conjugate; the full product is then provably
// no longer trivial.
Certificate mutate_certificate(const Certificate& cert, std::mt19937& rng) {
  const MappingClass phi = lift(cert.normal.n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t i = rng() % cert.terms.size();
    const CertTerm& t = cert.terms[i];
    std::vector<Letter> letters(t.w.letters().begin(), t.w.letters().end());
    const Letter random_letter = alphabet()[rng() % 4];
    if (letters.empty() || rng() % 2 == 0) {
      letters.insert(letters.begin() + (rng() % (letters.size() + 1)),
                     random_letter);
    } else {
      const std::size_t pos = rng() % letters.size();
      if (letters[pos] == random_letter) continue;
      letters[pos] = random_letter;
    }
    const Word mutated = reduce(letters);
    const Word image = apply(mc_power(phi, t.N), cert.g);
    if (conjugate(image, mutated) == conjugate(image, t.w)) continue;
    Certificate out = cert;
    out.terms[i].w = mutated;
    return out;
  }
  throw std::logic_error("mutation resampling exhausted");
}

}  // namespace

TEST_CASE("cancel_negative_occurrence: examples") {
  {
    const CancelStep s = cancel_negative_occurrence(W("yXy"));
    CHECK(s.remainder == W("yy"));
    CHECK(s.conjugator == W("Y"));
  }
  {
    const CancelStep s = cancel_negative_occurrence(W("X"));
    CHECK(s.remainder == Word{});
    CHECK(s.conjugator == Word{});
  }
  {
    const CancelStep first = cancel_negative_occurrence(W("XyX"));
    CHECK(first.remainder == W("Xy"));
    CHECK(first.conjugator == Word{});
    const CancelStep second = cancel_negative_occurrence(first.remainder);
    CHECK(count_x_neg(second.remainder) == 0);
  }
  CHECK_THROWS_AS(cancel_negative_occurrence(W("xy")), std::invalid_argument);
}

TEST_CASE("cancel_negative_occurrence: identity, termination measure") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Word q = random_reduced_word(rng, 1 + rng() % 12);
    if (count_x_neg(q) == 0) continue;
    const CancelStep s = cancel_negative_occurrence(q);
    // Q . (w x w^-1) = Q'
    CHECK(concat(q, conjugate(W("x"), s.conjugator)) == s.remainder);
    CHECK(count_x_neg(s.remainder) < count_x_neg(q));
    CHECK(count_x_total(s.remainder) <= count_x_total(q));
  }
}

TEST_CASE("decide: trace branches") {
  CHECK(std::holds_alternative<Biorderable>(decide(Mat2{2, 1, 1, 1})));
  CHECK(std::holds_alternative<Biorderable>(decide(Mat2::identity())));
  {
    const Decision d = decide(Mat2{1, -1, 1, 0});
    REQUIRE(std::holds_alternative<Certificate>(d));
    CHECK(std::get<Certificate>(d).g == W("x"));
  }
  CHECK_THROWS_AS(decide(Mat2{0, 1, 1, 0}), std::domain_error);
}

TEST_CASE("synthesize: trace 1 gives the two-term phi^3 certificate") {
  const Certificate cert = synthesize(Mat2{1, -1, 1, 0});
  CHECK(cert.g == W("x"));
  CHECK(cert.terms.size() == 2);
  CHECK(exponents_sorted(cert) == std::vector<std::int64_t>{0, 3});
  CHECK(cert.normal.n == Mat2{1, -1, 1, 0});
  CHECK(verify_fiber(cert));
  CHECK(verify_ambient(cert));
  CHECK(normal_form_consistent(cert));
}

TEST_CASE("synthesize: zero diagonal gives the two-term phi^2 certificate") {
  const Certificate cert = synthesize(Mat2{0, -1, 1, 0});
  CHECK(cert.terms.size() == 2);
  CHECK(exponents_sorted(cert) == std::vector<std::int64_t>{0, 2});
  CHECK(verify_fiber(cert));
  CHECK(verify_ambient(cert));
}

TEST_CASE("synthesize: -E takes the early exit after one cancellation") {
  const Certificate cert = synthesize(Mat2{-1, 0, 0, -1});
  REQUIRE(cert.terms.size() == 2);
  CHECK(cert.terms[0].N == 1);
  CHECK(cert.terms[1].N == 0);
  CHECK(homology_balance(cert) == AbelianVector{0, 0});
  CHECK(verify_fiber(cert));
  CHECK(verify_ambient(cert));
}

TEST_CASE("synthesize: negative trace with both phases") {
  const Certificate cert = synthesize(Mat2{-1, 0, 2, -1});
  // one +1 term, one -1 term, |a| + |d| = 2 zero terms
  CHECK(exponents_sorted(cert) == std::vector<std::int64_t>{-1, 0, 0, 1});
  CHECK(verify_fiber(cert));
  CHECK(verify_ambient(cert));
}

TEST_CASE("synthesize: rejects bi-orderable and det -1 inputs") {
  CHECK_THROWS_AS(synthesize(Mat2{2, 1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(synthesize(Mat2{0, 1, 1, 0}), std::domain_error);
}

TEST_CASE("totality: every trace < 2 matrix in [-5,5] certifies") {
  for_each_sl2(5, [&](const Mat2& m) {
    if (trace(m) >= 2) return;
    const Certificate cert = synthesize(m);
    CHECK(verify_fiber(cert));
    CHECK(verify_ambient(cert));
    CHECK(normal_form_consistent(cert));
    CHECK(homology_balance(cert) == AbelianVector{0, 0});
  });
}

TEST_CASE("exponent multiset law per branch") {
  for_each_sl2(5, [&](const Mat2& m) {
    if (trace(m) >= 2) return;
    const Certificate cert = synthesize(m);
    const Mat2& n = cert.normal.n;
    const auto ns = exponents_sorted(cert);
    if (trace(n) == 1) {
      CHECK(ns == std::vector<std::int64_t>{0, 3});
    } else if (n.a == 0) {
      CHECK(ns == std::vector<std::int64_t>{0, 2});
    } else {
      const std::size_t zeros = static_cast<std::size_t>(
          std::count(ns.begin(), ns.end(), 0));
      const bool has_minus = std::count(ns.begin(), ns.end(), -1) == 1;
      CHECK(std::count(ns.begin(), ns.end(), 1) == 1);
      if (has_minus) {
        CHECK(zeros ==
              static_cast<std::size_t>(std::llabs(n.a) + std::llabs(n.d)));
        CHECK(ns.size() == zeros + 2);
      } else {
        // early exit: the phase-1 product was already trivial (c = 0)
        CHECK(n.c == 0);
        CHECK(zeros == static_cast<std::size_t>(std::llabs(n.a)));
        CHECK(ns.size() == zeros + 1);
      }
    }
  });
}

TEST_CASE("negative-trace terms arrive in phase order with per-phase counts") {
  for_each_sl2(5, [&](const Mat2& m) {
    if (trace(m) >= 2) return;
    const Certificate cert = synthesize(m);
    const Mat2& n = cert.normal.n;
    if (trace(n) == 1 || n.a == 0) return;
    REQUIRE(!cert.terms.empty());
    CHECK(cert.terms[0].N == 1);
    std::size_t i = 1;
    std::size_t phase1 = 0;
    while (i < cert.terms.size() && cert.terms[i].N == 0) {
      ++phase1;
      ++i;
    }
    CHECK(phase1 == static_cast<std::size_t>(-n.a));
    if (i < cert.terms.size()) {
      CHECK(cert.terms[i].N == -1);
      ++i;
      std::size_t phase2 = 0;
      while (i < cert.terms.size() && cert.terms[i].N == 0) {
        ++phase2;
        ++i;
      }
      CHECK(phase2 == static_cast<std::size_t>(-n.d));
      CHECK(i == cert.terms.size());
    }
  });
}

TEST_CASE("verify rejects the identity element and empty term lists") {
  Certificate cert = synthesize(Mat2{1, -1, 1, 0});
  Certificate no_g = cert;
  no_g.g = Word{};
  CHECK(!verify_fiber(no_g));
  CHECK(!verify_ambient(no_g));
  Certificate no_terms = cert;
  no_terms.terms.clear();
  CHECK(!verify_fiber(no_terms));
  CHECK(!verify_ambient(no_terms));
}

TEST_CASE("verify rejects a mutated conjugator") {
  const Certificate cert = synthesize(Mat2{1, -1, 1, 0});
  Certificate bad = cert;
  bad.terms[1].w = concat(bad.terms[1].w, W("x"));
  CHECK(conjugate(apply(mc_power(lift(cert.normal.n), 3), cert.g),
                  bad.terms[1].w) !=
        conjugate(apply(mc_power(lift(cert.normal.n), 3), cert.g),
                  cert.terms[1].w));
  CHECK(!verify_fiber(bad));
  CHECK(!verify_ambient(bad));
}

TEST_CASE("verifier independence under randomized mutations") {
  std::mt19937 rng(2026);
  std::vector<Certificate> base;
  for_each_sl2(3, [&](const Mat2& m) {
    if (trace(m) < 2) base.push_back(synthesize(m));
  });
  REQUIRE(!base.empty());
  for (int i = 0; i < 300; ++i) {
    const Certificate mutant =
        mutate_certificate(base[rng() % base.size()], rng);
    const bool fiber = verify_fiber(mutant);
    const bool ambient = verify_ambient(mutant);
    CHECK(fiber == ambient);
    CHECK(!fiber);
  }
}

TEST_CASE("normal_form_consistent spots inconsistent transport") {
  Certificate cert = synthesize(Mat2{-1, 0, 2, -1});
  CHECK(normal_form_consistent(cert));
  Certificate bad = cert;
  bad.normal.p = Mat2{1, 1, 0, 1};
  CHECK(!normal_form_consistent(bad));
}
