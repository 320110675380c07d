#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "optb/semidirect.hpp"
#include "test_support.hpp"

using namespace optb;
using namespace optb::testing;

namespace {

Word W(const char* s) { return Word::from_string(s); }

}  // namespace

TEST_CASE("group law examples") {
  const MappingClass phi = lift(Mat2{1, -1, 1, 0});

  CHECK(sd_mul(phi, {W("xy"), 0}, {W("yx"), 0}) ==
        BundleElement{W("xyyx"), 0});
  CHECK(sd_mul(phi, {Word{}, 2}, {Word{}, 3}) == BundleElement{Word{}, 5});

  // tau g tau^-1 = phi(g)
  const Word g = W("xYx");
  const BundleElement conj = sd_mul(
      phi, sd_mul(phi, {Word{}, 1}, {g, 0}), {Word{}, -1});
  CHECK(conj == BundleElement{apply(phi, g), 0});
}

TEST_CASE("inverse examples and exactness") {
  const MappingClass phi = lift(Mat2{1, -1, 1, 0});
  CHECK(sd_inv(phi, {W("xy"), 0}) == BundleElement{W("YX"), 0});
  CHECK(sd_inv(phi, {Word{}, 4}) == BundleElement{Word{}, -4});

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const BundleElement e{random_reduced_word(rng, rng() % 8),
                          static_cast<std::int64_t>(rng() % 7) - 3};
    CHECK(sd_mul(phi, e, sd_inv(phi, e)) == BundleElement{});
    CHECK(sd_mul(phi, sd_inv(phi, e), e) == BundleElement{});
  }
}

TEST_CASE("associativity on random triples") {
  const MappingClass phi = lift(Mat2{-1, 0, 2, -1});
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BundleElement e1{random_reduced_word(rng, rng() % 6),
                           static_cast<std::int64_t>(rng() % 5) - 2};
    const BundleElement e2{random_reduced_word(rng, rng() % 6),
                           static_cast<std::int64_t>(rng() % 5) - 2};
    const BundleElement e3{random_reduced_word(rng, rng() % 6),
                           static_cast<std::int64_t>(rng() % 5) - 2};
    CHECK(sd_mul(phi, sd_mul(phi, e1, e2), e3) ==
          sd_mul(phi, e1, sd_mul(phi, e2, e3)));
  }
}

TEST_CASE("tau conjugation law for all words of length <= 6, |k| <= 3") {
  const MappingClass phi = lift(Mat2{0, -1, 1, 0});
  for (std::int64_t k = -3; k <= 3; ++k) {
    const MappingClass phik = mc_power(phi, k);
    for_each_reduced_word(6, [&](const Word& w) {
      const BundleElement lhs = sd_mul(
          phi, sd_mul(phi, {Word{}, k}, {w, 0}), {Word{}, -k});
      CHECK(lhs == BundleElement{apply(phik, w), 0});
    });
  }
}

TEST_CASE("projection to the tau factor is a homomorphism") {
  const MappingClass phi = lift(Mat2{1, -1, 1, 0});
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const BundleElement e1{random_reduced_word(rng, rng() % 6),
                           static_cast<std::int64_t>(rng() % 9) - 4};
    const BundleElement e2{random_reduced_word(rng, rng() % 6),
                           static_cast<std::int64_t>(rng() % 9) - 4};
    CHECK(sd_mul(phi, e1, e2).k == e1.k + e2.k);
    CHECK(sd_inv(phi, e1).k == -e1.k);
  }
}
