#include "doctest.h"

#include "f1zeta/errors.hpp"
#include "f1zeta/weyl.hpp"
#include "support/oracles.hpp"

using namespace f1zeta;
namespace t = f1zeta::testing;

namespace {

RootSystemSpec spec(Family f, int rank) { return RootSystemSpec::single(f, rank); }

IntPolynomial from_hist(const std::vector<std::uint64_t>& h) {
  std::vector<BigInt> c;
  for (auto x : h) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("positive roots of small systems") {
  CHECK(positive_roots(spec(Family::A, 1)) == std::vector<RootVector>{{1}});
  const auto a2 = positive_roots(spec(Family::A, 2));
  CHECK(a2 == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}});
  // dim G2 = 14, rank 2
  CHECK(positive_roots(spec(Family::G, 2)).size() == (14 - 2) / 2);
}

TEST_CASE("positive root counts per family") {
  for (int n = 1; n <= 7; ++n) CHECK(positive_roots(spec(Family::A, n)).size() == std::size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 6; ++n) {
    CHECK(positive_roots(spec(Family::B, n)).size() == std::size_t(n * n));
    CHECK(positive_roots(spec(Family::C, n)).size() == std::size_t(n * n));
  }
  for (int n = 4; n <= 7; ++n) CHECK(positive_roots(spec(Family::D, n)).size() == std::size_t(n * (n - 1)));
  CHECK(positive_roots(spec(Family::E, 6)).size() == 36);
  CHECK(positive_roots(spec(Family::E, 7)).size() == 63);
  CHECK(positive_roots(spec(Family::E, 8)).size() == 120);
  CHECK(positive_roots(spec(Family::F, 4)).size() == 24);
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(spec(Family::A, 0), InvalidRank);
  CHECK_THROWS_AS(spec(Family::B, 1), InvalidRank);
  CHECK_THROWS_AS(spec(Family::C, 1), InvalidRank);
  CHECK_THROWS_AS(spec(Family::D, 2), InvalidRank);
  CHECK_THROWS_AS(spec(Family::E, 5), InvalidRank);
  CHECK_THROWS_AS(spec(Family::E, 9), InvalidRank);
  CHECK_THROWS_AS(spec(Family::F, 3), InvalidRank);
  CHECK_THROWS_AS(spec(Family::G, 3), InvalidRank);
  CHECK_THROWS_AS(family_from_letter('H'), InvalidRank);
}

TEST_CASE("C2 and D3 normalize to B2 and A3") {
  CHECK(spec(Family::C, 2) == spec(Family::B, 2));
  CHECK(spec(Family::D, 3) == spec(Family::A, 3));
  CHECK(spec(Family::D, 3).to_string() == "A3");
}

TEST_CASE("weyl_enumerate on rank one and two") {
  const auto a1 = weyl_enumerate(spec(Family::A, 1));
  CHECK(a1.length_histogram == std::vector<std::uint64_t>{1, 1});
  CHECK(a1.group_order == 2);

  const auto a2 = weyl_enumerate(spec(Family::A, 2));
  CHECK(a2.length_histogram == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(a2.group_order == 6);

  const auto b2 = weyl_enumerate(spec(Family::B, 2));
  CHECK(b2.length_histogram == std::vector<std::uint64_t>{1, 2, 2, 2, 1});
  CHECK(b2.group_order == 8);

  const auto g2 = weyl_enumerate(spec(Family::G, 2));
  CHECK(poincare_polynomial(g2) == IntPolynomial{1, 2, 2, 2, 2, 2, 1});
  CHECK(g2.group_order == 12);
}

TEST_CASE("poincare_by_degrees") {
  CHECK(poincare_by_degrees(spec(Family::A, 1)) == IntPolynomial{1, 1});
  CHECK(poincare_by_degrees(spec(Family::A, 2)) == IntPolynomial{1, 2, 2, 1});
  CHECK(poincare_by_degrees(spec(Family::B, 2)) == IntPolynomial{1, 2, 2, 2, 1});
  CHECK(eval_int(poincare_by_degrees(spec(Family::E, 8)), 1) == BigInt(696729600));
  CHECK(poincare_by_degrees(spec(Family::E, 8)).degree() == 120);
}

TEST_CASE("BFS depth equals inversion count") {
  for (const auto& s : {spec(Family::A, 3), spec(Family::B, 3), spec(Family::C, 3), spec(Family::D, 4),
                        spec(Family::G, 2), spec(Family::F, 4)})
    CHECK_NOTHROW(weyl_enumerate(s, kWeylEnumerationCap, true));
}

TEST_CASE("BFS agrees with signed-permutation oracle") {
  for (int n = 2; n <= 6; ++n)
    CHECK(weyl_enumerate(spec(Family::A, n - 1)).length_histogram == t::euclidean_length_histogram(t::Classical::A, n));
  for (int n = 2; n <= 4; ++n) {
    const auto oracle = t::euclidean_length_histogram(t::Classical::B, n);
    CHECK(weyl_enumerate(spec(Family::B, n)).length_histogram == oracle);
    CHECK(weyl_enumerate(spec(Family::C, n)).length_histogram == oracle);
  }
  for (int n = 4; n <= 5; ++n)
    CHECK(weyl_enumerate(spec(Family::D, n)).length_histogram == t::euclidean_length_histogram(t::Classical::D, n));
}

TEST_CASE("property: enumeration matches degree formula and structural invariants") {
  const std::vector<RootSystemSpec> specs{
      spec(Family::A, 1), spec(Family::A, 2), spec(Family::A, 3), spec(Family::A, 4), spec(Family::A, 5),
      spec(Family::B, 2), spec(Family::B, 3), spec(Family::B, 4), spec(Family::C, 3), spec(Family::C, 4),
      spec(Family::D, 4), spec(Family::D, 5), spec(Family::F, 4), spec(Family::G, 2), spec(Family::E, 6)};
  for (const auto& s : specs) {
    CAPTURE(s.to_string());
    const WeylGroupData w = weyl_enumerate(s);
    const IntPolynomial p = poincare_polynomial(w);
    CHECK(p == poincare_by_degrees(s));
    CHECK(eval_int(p, 1) == w.group_order);
    CHECK(eval_int(p, 0) == 1);
    CHECK(p.degree() == static_cast<long>(positive_roots(s).size()));
    CHECK(w.num_positive_roots == static_cast<int>(positive_roots(s).size()));
    CHECK(w.length_histogram.front() == 1);
    CHECK(w.length_histogram.back() == 1);
    CHECK(std::equal(w.length_histogram.begin(), w.length_histogram.end(), w.length_histogram.rbegin()));
    CHECK(w.group_order == weyl_order_by_degrees(s));
  }
}

TEST_CASE("reducible systems enumerate as products") {
  const auto a1 = spec(Family::A, 1), a2 = spec(Family::A, 2), b2 = spec(Family::B, 2), g2 = spec(Family::G, 2);
  const auto pairs = {std::pair{a1, a2}, std::pair{b2, g2}, std::pair{a1, a1}};
  for (const auto& [x, y] : pairs) {
    RootSystemSpec both = RootSystemSpec::make({x.components[0], y.components[0]});
    const WeylGroupData w = weyl_enumerate(both);
    const WeylGroupData wx = weyl_enumerate(x), wy = weyl_enumerate(y);
    CHECK(w.group_order == wx.group_order * wy.group_order);
    CHECK(poincare_polynomial(w) == mul(from_hist(wx.length_histogram), from_hist(wy.length_histogram)));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(weyl_enumerate(spec(Family::E, 8)), TooLarge);
  CHECK_THROWS_AS(weyl_enumerate(spec(Family::A, 4), 100), TooLarge);
  try {
    weyl_enumerate(spec(Family::E, 8));
  } catch (const TooLarge& e) {
    CHECK(e.order() == 696729600u);
  }
  // fallback keeps the catalog total
  CHECK(weyl_poincare(spec(Family::E, 8)) == poincare_by_degrees(spec(Family::E, 8)));
}

TEST_CASE("enumeration is deterministic") {
  const auto s = spec(Family::D, 4);
  CHECK(weyl_enumerate(s).length_histogram == weyl_enumerate(s).length_histogram);
}
