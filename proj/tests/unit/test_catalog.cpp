#include "doctest.h"

#include "f1zeta/catalog.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/oracle.hpp"
#include "support/oracles.hpp"

using namespace f1zeta;
namespace t = f1zeta::testing;

namespace {

IntPolynomial from_coeffs(const t::Coeffs& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("counting polynomials of basic entries") {
  CHECK(counting_polynomial(parse("P(1)")) == IntPolynomial{1, 1});
  CHECK(counting_polynomial(parse("P(0)")) == IntPolynomial{1});
  CHECK(counting_polynomial(parse("A(3)")) == IntPolynomial{0, 0, 0, 1});
  CHECK(counting_polynomial(parse("T(2)")) == IntPolynomial{1, -2, 1});
  CHECK(counting_polynomial(parse("SL(2)")) == IntPolynomial{0, -1, 0, 1});
  CHECK(counting_polynomial(parse("GL(2)")) == IntPolynomial{0, 1, -1, -1, 1});
  CHECK(counting_polynomial(parse("SL(3)")) == IntPolynomial{0, 0, 0, 1, 0, -1, -1, 0, 1});
  CHECK(counting_polynomial(parse("Gr(2,4)")) == IntPolynomial{1, 1, 2, 1, 1});
  CHECK(counting_polynomial(parse("Flag(A2)")) == IntPolynomial{1, 2, 2, 1});
  CHECK(counting_polynomial(parse("GL(1)")) == IntPolynomial{-1, 1});
  CHECK(counting_polynomial(parse("SL(1)")) == IntPolynomial{1});
}

TEST_CASE("SL and GL counts match small brute-force values") {
  const IntPolynomial sl2 = counting_polynomial(parse("SL(2)"));
  CHECK(eval_int(sl2, 2) == 6);
  CHECK(eval_int(sl2, 3) == 24);
  const IntPolynomial gl2 = counting_polynomial(parse("GL(2)"));
  CHECK(eval_int(gl2, 2) == 6);
  CHECK(eval_int(gl2, 3) == 48);
  CHECK(eval_int(counting_polynomial(parse("Gr(2,4)")), 2) == 35);
}

TEST_CASE("Gaussian binomials agree with the q-Pascal recurrence") {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(counting_polynomial(SchemeDescriptor::grassmannian(k, n)) == from_coeffs(t::gaussian_binomial_pascal(n, k)));
    }
}

TEST_CASE("group_shape") {
  auto s = group_shape(parse("SL(2)"));
  CHECK(s.rank_r == 1);
  CHECK(s.num_positive_roots_N == 1);
  CHECK(s.dimension_d == 3);
  s = group_shape(parse("GL(2)"));
  CHECK((s.rank_r == 2 && s.num_positive_roots_N == 1 && s.dimension_d == 4));
  s = group_shape(parse("SL(3)"));
  CHECK((s.rank_r == 2 && s.num_positive_roots_N == 3 && s.dimension_d == 8));
  CHECK(counting_polynomial(parse("SL(3)")).degree() == 8);
  s = group_shape(parse("T(3)"));
  CHECK((s.rank_r == 3 && s.num_positive_roots_N == 0 && s.dimension_d == 3));
  s = group_shape(parse("SL(2)xGroup(G2,torus=1)"));
  CHECK((s.rank_r == 4 && s.num_positive_roots_N == 7 && s.dimension_d == 18));
  CHECK_THROWS_AS(group_shape(parse("P(2)")), NotAGroup);
  CHECK_THROWS_AS(group_shape(parse("SL(2)xP(1)")), NotAGroup);
}

TEST_CASE("betti_from_counting") {
  auto b = betti_from_counting(IntPolynomial{1, 1, 1}, 2);
  CHECK(b.b == std::vector<BigInt>{1, 0, 1, 0, 1});
  b = betti_from_counting(IntPolynomial{1, 1, 2, 1, 1}, 4);
  CHECK(b.b == std::vector<BigInt>{1, 0, 1, 0, 2, 0, 1, 0, 1});
  CHECK_THROWS_AS(betti_from_counting(IntPolynomial{0, -1, 0, 1}, 3), NotEffective);
  CHECK_THROWS_AS(betti_from_counting(IntPolynomial{1, 2}, 1), DualityViolation);
  CHECK_THROWS_AS(betti_from_counting(IntPolynomial{1, 1, 1}, 1), DualityViolation);
}

TEST_CASE("euler_characteristic") {
  for (int n = 0; n <= 8; ++n) CHECK(euler_characteristic(counting_polynomial(SchemeDescriptor::projective_space(n))) == n + 1);
  CHECK(euler_characteristic(counting_polynomial(parse("Gr(2,4)"))) == 6);
  for (const char* g : {"SL(2)", "GL(3)", "Group(G2)", "Group(B3,torus=2)", "T(1)"})
    CHECK(euler_characteristic(counting_polynomial(parse(g))) == 0);
}

TEST_CASE("smooth projective entries have valid Betti vectors") {
  std::vector<SchemeDescriptor> entries;
  for (int n = 0; n <= 8; ++n) entries.push_back(SchemeDescriptor::projective_space(n));
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) entries.push_back(SchemeDescriptor::grassmannian(k, n));
  for (const char* f : {"Flag(A1)", "Flag(A2)", "Flag(A3)", "Flag(B2)", "Flag(G2)", "Flag(F4)", "P(2)xGr(2,4)"})
    entries.push_back(parse(f));
  for (const auto& d : entries) {
    CAPTURE(d.to_string());
    CHECK(d.is_smooth_projective);
    const auto b = betti_from_counting(counting_polynomial(d), d.dimension);
    CHECK(b.b.size() == std::size_t(2 * d.dimension + 1));
  }
}

TEST_CASE("group counting polynomials are divisible by q^N and (q-1)^r") {
  for (const char* g : {"SL(2)", "GL(3)", "SL(4)", "Group(B3)", "Group(C4,torus=1)", "Group(D4,torus=2)",
                        "Group(G2)", "Group(F4)", "Group(E6)", "SL(2)xSL(3)", "T(2)"}) {
    CAPTURE(g);
    const SchemeDescriptor d = parse(g);
    const GroupShape s = group_shape(d);
    const IntPolynomial p = counting_polynomial(d);
    for (long i = 0; i < s.num_positive_roots_N; ++i) CHECK(p.coefficient(i) == 0);
    auto [quot, rem] = divmod(p, pow(IntPolynomial::q_minus_one(), static_cast<unsigned>(s.rank_r)));
    CHECK(rem.is_zero());
    CHECK(p.degree() == s.dimension_d);
  }
}

TEST_CASE("products multiply and dimensions add") {
  const char* names[] = {"P(2)", "Gr(2,4)", "SL(2)", "T(1)", "A(2)", "Flag(A2)"};
  for (const char* a : names)
    for (const char* b : names) {
      const SchemeDescriptor da = parse(a), db = parse(b);
      const SchemeDescriptor prod = SchemeDescriptor::product(da, db);
      CHECK(counting_polynomial(prod) == mul(counting_polynomial(da), counting_polynomial(db)));
      CHECK(prod.dimension == da.dimension + db.dimension);
      CHECK(prod.is_smooth_projective == (da.is_smooth_projective && db.is_smooth_projective));
    }
}

TEST_CASE("degree matches the stored dimension") {
  CHECK(parse("P(5)").dimension == 5);
  CHECK(parse("A(4)").dimension == 4);
  CHECK(parse("T(3)").dimension == 3);
  CHECK(parse("Gr(2,5)").dimension == 6);
  CHECK(parse("Flag(B3)").dimension == 9);
  CHECK(parse("GL(3)").dimension == 9);
  CHECK(counting_polynomial(parse("Flag(E8)")).degree() == 120);
  CHECK(counting_polynomial(parse("Group(E8)")).degree() == 248);
}

TEST_CASE("full flags in F_p^n match the oracle") {
  for (const char* f : {"Flag(A1)", "Flag(A2)"})
    for (int p : {2, 3, 5, 7}) {
      const SchemeDescriptor d = parse(f);
      CHECK(count_points(d, p) == eval_int(counting_polynomial(d), p));
    }
}

TEST_CASE("descriptor factories validate ranges") {
  CHECK_THROWS_AS(SchemeDescriptor::torus(0), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::grassmannian(3, 2), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::grassmannian(-1, 2), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::projective_space(-1), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::general_linear(0), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::projective_space(65), InvalidRank);
  CHECK_THROWS_AS(SchemeDescriptor::reductive_group(RootSystemSpec::single(Family::A, 1), -1), InvalidRank);
}
