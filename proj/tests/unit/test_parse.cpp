#include "doctest.h"

#include "f1zeta/catalog.hpp"
#include "f1zeta/errors.hpp"
#include "support/oracles.hpp"

using namespace f1zeta;
using f1zeta::testing::uniform;

namespace {

ParseError parse_error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for ", std::string(text));
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(parse("P(2)") == SchemeDescriptor::projective_space(2));
  CHECK(parse("GL(3)") == SchemeDescriptor::reductive_group(RootSystemSpec::single(Family::A, 2), 1));
  CHECK(parse("P(1)xP(1)") ==
        SchemeDescriptor::product(SchemeDescriptor::projective_space(1), SchemeDescriptor::projective_space(1)));
  CHECK(parse("Gr(2,5)xFlag(A2)") ==
        SchemeDescriptor::product(SchemeDescriptor::grassmannian(2, 5),
                                  SchemeDescriptor::flag_variety(RootSystemSpec::single(Family::A, 2))));
}

TEST_CASE("every term kind") {
  CHECK(parse("A(3)") == SchemeDescriptor::affine_space(3));
  CHECK(parse("T(2)") == SchemeDescriptor::torus(2));
  CHECK(parse("SL(4)") == SchemeDescriptor::special_linear(4));
  CHECK(parse("Group(B3)") == SchemeDescriptor::reductive_group(RootSystemSpec::single(Family::B, 3), 0));
  CHECK(parse("Group(G2,torus=2)") == SchemeDescriptor::reductive_group(RootSystemSpec::single(Family::G, 2), 2));
  CHECK(parse("Flag(C2)") == parse("Flag(B2)"));
  CHECK(parse("Group(D3)") == parse("SL(4)"));
}

TEST_CASE("keywords are case-insensitive and blanks are allowed") {
  CHECK(parse("gl(3)") == parse("GL(3)"));
  CHECK(parse("p(1)XP(1)") == parse("P(1)xP(1)"));
  CHECK(parse("flag(a2)") == parse("Flag(A2)"));
  CHECK(parse("GROUP(e6, TORUS = 1)") == parse("Group(E6,torus=1)"));
  CHECK(parse("  Gr( 2 , 4 ) x P(1) ") == parse("Gr(2,4)xP(1)"));
}

TEST_CASE("products associate to the left") {
  const SchemeDescriptor d = parse("P(1)xP(2)xP(3)");
  const auto& top = std::get<Product>(d.variant);
  CHECK(*top.right == SchemeDescriptor::projective_space(3));
  const auto& inner = std::get<Product>(top.left->variant);
  CHECK(*inner.left == SchemeDescriptor::projective_space(1));
  CHECK(*inner.right == SchemeDescriptor::projective_space(2));
}

TEST_CASE("parse errors carry offsets and expected tokens") {
  auto e = parse_error_of("P(x)");
  CHECK(e.offset() == 2);
  CHECK(e.expected() == std::vector<std::string>{"integer"});

  e = parse_error_of("Q(2)");
  CHECK(e.offset() == 0);
  CHECK(e.expected().size() == 8);

  e = parse_error_of("P(2");
  CHECK(e.offset() == 3);
  CHECK(e.expected() == std::vector<std::string>{")"});

  e = parse_error_of("P(2)+P(1)");
  CHECK(e.offset() == 4);

  e = parse_error_of("Gr(2 4)");
  CHECK(e.offset() == 5);
  CHECK(e.expected() == std::vector<std::string>{","});

  e = parse_error_of("Flag(H2)");
  CHECK(e.offset() == 5);

  e = parse_error_of("Group(A2,tours=1)");
  CHECK(e.offset() == 9);

  e = parse_error_of("");
  CHECK(e.offset() == 0);

  e = parse_error_of("P(1)x");
  CHECK(e.offset() == 5);
}

TEST_CASE("parameter ranges raise InvalidRank") {
  CHECK_THROWS_AS(parse("T(0)"), InvalidRank);
  CHECK_THROWS_AS(parse("Gr(5,4)"), InvalidRank);
  CHECK_THROWS_AS(parse("Flag(A0)"), InvalidRank);
  CHECK_THROWS_AS(parse("Flag(E9)"), InvalidRank);
  CHECK_THROWS_AS(parse("Group(G3)"), InvalidRank);
  CHECK_THROWS_AS(parse("GL(0)"), InvalidRank);
  CHECK_THROWS_AS(parse("P(99999999999)"), InvalidRank);
}

TEST_CASE("caret rendering") {
  CHECK(format_parse_error("P(x)", 2, "msg") == "P(x)\n  ^\nmsg");
}

TEST_CASE("property: canonical text parses back to the same descriptor") {
  auto random_term = []() -> SchemeDescriptor {
    switch (uniform(0, 6)) {
      case 0: return SchemeDescriptor::projective_space(static_cast<int>(uniform(0, 6)));
      case 1: return SchemeDescriptor::affine_space(static_cast<int>(uniform(0, 6)));
      case 2: return SchemeDescriptor::torus(static_cast<int>(uniform(1, 4)));
      case 3: {
        const int n = static_cast<int>(uniform(0, 6));
        return SchemeDescriptor::grassmannian(static_cast<int>(uniform(0, n)), n);
      }
      case 4: return SchemeDescriptor::general_linear(static_cast<int>(uniform(1, 4)));
      case 5: return SchemeDescriptor::special_linear(static_cast<int>(uniform(1, 4)));
      default: return SchemeDescriptor::reductive_group(RootSystemSpec::single(Family::B, static_cast<int>(uniform(2, 4))),
                                                        static_cast<int>(uniform(0, 2)));
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    SchemeDescriptor d = random_term();
    for (int k = uniform(0, 2); k > 0; --k) d = SchemeDescriptor::product(std::move(d), random_term());
    CAPTURE(d.to_string());
    CHECK(parse(d.to_string()) == d);
  }
}
