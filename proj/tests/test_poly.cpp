#include <gtest/gtest.h>

#include <random>

#include "jetforge/error.hpp"
#include "jetforge/polynomial.hpp"
#include "jetforge/series.hpp"
#include "jetforge/text.hpp"
#include "support/random_poly.hpp"

using namespace jetforge;
using jetforge::testing::random_family;
using jetforge::testing::random_modular_poly;
using jetforge::testing::random_rational_poly;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial<Rational> P(const std::string& text, const std::vector<std::string>& vars = xy) {
  return parse_rational(text, vars);
}

Polynomial<ModInt> P_mod(const std::string& text, std::uint32_t q, const std::vector<std::string>& vars = xy) {
  return reduce_mod(parse_rational(text, vars), q);
}

}  // namespace

TEST(Parse, PhamBrieskornSupport) {
  const auto f = P("x1^4 + x2^4 + x3^4", {"x1", "x2", "x3"});
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f.coefficient(ExponentVector{4, 0, 0}), Rational(1));
  EXPECT_EQ(f.coefficient(ExponentVector{0, 4, 0}), Rational(1));
  EXPECT_EQ(f.coefficient(ExponentVector{0, 0, 4}), Rational(1));
}

TEST(Parse, ZeroIsEmpty) {
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(to_string(P("0"), xy), "0");
  EXPECT_TRUE(P("x - x").is_zero());
}

TEST(Parse, BinomialSquareCoefficients) {
  const auto f = P("x1^2 + 2*x1*x2 + x2^2", {"x1", "x2"});
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f.coefficient(ExponentVector{2, 0}), Rational(1));
  EXPECT_EQ(f.coefficient(ExponentVector{1, 1}), Rational(2));
  EXPECT_EQ(f.coefficient(ExponentVector{0, 2}), Rational(1));
}

TEST(Parse, GrammarVariants) {
  EXPECT_EQ(P("-x + 3/4 y"), P("3/4*y - x"));
  EXPECT_EQ(P("2 x^2 y"), P("2*x*x*y"));
  EXPECT_EQ(P(" x ^ 2 "), P("x^2"));
  EXPECT_EQ(P("-3"), Polynomial<Rational>::constant(rational_ring(2), Rational(-3)));
}

TEST(Parse, ParametersAsCoefficients) {
  const Symbols symbols({"x", "y"}, {"s"});
  const auto F = parse("x^4 + s*y + s", symbols);
  const auto G = parse("s y + x^4 + s", symbols);
  EXPECT_EQ(F, G);
  EXPECT_TRUE(mentions_parameters(F));
  EXPECT_EQ(F.coefficient(ExponentVector{0, 1}), ParamPoly::variable(rational_ring(1), 0));
}

TEST(Parse, Errors) {
  try {
    P("x + w");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
    EXPECT_NE(std::string(e.what()).find("unknown identifier 'w'"), std::string::npos);
  }
  EXPECT_THROW(P("x^-2"), ParseError);
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("x ^"), ParseError);
  EXPECT_THROW(P("x y +* 2"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(Symbols({"x", "x"}), InputError);
  EXPECT_THROW(Symbols({"x"}, {"x"}), InputError);
  EXPECT_THROW(Symbols({"2x"}), InputError);
}

TEST(Print, CanonicalForm) {
  EXPECT_EQ(to_string(P("y^3 + x^2"), xy), "y^3 + x^2");
  EXPECT_EQ(to_string(P("x"), xy), "x");
  EXPECT_EQ(to_string(P("-x + 1/2"), xy), "-x + 1/2");
  EXPECT_EQ(to_string(P("x^2 - 2*x*y + y^2"), xy), "x^2 - 2*x*y + y^2");
  EXPECT_EQ(to_string(P_mod("x - 1", 5), xy), "x + 4");
}

TEST(Arith, DifferenceOfSquares) { EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2")); }

TEST(Arith, AdditiveIdentity) {
  const auto f = P("3*x^2*y - 7/5");
  EXPECT_EQ(f + P("0"), f);
}

TEST(Arith, FrobeniusOverF3) { EXPECT_EQ(P_mod("x + y", 3).pow(3), P_mod("x^3 + y^3", 3)); }

TEST(Arith, DomainMismatch) {
  EXPECT_THROW(P_mod("x", 3) + P_mod("x", 5), DomainError);
  EXPECT_THROW(P("x") + P("x", xyz), DomainError);
  EXPECT_THROW(ModInt(1, ModInt::domain_for(3)) * ModInt(1, ModInt::domain_for(5)), DomainError);
  EXPECT_THROW(ModInt::domain_for(9), InputError);
}

TEST(Arith, Scale) {
  EXPECT_EQ(P("x + 2*y").scale(Rational(1, 2)), P("1/2*x + y"));
  EXPECT_TRUE(P("x").scale(Rational(0)).is_zero());
}

TEST(Arith, ReduceModRejectsDenominator) {
  EXPECT_THROW(reduce_mod(P("1/3*x"), 3), DomainError);
  EXPECT_EQ(reduce_mod(P("1/2*x"), 3), P_mod("2*x", 3));
}

TEST(SubstituteSeries, SquareOrderOne) {
  const auto ring = rational_ring(2);  // x0, x1
  const TruncatedSeries<Rational> x({Polynomial<Rational>::variable(ring, 0), Polynomial<Rational>::variable(ring, 1)});
  const auto f = P("x^2", {"x"});
  const auto s = substitute_series<Rational>(f, std::span(&x, 1), 1);
  EXPECT_EQ(s[0], P("a^2", {"a", "b"}));
  EXPECT_EQ(s[1], P("2*a*b", {"a", "b"}));
}

TEST(SubstituteSeries, CuspOrderTwo) {
  const std::vector<std::string> names{"x0", "y0", "x1", "y1", "x2", "y2"};
  const auto ring = rational_ring(6);
  auto var = [&](std::size_t i) { return Polynomial<Rational>::variable(ring, i); };
  const std::vector<TruncatedSeries<Rational>> arcs{TruncatedSeries<Rational>({var(0), var(2), var(4)}),
                                                    TruncatedSeries<Rational>({var(1), var(3), var(5)})};
  const auto s = substitute_series<Rational>(P("x^2 + y^3"), arcs, 2);
  EXPECT_EQ(s[0], P("x0^2 + y0^3", names));
  EXPECT_EQ(s[1], P("2*x0*x1 + 3*y0^2*y1", names));
  EXPECT_EQ(s[2], P("x1^2 + 2*x0*x2 + 3*y0^2*y2 + 3*y0*y1^2", names));
}

TEST(SubstituteSeries, ConstantHasNoHigherTerms) {
  const auto ring = rational_ring(3);
  const TruncatedSeries<Rational> x({Polynomial<Rational>::variable(ring, 0), Polynomial<Rational>::variable(ring, 1),
                                     Polynomial<Rational>::variable(ring, 2)});
  const auto s = substitute_series<Rational>(P("7", {"x"}), std::span(&x, 1), 2);
  EXPECT_EQ(s[0], Polynomial<Rational>::constant(ring, Rational(7)));
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_TRUE(s[2].is_zero());
}

TEST(SubstituteSeries, ArityAndOrderErrors) {
  const auto ring = rational_ring(2);
  const TruncatedSeries<Rational> x({Polynomial<Rational>::variable(ring, 0), Polynomial<Rational>::variable(ring, 1)});
  EXPECT_THROW(substitute_series<Rational>(P("x*y"), std::span(&x, 1), 1), InputError);
  EXPECT_THROW(substitute_series<Rational>(P("x", {"x"}), std::span(&x, 1), 2), InputError);
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(P("x^2 + y^3").partial_derivative(0), P("2*x"));
  EXPECT_EQ(P("x^2 + y^3").partial_derivative(1), P("3*y^2"));
  EXPECT_TRUE(P("5").partial_derivative(0).is_zero());
  EXPECT_THROW(P("x").partial_derivative(2), InputError);
}

TEST(Evaluate, Examples) {
  const auto d5 = ModInt::domain_for(5);
  const std::vector<ModInt> ones{ModInt(1, d5), ModInt(1, d5)};
  EXPECT_EQ(evaluate(P_mod("x^2 + y^3", 5), ones).value(), 2U);
  const auto f = P_mod("3*x*y + x + 4", 5);
  const std::vector<ModInt> origin{ModInt(0, d5), ModInt(0, d5)};
  EXPECT_EQ(evaluate(f, origin), f.constant_term());
  const auto d3 = ModInt::domain_for(3);
  const std::vector<ModInt> p{ModInt(1, d3), ModInt(1, d3), ModInt(1, d3)};
  EXPECT_EQ(evaluate(P_mod("x^4 + y^4 + z^4", 3, xyz), p).value(), 0U);
  EXPECT_THROW(evaluate(P_mod("x", 3), ones), DomainError);
}

template <class Poly>
void expect_ring_laws(const Poly& a, const Poly& b, const Poly& c) {
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(RingLaws, Rational) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i)
    expect_ring_laws(random_rational_poly(rng, 3, 3, 4), random_rational_poly(rng, 3, 3, 4),
                     random_rational_poly(rng, 3, 3, 4));
}

TEST(RingLaws, Modular) {
  std::mt19937 rng(12);
  for (int i = 0; i < 200; ++i)
    expect_ring_laws(random_modular_poly(rng, 3, 3, 4, 7), random_modular_poly(rng, 3, 3, 4, 7),
                     random_modular_poly(rng, 3, 3, 4, 7));
}

TEST(RingLaws, Parametric) {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i)
    expect_ring_laws(random_family(rng, 2, 2, 3, 3), random_family(rng, 2, 2, 3, 3), random_family(rng, 2, 2, 3, 3));
}

TEST(RoundTrip, ParsePrint) {
  std::mt19937 rng(14);
  const Symbols symbols({"x", "y", "z"}, {"s", "t"});
  for (int i = 0; i < 300; ++i) {
    const auto f = random_rational_poly(rng, 3, 5, 6);
    EXPECT_EQ(parse_rational(to_string(f, xyz), xyz), f) << to_string(f, xyz);
    const auto F = random_family(rng, 3, 2, 4, 4);
    EXPECT_EQ(parse(to_string(F, symbols), symbols), F) << to_string(F, symbols);
  }
}

TEST(SubstituteSeries, IsRingHomomorphism) {
  std::mt19937 rng(15);
  const std::size_t m = 3;
  const auto ring = modular_ring(2 * (m + 1), 7);
  std::vector<TruncatedSeries<ModInt>> arcs;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Polynomial<ModInt>> c;
    for (std::size_t j = 0; j <= m; ++j) c.push_back(Polynomial<ModInt>::variable(ring, j * 2 + i));
    arcs.emplace_back(std::move(c));
  }
  for (int i = 0; i < 60; ++i) {
    const auto f = random_modular_poly(rng, 2, 3, 3, 7);
    const auto g = random_modular_poly(rng, 2, 3, 3, 7);
    const auto sf = substitute_series<ModInt>(f, arcs, m);
    const auto sg = substitute_series<ModInt>(g, arcs, m);
    EXPECT_EQ(substitute_series<ModInt>(f * g, arcs, m), sf * sg);
    EXPECT_EQ(substitute_series<ModInt>(f + g, arcs, m), sf + sg);
  }
}

TEST(Specialization, CommutesWithArithmetic) {
  std::mt19937 rng(16);
  for (int i = 0; i < 100; ++i) {
    const auto F = random_family(rng, 2, 2, 3, 3);
    const auto G = random_family(rng, 2, 2, 3, 3);
    const std::vector<std::optional<Rational>> values{jetforge::testing::random_rational(rng),
                                                      jetforge::testing::random_rational(rng)};
    EXPECT_EQ(specialize_parameters(F + G, values), specialize_parameters(F, values) + specialize_parameters(G, values));
    EXPECT_EQ(specialize_parameters(F * G, values), specialize_parameters(F, values) * specialize_parameters(G, values));
  }
}

TEST(Specialization, MissingParameter) {
  const Symbols symbols({"x"}, {"s", "t"});
  const auto F = parse("s*x + t", symbols);
  const std::vector<std::optional<Rational>> partial{Rational(1), std::nullopt};
  EXPECT_THROW(specialize_parameters(F, partial), InputError);
  const auto G = parse("s*x", symbols);
  EXPECT_EQ(specialize_parameters(G, partial), P("x", {"x"}));
}
