#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace spf;
using namespace spf::test;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(to_string(Rat(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rat("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  CHECK((rf("1/x") + rf("-1/x")).is_zero());
  CHECK(rf("x/(x+1)") * rf("(x+1)/x") == RationalFunction(1));
  CHECK(rf("1/x^2") + rf("1/x") == RationalFunction(UPoly(std::vector<Rat>{1, 1}), UPoly::monomial(Rat(1), 2)));
  CHECK_THROWS_AS(rf("x") / RationalFunction(), DivisionByZero);
}

TEST_CASE("normal form is canonical") {
  const RationalFunction f = rf("(x^2-1)/(2*x-2)");
  CHECK(f == rf("x/2 + 1/2"));
  CHECK(f.is_polynomial());
  CHECK(rf("3/(2*x)").denominator() == UPoly::variable());
  CHECK(rf("0/(x+1)").denominator() == UPoly(Rat(1)));
  CHECK(pow(rf("x+1"), -2) == rf("1/(x^2+2*x+1)"));
}

TEST_CASE("derivation") {
  CHECK(derive(RationalFunction(Rat(7, 3))).is_zero());
  CHECK(derive(rf("-6/x^2")) == rf("12/x^3"));
  CHECK(derive(rf("x^3+x")) == rf("3*x^2+1"));
  CHECK(derive(rf("1/x"), 3) == rf("-6/x^4"));
}

TEST_CASE("derivation obeys Leibniz and the quotient rule") {
  Random r(11);
  for (int k = 0; k < 200; ++k) {
    const RationalFunction f = r.ratfunc(), g = r.ratfunc();
    CHECK(derive(f * g) == derive(f) * g + f * derive(g));
    if (!g.is_zero()) CHECK(derive(f / g) == (derive(f) * g - f * derive(g)) / (g * g));
  }
}

TEST_CASE("squarefree decomposition") {
  using Factors = std::vector<std::pair<UPoly, int>>;
  CHECK(squarefree_decomposition(rf("x^2-1").numerator()) == Factors{{rf("x^2-1").numerator(), 1}});
  CHECK(squarefree_decomposition(rf("(x-1)^2").numerator()) == Factors{{rf("x-1").numerator(), 2}});
  CHECK(squarefree_decomposition(rf("x^3+x^2").numerator()) ==
        Factors{{rf("x+1").numerator(), 1}, {UPoly::variable(), 2}});
}

TEST_CASE("squarefree decomposition multiplies back") {
  Random r(12);
  for (int k = 0; k < 60; ++k) {
    UPoly p = r.poly(r.integer(1, 2));
    if (p.degree() < 1) continue;
    p = p * p * r.poly(1) * r.poly(r.integer(1, 3));
    if (p.degree() < 1) continue;
    UPoly back(Rat(1));
    for (const auto& [f, m] : squarefree_decomposition(p)) {
      CHECK(is_squarefree(f));
      for (int i = 0; i < m; ++i) back = back * f;
    }
    CHECK(back == p.monic());
  }
}

TEST_CASE("polynomial division and gcd") {
  Random r(13);
  for (int k = 0; k < 200; ++k) {
    const UPoly a = r.poly(r.integer(0, 5)), b = r.poly(r.integer(0, 3));
    if (b.is_zero()) continue;
    const auto [q, rem] = divmod(a, b);
    CHECK(q * b + rem == a);
    CHECK(rem.degree() < b.degree());
    if (a.is_zero()) continue;
    const UPoly g = gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(is_one(g.leading()));
  }
}

TEST_CASE("rational antiderivative") {
  CHECK(rational_antiderivative(RationalFunction()).is_zero());
  CHECK(rational_antiderivative(rf("12/x^3")) == rf("-6/x^2"));
  CHECK_THROWS_AS(rational_antiderivative(rf("1/x")), LogarithmicPart);
  CHECK_THROWS_AS(rational_antiderivative(rf("1/(x^2+1)")), LogarithmicPart);
}

TEST_CASE("antiderivative inverts derive") {
  Random r(14);
  for (int k = 0; k < 100; ++k) {
    const RationalFunction f = r.ratfunc(3) / RationalFunction(r.poly(1) * r.poly(1) + UPoly(Rat(5)));
    const RationalFunction df = derive(f);
    CHECK(derive(rational_antiderivative(df)) == df);
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate_at(rf("1/x"), Rat(2)) == Rat(1, 2));
  CHECK_THROWS_AS(evaluate_at(rf("1/x"), Rat(0)), PoleError);
  CHECK(evaluate_at(rf("(x+1)/x^2"), Rat(3)) == Rat(4, 9));
}

TEST_CASE("rendering") {
  CHECK(to_string(rf("-6/x^2")) == "-6/x^2");
  CHECK(to_string(rf("x^2/3")) == "1/3*x^2");
  CHECK(to_string(RationalFunction()) == "0");
}
