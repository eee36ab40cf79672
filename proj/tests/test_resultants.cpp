#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace spf;
using namespace spf::test;

namespace {

const DiffOp d = DiffOp::d();

DiffOp A1() { return op({"-24/x^4", "24/x^3", "-8/x^2", "0", "1"}); }
DiffOp A2() { return op({"80/x^5", "-80/x^4", "40/x^3", "-10/x^2", "0", "1"}); }
DiffOp planar_A1() { return op({"0", "40/x^3", "-20/x^2", "0", "1"}); }

SpectralPair pair_LA1(const Rat& h) { return {boussinesq_operator(nonplanar(h)), A1(), Var::Lambda, Var::Mu}; }
SpectralPair pair_LA2(const Rat& h) { return {boussinesq_operator(nonplanar(h)), A2(), Var::Lambda, Var::Gamma}; }
SpectralPair pair_A1A2() { return {A1(), A2(), Var::Mu, Var::Gamma}; }

}  // namespace

TEST_CASE("Sylvester matrix shapes") {
  CHECK(sylvester_s0(pair_LA1(0)).rows() == 7);
  CHECK(sylvester_s0(pair_LA1(0)).cols() == 7);
  CHECK(sylvester_s0(pair_A1A2()).rows() == 9);
  CHECK(sylvester_s1(pair_LA1(0)).rows() == 5);
  CHECK(sylvester_s1(pair_LA1(0)).cols() == 6);
  CHECK(sylvester_s1(pair_LA2(0)).rows() == 6);
  CHECK(sylvester_s1(pair_LA2(0)).cols() == 7);
  CHECK(sylvester_s1(pair_A1A2()).rows() == 7);
  CHECK(sylvester_s1(pair_A1A2()).cols() == 8);
  CHECK_THROWS_AS(sylvester_s1({d, DiffOp::d(3), Var::Lambda, Var::Mu}), OrderTooSmall);
}

TEST_CASE("Sylvester matrix of two first-order operators") {
  const PolyMatrix m = sylvester_s0({d, d, Var::Lambda, Var::Mu});
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 0) == CurvePoly(1));
  CHECK(m(0, 1) == -CurvePoly::var(Var::Lambda));
  CHECK(m(1, 0) == CurvePoly(1));
  CHECK(m(1, 1) == -CurvePoly::var(Var::Mu));
  CHECK(diff_resultant({d, d, Var::Lambda, Var::Mu}) == cp("lambda - mu"));
}

TEST_CASE("shifted rows carry the indeterminate on their own column") {
  const PolyMatrix m = sylvester_s0({DiffOp::d(2), d, Var::Lambda, Var::Mu});
  REQUIRE(m.rows() == 3);
  // rows: p - lambda, d(q - mu), q - mu over columns d^2, d, 1
  CHECK(m(0, 2) == -CurvePoly::var(Var::Lambda));
  CHECK(m(1, 0) == CurvePoly(1));
  CHECK(m(1, 1) == -CurvePoly::var(Var::Mu));
  CHECK(m(2, 2) == -CurvePoly::var(Var::Mu));
  CHECK(equal_up_to_sign(determinant(m), cp("lambda - mu^2")));
}

TEST_CASE("resultants of the order (3, 4, 5) example") {
  for (const Rat h : {Rat(0), Rat(2), Rat(-1, 3)}) {
    const Bindings b = with_h(h);
    CHECK(equal_up_to_sign(diff_resultant(pair_LA1(h)), cp("-mu^3 + (lambda-h)^4", b)));
    CHECK(equal_up_to_sign(diff_resultant(pair_LA2(h)), cp("-gamma^3 - (h-lambda)^5", b)));
  }
  CHECK(equal_up_to_sign(diff_resultant(pair_A1A2()), cp("gamma^4 - mu^5")));
}

TEST_CASE("resultant of the planar example") {
  for (const Rat h : {Rat(0), Rat(3)}) {
    const SpectralPair pair{boussinesq_operator(planar(h)), planar_A1(), Var::Lambda, Var::Mu};
    CHECK(equal_up_to_sign(diff_resultant(pair), cp("-mu^3 + (lambda-h)^4", with_h(h))));
  }
}

TEST_CASE("non-commuting pairs are rejected") {
  const SpectralPair pair{boussinesq_operator(nonplanar(0)), op({"0", "0", "1/x"}), Var::Lambda, Var::Mu};
  CHECK_THROWS_AS(diff_resultant(pair), NotXFree);
}

TEST_CASE("first subresultants") {
  for (const Rat h : {Rat(0), Rat(2)}) {
    const Bindings b = with_h(h);
    CHECK(equal_up_to_sign(first_subresultant(pair_LA1(h)).phi1, cp("(lambda-h)^2 - 2*mu/x^2 + 4*(lambda-h)/x^3", b)));
  }
  CHECK(equal_up_to_sign(first_subresultant(pair_A1A2()).phi1, cp("mu^3 - 2*gamma^2/x^2 + 4*gamma*mu/x^3")));
  const SpectralPair planar_pair{boussinesq_operator(planar(0)), planar_A1(), Var::Lambda, Var::Mu};
  const Subresultant s = first_subresultant(planar_pair);
  const Bindings h0 = with_h(0);
  CHECK(equal_up_to_sign(s.phi0, cp("mu*(h-lambda) - 5*mu/x^3 - 20*(h-lambda)/x^4 - 300/x^7", h0)));
  CHECK(equal_up_to_sign(s.phi1, cp("(h-lambda)^2 - 5*mu/x^2 - 100/x^6", h0)));
}

TEST_CASE("Burchnall-Chaundy vanishing for all three pairs") {
  const DiffOp l = boussinesq_operator(nonplanar(0));
  for (const SpectralPair& p : {pair_LA1(0), pair_LA2(0), pair_A1A2()})
    CHECK(operator_poly_eval(diff_resultant(p), l, A1(), A2()).is_zero());
}

TEST_CASE("subresultant ratio is the right gcd at curve points") {
  // Points (t^3, t^4, t^5) of the h = 0 curve.
  Random r(41);
  const DiffOp l = boussinesq_operator(nonplanar(0));
  const std::array<Subresultant, 3> s{first_subresultant(pair_LA1(0)), first_subresultant(pair_LA2(0)),
                                      first_subresultant(pair_A1A2())};
  for (int k = 0; k < 20; ++k) {
    const Rat t = r.nonzero_rational(4);
    const Point3 p{t * t * t, t * t * t * t, t * t * t * t * t};
    const RationalFunction phi = eval_point(s[0].phi0, p) / eval_point(s[0].phi1, p);
    for (const auto& si : s) CHECK(eval_point(si.phi0, p) / eval_point(si.phi1, p) == phi);
    CHECK(right_gcd(l - DiffOp(p[0]), A1() - DiffOp(p[1])) == d + DiffOp(phi));
    CHECK(right_gcd(A1() - DiffOp(p[1]), A2() - DiffOp(p[2])) == d + DiffOp(phi));
  }
}

TEST_CASE("sign normalization") {
  CHECK(sign_normalized(cp("mu^3 - lambda^4"), Var::Mu) == cp("-mu^3 + lambda^4"));
  CHECK(sign_normalized(cp("-mu^3 + lambda^4"), Var::Mu) == cp("-mu^3 + lambda^4"));
  CHECK(sign_normalized(cp("gamma^4 - mu^5"), Var::Gamma) == cp("-gamma^4 + mu^5"));
  CHECK(sign_normalized(cp("lambda*mu"), Var::Mu) == cp("lambda*mu"));
}
