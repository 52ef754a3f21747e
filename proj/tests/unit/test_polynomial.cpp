#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "splitquat/errors.hpp"
#include "splitquat/roots.hpp"

using namespace splitquat;
using fixtures::qt;

namespace {

const Signature S = Signature::Split;

std::vector<long> root_values(const RootReport& r) {
  std::vector<long> out;
  for (const auto& x : r.real) {
    REQUIRE_FALSE(x.is_surd());
    REQUIRE(x.base.rational().get_den() == 1);
    out.push_back(x.base.rational().get_num().get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("product of linear factors") {
  for (Signature sig : {Signature::Split, Signature::Hamiltonian}) {
    QuatPoly p = QuatPoly::linear(qt(1, 0, 1, 0, sig)) * QuatPoly::linear(qt(1, 0, 0, 2, sig));
    CHECK(p == fixtures::example(sig));
    CHECK(p * QuatPoly({Quaternion::one(sig, Backend::Exact)}) == p);
  }
}

TEST_CASE("polynomial product agrees with the matrix model coefficientwise") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    auto a0 = oracle::random_quaternion(rng, S), a1 = oracle::random_quaternion(rng, S);
    auto b0 = oracle::random_quaternion(rng, S), b1 = oracle::random_quaternion(rng, S);
    QuatPoly p({a0, a1}, S, Backend::Exact), q({b0, b1}, S, Backend::Exact);
    QuatPoly r = p * q;
    CHECK(r.coeff(0) == oracle::product(a0, b0));
    CHECK(r.coeff(1) == oracle::product(a0, b1) + oracle::product(a1, b0));
    CHECK(r.coeff(2) == oracle::product(a1, b1));
  }
}

TEST_CASE("conjugate polynomial") {
  QuatPoly c = fixtures::example2();
  QuatPoly expected({qt(1, 2, -1, -2), qt(-2, 0, 1, 2), qt(1, 0, 0, 0)}, S, Backend::Exact);
  CHECK(c.conjugate() == expected);
  CHECK(c.conjugate().conjugate() == c);
}

TEST_CASE("norm polynomials of the examples") {
  CHECK(norm_polynomial(fixtures::example2()) == RealPoly::exact({0, 6, 1, -4, 1}));
  CHECK(norm_polynomial(fixtures::example1()) == RealPoly::exact({2, -2, 1}) * RealPoly::exact({5, -2, 1}));
  CHECK(norm_polynomial(QuatPoly::linear(qt(0, 0, 1, 0))) == RealPoly::exact({-1, 0, 1}));
}

TEST_CASE("evaluation") {
  QuatPoly c = fixtures::example2();
  CHECK(c.evaluate(Scalar(0L)) == qt(1, -2, 1, 2));
  CHECK(QuatPoly::linear(qt(0, 0, 1, 0)).evaluate(Scalar(1L)) == qt(1, 0, -1, 0));
  CHECK(c.evaluate(Scalar(2L)).norm() == norm_polynomial(c).evaluate(Scalar(2L)));
  CHECK(c.evaluate(Scalar(2L)).norm().is_zero());
}

TEST_CASE("linear zero") {
  CHECK(linear_zero(QuatPoly({qt(0, 0, 0, 1), qt(0, 0, 1, 0)}, S, Backend::Exact)) == qt(0, 1, 0, 0));
  CHECK(linear_zero(QuatPoly({qt(1, -2, 1, 2), qt(0, 0, -1, -2)}, S, Backend::Exact)) ==
        qt(1, 0, mpq_class(-3, 5), mpq_class(4, 5)));
  CHECK(linear_zero(QuatPoly::linear(qt(5, 0, 0, 0))) == qt(5, 0, 0, 0));
  CHECK_THROWS_AS(linear_zero(QuatPoly({qt(1, 0, 0, 0), qt(0, 1, 1, 0)}, S, Backend::Exact)), NonGeneric);
}

TEST_CASE("real polynomial division and gcd") {
  RealPoly a = RealPoly::exact({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
  RealPoly b = RealPoly::exact({2, -3, 1});       // (t-1)(t-2)
  auto [q, r] = divmod(a, b);
  CHECK(q == RealPoly::exact({-3, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, RealPoly::exact({-4, 0, 1})) == RealPoly::exact({-2, 1}));
  CHECK_THROWS_AS(divmod(a, RealPoly()), NonInvertible);
}

TEST_CASE("real roots") {
  RootReport e2 = real_roots(RealPoly::exact({0, 6, 1, -4, 1}));
  CHECK(root_values(e2) == std::vector<long>{-1, 0, 2, 3});
  CHECK(e2.square_free);

  RootReport e1 = real_roots(RealPoly::exact({2, -2, 1}) * RealPoly::exact({5, -2, 1}));
  CHECK(e1.real.empty());
  REQUIRE(e1.complex_quadratics.size() == 2);
  CHECK(e1.complex_quadratics[0] == RealPoly::exact({2, -2, 1}));
  CHECK(e1.complex_quadratics[1] == RealPoly::exact({5, -2, 1}));

  RootReport d = real_roots(RealPoly::exact({1, -2, 1}));
  CHECK(root_values(d) == std::vector<long>{1, 1});
  CHECK_FALSE(d.square_free);

  RootReport s = real_roots(RealPoly::exact({-1, -2, 1}));  // 1 -+ sqrt 2
  REQUIRE(s.real.size() == 2);
  CHECK(s.real[0].is_surd());
  CHECK(s.real[0].approx() == doctest::Approx(1 - std::sqrt(2.0)));
  CHECK(s.real[1].approx() == doctest::Approx(1 + std::sqrt(2.0)));

  CHECK_THROWS_AS(real_roots(RealPoly::exact({1, 0, 0, 0, 0, 1})), Unsupported);
}

TEST_CASE("float roots cluster within the tolerance") {
  RootReport r = real_roots(RealPoly::exact({0, 6, 1, -4, 1}).to_backend(Backend::Float));
  REQUIRE(r.real.size() == 4);
  CHECK(r.real[0].approx() == doctest::Approx(-1));
  CHECK(r.real[3].approx() == doctest::Approx(3));
}

TEST_CASE("quadratic divisors of the example norm") {
  auto divs = quadratic_divisors(real_roots(RealPoly::exact({0, 6, 1, -4, 1})));
  REQUIRE(divs);
  CHECK(divs->size() == 6);
  auto irr = quadratic_divisors(real_roots(RealPoly::exact({-2, 0, 1}) * RealPoly::exact({-3, 0, 1})));
  CHECK_FALSE(irr.has_value());
}
