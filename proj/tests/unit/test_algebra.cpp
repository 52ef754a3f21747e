#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "splitquat/errors.hpp"

using namespace splitquat;
using fixtures::qt;

namespace {
const Signature S = Signature::Split;
const Signature H = Signature::Hamiltonian;
}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse_exact("3/6") == Scalar::rational(1, 2));
  CHECK(Scalar::rational(-8, 5).to_string() == "-8/5");
  CHECK_THROWS(static_cast<void>(Scalar::parse_exact("1/0")));
  CHECK_THROWS(static_cast<void>(Scalar::parse_exact("abc")));
}

TEST_CASE("float scalars compare within the tolerance") {
  Scalar a = Scalar::floating(0.1 + 0.2), b = Scalar::floating(0.3);
  CHECK(a == b);
  CHECK_FALSE(a == Scalar::floating(0.31));
  CHECK(Scalar::rational(1, 3).to_backend(Backend::Float).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("basis products") {
  auto i = Quaternion::basis(1, S), j = Quaternion::basis(2, S), k = Quaternion::basis(3, S);
  auto one = Quaternion::one(S, Backend::Exact);
  CHECK(i * i == -one);
  CHECK(j * j == one);
  CHECK(k * k == one);
  CHECK(i * j == k);
  CHECK(j * k == -i);
  CHECK(k * i == j);
  CHECK(i * j * k == one);

  auto hi = Quaternion::basis(1, H), hj = Quaternion::basis(2, H), hk = Quaternion::basis(3, H);
  auto hone = Quaternion::one(H, Backend::Exact);
  CHECK(hj * hj == -hone);
  CHECK(hk * hk == -hone);
  CHECK(hi * hj == hk);
  CHECK(hi * hj * hk == -hone);
}

TEST_CASE("products of the example factors") {
  CHECK(qt(1, 0, 1, 0, S) * qt(1, 0, 0, 2, S) == qt(1, -2, 1, 2, S));
  CHECK(qt(1, 0, 1, 0, H) * qt(1, 0, 0, 2, H) == qt(1, 2, 1, 2, H));
}

TEST_CASE("multiplication agrees with the matrix model") {
  std::mt19937_64 rng(7);
  for (Signature sig : {S, H}) {
    for (int n = 0; n < 200; ++n) {
      auto a = oracle::random_quaternion(rng, sig), b = oracle::random_quaternion(rng, sig);
      CHECK(a * b == oracle::product(a, b));
      CHECK(a.norm().rational() == oracle::norm(a));
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
      CHECK(a.conjugate().conjugate() == a);
    }
  }
}

TEST_CASE("conjugate, norm, inverse, vector part") {
  CHECK(qt(1, 1, -1, 0).conjugate() == qt(1, -1, 1, 0));
  CHECK(qt(5, 0, 0, 0).conjugate() == qt(5, 0, 0, 0));
  CHECK(qt(1, -2, 1, 2).norm() == Scalar(0L));
  CHECK(qt(0, 0, 1, 0).norm() == Scalar(-1L));
  CHECK(qt(1, 2, 1, 2, H).norm() == Scalar(10L));

  CHECK(qt(0, 0, 1, 0).inverse() == qt(0, 0, 1, 0));
  auto h = qt(0, 0, -1, -2);
  CHECK(h.inverse() == qt(0, 0, mpq_class(-1, 5), mpq_class(-2, 5)));
  CHECK(h * h.inverse() == Quaternion::one(S, Backend::Exact));
  CHECK_THROWS_AS(static_cast<void>(qt(0, 1, 1, 0).inverse()), NonInvertible);

  CHECK(qt(1, 0, 0, 2).vector_part() == qt(0, 0, 0, 2));
  CHECK(qt(1, 0, mpq_class(8, 5), mpq_class(6, 5)).vector_part() == qt(0, 0, mpq_class(8, 5), mpq_class(6, 5)));
  CHECK(qt(7, 0, 0, 0).vector_part().is_zero());
}

TEST_CASE("mixed operands are rejected") {
  CHECK_THROWS_AS(qt(1, 0, 0, 0, S) * qt(1, 0, 0, 0, H), MismatchError);
  CHECK_THROWS_AS(qt(1, 0, 0, 0) + qt(1, 0, 0, 0).to_float(), MismatchError);
}

TEST_CASE("printing") {
  CHECK(qt(1, -2, 1, 2).to_string() == "1-2i+j+2k");
  CHECK(qt(1, 0, mpq_class(8, 5), mpq_class(6, 5)).to_string() == "1+8/5j+6/5k");
  CHECK(qt(0, 0, 0, 0).to_string() == "0");
  CHECK(qt(0, -1, 0, 0).to_string() == "-i");
}
