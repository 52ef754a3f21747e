#include "splitquat/roots.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

using Complex = std::complex<double>;

Real polish(const RealPoly& p, Real x) {
  std::vector<Real> c;
  for (const auto& s : p.coeffs()) c.push_back(s.to_real());
  for (int it = 0; it < 6; ++it) {
    Real f = 0, df = 0;
    for (auto k = c.size(); k-- > 0;) {
      df = df * x + f;
      f = f * x + c[k];
    }
    if (df == 0) break;
    Real step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

// ------------------------------------------------------------ exact helpers

mpz_class eval_integer(const std::vector<mpz_class>& q, const mpz_class& s) {
  mpz_class acc = 0;
  for (auto k = q.size(); k-- > 0;) acc = acc * s + q[k];
  return acc;
}

// Rational root of a monic rational polynomial of degree >= 1, if one exists.
// Substituting t = s / D with D the lcm of all denominators gives a monic
// integer polynomial, whose rational roots are integers dividing its constant
// term. Candidates come from a divisor scan (when the Cauchy bound is small)
// and from rounding numerical approximations; every candidate is checked
// exactly.
std::optional<Scalar> rational_root(const RealPoly& monic) {
  int n = monic.degree();
  mpz_class d = 1;
  for (const auto& s : monic.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), s.rational().get_den_mpz_t());
  std::vector<mpz_class> q(static_cast<std::size_t>(n + 1));
  mpz_class dpow = 1;
  for (int k = n; k >= 0; --k) {
    mpq_class v = monic.coeffs()[static_cast<std::size_t>(k)].rational() * mpq_class(dpow);
    v.canonicalize();
    q[static_cast<std::size_t>(k)] = v.get_num();
    dpow *= d;
  }
  auto make = [&](const mpz_class& s) { return Scalar(mpq_class(s, d)); };
  if (q[0] == 0) return make(0);

  mpz_class bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, mpz_class(abs(q[static_cast<std::size_t>(k)])));
  bound += 1;

  for (const auto& z : complex_roots(monic)) {
    if (std::fabs(z.imag()) > 1.0 + std::fabs(z.real())) continue;
    double approx = z.real() * d.get_d();
    if (!std::isfinite(approx)) continue;
    mpz_class centre(std::floor(approx));
    for (int off = -1; off <= 2; ++off) {
      mpz_class s = centre + off;
      if (eval_integer(q, s) == 0) return make(s);
    }
  }
  if (bound <= 20000) {
    long b = bound.get_si();
    mpz_class c0 = abs(q[0]);
    for (long v = 1; v <= b; ++v) {
      if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(v)) == 0) continue;
      for (long s : {v, -v})
        if (eval_integer(q, mpz_class(s)) == 0) return make(mpz_class(s));
    }
  }
  return std::nullopt;
}

RealPoly deflate(const RealPoly& p, const Scalar& r) {
  return divmod(p, RealPoly::linear_root(r)).first;
}

// Roots of a monic quadratic without rational roots (or any monic quadratic).
void classify_quadratic(const RealPoly& quad, RootReport& out) {
  Scalar b = quad.coeff(1), c = quad.coeff(0);
  Scalar disc = b * b - 4 * c;
  if (disc.sign() < 0) {
    out.complex_quadratics.push_back(quad);
    return;
  }
  Scalar base = -b / 2;
  if (disc.is_zero()) {
    out.real.push_back(RealRoot::rational(base));
    out.real.push_back(RealRoot::rational(base));
    return;
  }
  if (auto s = exact_sqrt(disc)) {
    out.real.push_back(RealRoot::rational(base - *s / 2));
    out.real.push_back(RealRoot::rational(base + *s / 2));
    return;
  }
  Scalar rad = disc / 4;
  out.real.push_back({base, rad, -1});
  out.real.push_back({base, rad, +1});
}

RealPoly compose_shift(const RealPoly& p, const Scalar& shift) {
  // p(y + shift)
  RealPoly lin({shift, shift.like(1)}, p.backend());
  RealPoly acc(p.backend());
  for (int k = p.degree(); k >= 0; --k) acc = acc * lin + RealPoly({p.coeff(k)}, p.backend());
  return acc;
}

// Factors a monic rational quartic with no rational roots into two rational
// quadratics when possible. Depressing to y^4 + p y^2 + q y + r and writing
// it as (y^2 + s y + u)(y^2 - s y + v) leaves s^2 as a root of the resolvent
// cubic z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
std::optional<std::pair<RealPoly, RealPoly>> split_quartic(const RealPoly& quartic) {
  Scalar shift = -quartic.coeff(3) / 4;
  RealPoly dep = compose_shift(quartic, shift);
  Scalar p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);
  auto undo = [&](const RealPoly& f) { return compose_shift(f, -shift); };

  if (q.is_zero()) {
    Scalar disc = p * p - 4 * r;
    if (auto root = exact_sqrt(disc)) {
      Scalar u = (p - *root) / 2, v = (p + *root) / 2;
      return std::make_pair(undo(RealPoly({u, u.like(0), u.like(1)}, Backend::Exact)),
                            undo(RealPoly({v, v.like(0), v.like(1)}, Backend::Exact)));
    }
  }
  RealPoly resolvent({-(q * q), p * p - 4 * r, 2 * p, Scalar(1)}, Backend::Exact);
  while (resolvent.degree() >= 1) {
    auto z = rational_root(resolvent);
    if (!z) break;
    resolvent = deflate(resolvent, *z);
    if (z->sign() <= 0) continue;
    auto s = exact_sqrt(*z);
    if (!s) continue;
    Scalar u = (p + *z - q / *s) / 2, v = (p + *z + q / *s) / 2;
    RealPoly f1({u, *s, Scalar(1)}, Backend::Exact), f2({v, -*s, Scalar(1)}, Backend::Exact);
    if (!(f1 * f2 == dep)) continue;
    return std::make_pair(undo(f1), undo(f2));
  }
  return std::nullopt;
}

RootReport exact_roots(const RealPoly& p) {
  RootReport out;
  out.backend = Backend::Exact;
  RealPoly rest = p.monic();
  RealPoly dp = p.derivative();
  out.square_free = p.degree() <= 1 || gcd(p, dp).degree() == 0;

  while (rest.degree() >= 1) {
    auto r = rational_root(rest);
    if (!r) break;
    out.real.push_back(RealRoot::rational(*r));
    rest = deflate(rest, *r);
  }
  switch (rest.degree()) {
    case 2:
      classify_quadratic(rest, out);
      break;
    case 4:
      if (auto f = split_quartic(rest)) {
        classify_quadratic(f->first, out);
        classify_quadratic(f->second, out);
      } else {
        out.unresolved.push_back(rest);
      }
      break;
    case 3:
      out.unresolved.push_back(rest);
      break;
    default:
      break;
  }
  return out;
}

RootReport float_roots(const RealPoly& p) {
  RootReport out;
  out.backend = Backend::Float;
  double root_tol = std::sqrt(tolerance());
  auto zs = complex_roots(p);
  for (std::size_t a = 0; a < zs.size(); ++a)
    for (std::size_t b = a + 1; b < zs.size(); ++b)
      if (std::abs(zs[a] - zs[b]) <= root_tol * (1.0 + std::abs(zs[a]))) out.square_free = false;

  std::vector<Real> reals;
  std::vector<Complex> upper;
  for (const auto& z : zs) {
    if (std::fabs(z.imag()) <= root_tol * (1.0 + std::abs(z)))
      reals.push_back(polish(p, z.real()));
    else if (z.imag() > 0)
      upper.push_back(z);
  }
  std::sort(reals.begin(), reals.end());
  for (Real x : reals) out.real.push_back(RealRoot::rational(Scalar::floating(x)));
  for (const auto& z : upper)
    out.complex_quadratics.emplace_back(
        std::vector<Scalar>{Scalar::floating(std::norm(z)), Scalar::floating(-2 * z.real()),
                            Scalar::floating(1.0)},
        Backend::Float);
  return out;
}

bool less_root(const RealRoot& a, const RealRoot& b) {
  if (!a.is_surd() && !b.is_surd()) return a.base < b.base;
  return a.approx() < b.approx();
}

}  // namespace

Scalar RealRoot::value() const {
  if (is_surd()) throw Unsupported("root " + to_string() + " is irrational");
  return base;
}

Scalar RealRoot::to_float() const {
  if (!is_surd()) return base.to_float();
  return Scalar::floating(base.to_real() + branch * std::sqrt(radicand.to_real()));
}

double RealRoot::approx() const {
  if (!is_surd()) return base.to_double();
  return base.to_double() + branch * std::sqrt(radicand.to_double());
}

std::string RealRoot::to_string() const {
  if (!is_surd()) return base.to_string();
  std::string out = base.is_zero() ? "" : base.to_string();
  out += branch < 0 ? "-" : (out.empty() ? "" : "+");
  out += "sqrt(" + radicand.to_string() + ")";
  return out;
}

bool same_root(const RealRoot& a, const RealRoot& b) {
  if (a.backend() != b.backend()) throw MismatchError("roots from different backends");
  if (a.backend() == Backend::Exact)
    return a.branch == b.branch && a.base == b.base && a.radicand == b.radicand;
  double x = a.approx(), y = b.approx();
  return std::fabs(x - y) <= tolerance() * (1.0 + std::fabs(x));
}

bool RootReport::has_surds() const {
  return std::any_of(real.begin(), real.end(), [](const RealRoot& r) { return r.is_surd(); });
}

RootReport real_roots(const RealPoly& p) {
  if (p.is_zero()) throw Unsupported("the zero polynomial has no root set");
  if (p.degree() > 4) throw Unsupported("root finding is limited to degree 4");
  RootReport out = p.backend() == Backend::Exact ? exact_roots(p) : float_roots(p);
  std::stable_sort(out.real.begin(), out.real.end(), less_root);
  return out;
}

std::optional<std::vector<QuadraticDivisor>> quadratic_divisors(const RootReport& report) {
  if (!report.resolved()) return std::nullopt;
  Backend b = report.backend;
  std::vector<QuadraticDivisor> out;
  auto push = [&](RealPoly poly, std::optional<std::pair<int, int>> idx) {
    for (const auto& d : out)
      if (d.poly == poly) return;
    out.push_back({std::move(poly), idx});
  };
  const auto& r = report.real;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      std::pair<int, int> idx{static_cast<int>(i), static_cast<int>(j)};
      if (!r[i].is_surd() && !r[j].is_surd()) {
        push(RealPoly::linear_root(r[i].base) * RealPoly::linear_root(r[j].base), idx);
      } else if (r[i].is_surd() && r[j].is_surd() && r[i].base == r[j].base &&
                 r[i].radicand == r[j].radicand && r[i].branch == -r[j].branch) {
        const Scalar& base = r[i].base;
        push(RealPoly({base * base - r[i].radicand, -2 * base, base.like(1)}, b), idx);
      } else {
        return std::nullopt;
      }
    }
  for (const auto& q : report.complex_quadratics) push(q, std::nullopt);
  return out;
}

RealPoly from_roots(const std::vector<RealRoot>& roots, Backend b) {
  RealPoly acc({Scalar::one(b)}, b);
  for (const auto& r : roots) acc = acc * RealPoly::linear_root(r.value());
  return acc;
}

std::vector<std::complex<double>> complex_roots(const RealPoly& p) {
  using Complex = std::complex<double>;
  int n = p.degree();
  if (n < 1) return {};
  if (n == 1) return {Complex(-p.coeff(0).to_double() / p.coeff(1).to_double(), 0.0)};
  Eigen::VectorXd c(n + 1);
  double lc = p.leading().to_double();
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).to_double() / lc;
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()[i]);
  return out;
}

}  // namespace splitquat
