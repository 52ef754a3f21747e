#include "splitquat/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

void require_monic_quadratic(const QuatPoly& c) {
  if (c.degree() != 2 || !c.is_monic())
    throw Unsupported("expected a monic quadratic polynomial, got " + c.to_string());
}

// {1, c1, c0} is independent iff the vector parts of c1 and c0 are.
bool coefficients_independent(const QuatPoly& c) {
  const Quaternion c1 = c.coeff(1), c0 = c.coeff(0);
  const Scalar &a1 = c1.x(), &a2 = c1.y(), &a3 = c1.z();
  const Scalar &b1 = c0.x(), &b2 = c0.y(), &b3 = c0.z();
  Scalar x = a2 * b3 - a3 * b2, y = a3 * b1 - a1 * b3, z = a1 * b2 - a2 * b1;
  if (c.backend() == Backend::Exact) return !(x.is_zero() && y.is_zero() && z.is_zero());
  auto len = [](double u, double v, double w) { return std::sqrt(u * u + v * v + w * w); };
  double cross_len = len(x.to_double(), y.to_double(), z.to_double());
  double scale = len(a1.to_double(), a2.to_double(), a3.to_double()) *
                 len(b1.to_double(), b2.to_double(), b3.to_double());
  return cross_len > tolerance() * std::max(scale, 1.0);
}

bool vanishes_at(const RealPoly& m, const RealRoot& r) {
  if (!r.is_surd()) return m.evaluate(r.base).is_zero();
  // m(p + s sqrt(q)) = A + s sqrt(q) B with A, B rational.
  Scalar a = Scalar::zero(Backend::Exact), b = Scalar::zero(Backend::Exact);
  Scalar pa = Scalar(1), pb = Scalar(0);  // (p + s sqrt q)^k = pa + s sqrt(q) pb
  for (int k = 0; k <= m.degree(); ++k) {
    a += m.coeff(k) * pa;
    b += m.coeff(k) * pb;
    Scalar na = pa * r.base + pb * r.radicand;
    Scalar nb = pa + pb * r.base;
    pa = na;
    pb = nb;
  }
  return a.is_zero() && b.is_zero();
}

std::optional<Label> find_label(const RealPoly& divisor, const RootReport& roots) {
  if (roots.real.size() != 4) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const auto& ri = roots.real[static_cast<std::size_t>(i)];
      const auto& rj = roots.real[static_cast<std::size_t>(j)];
      bool match;
      if (roots.backend == Backend::Exact)
        match = vanishes_at(divisor, ri) && vanishes_at(divisor, rj);
      else
        match = divisor == RealPoly::linear_root(ri.base) * RealPoly::linear_root(rj.base);
      if (match) return Label{i + 1, j + 1};
    }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

bool labels_intersect(const Label& a, const Label& b) {
  return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

bool labels_disjoint(const Label& a, const Label& b) { return !labels_intersect(a, b); }

Label complement(const Label& l) {
  Label out{};
  std::size_t n = 0;
  for (int v = 1; v <= 4; ++v)
    if (v != l[0] && v != l[1]) out.at(n++) = v;
  return out;
}

std::string to_string(const Label& l) {
  return "{" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "}";
}

GenericityReport check_generic(const QuatPoly& c) {
  require_monic_quadratic(c);
  GenericityReport rep;
  rep.coefficients_independent = coefficients_independent(c);
  if (!rep.coefficients_independent)
    rep.reasons.push_back("coefficients 1, c1, c0 are linearly dependent");

  RealPoly norm = norm_polynomial(c);
  RootReport roots = real_roots(norm);
  rep.norm_square_free = roots.square_free;
  if (!rep.norm_square_free) rep.reasons.push_back("norm polynomial " + norm.to_string() + " has a repeated factor");

  QuatPoly work = c;
  auto divisors = quadratic_divisors(roots);
  if (!divisors) {
    work = c.to_backend(Backend::Float);
    divisors = quadratic_divisors(real_roots(norm.to_backend(Backend::Float)));
  }
  rep.invertible_leading_remainders = true;
  for (const auto& d : divisors.value_or(std::vector<QuadraticDivisor>{})) {
    Quaternion lead = work.coeff(1) - Quaternion::real(d.poly.coeff(1), c.signature());
    if (lead.norm().is_zero()) {
      rep.invertible_leading_remainders = false;
      rep.reasons.push_back("C - (" + d.poly.to_string() + ") has non-invertible leading coefficient");
    }
  }
  rep.verdict = rep.coefficients_independent && rep.invertible_leading_remainders && rep.norm_square_free;
  return rep;
}

Factorization factor_from_divisor(const QuatPoly& c, const RealPoly& m) {
  require_monic_quadratic(c);
  if (m.degree() != 2 || !(m.leading() == 1))
    throw std::invalid_argument("divisor must be a monic quadratic");
  QuatPoly r = c - QuatPoly::from_real(m, c.signature());
  Quaternion h2 = linear_zero(r);
  Quaternion h1 = -c.coeff(1) - h2;
  if (!(QuatPoly::linear(h1) * QuatPoly::linear(h2) == c))
    throw std::invalid_argument(m.to_string() + " does not divide the norm polynomial of " + c.to_string());
  return {std::move(h1), std::move(h2), m, std::nullopt};
}

std::vector<Factorization> all_factorizations(const QuatPoly& c) {
  return factorize(c).factorizations;
}

Factorization complementary(const Factorization& f, const QuatPoly& c) {
  (void)c;
  Quaternion d = f.h2 - f.h1.conjugate();
  Quaternion dinv = [&] {
    try {
      return d.inverse();
    } catch (const NonInvertible&) {
      throw NonGeneric("h2 - conj(h1) = " + d.to_string() + " is not invertible");
    }
  }();
  Quaternion k2 = dinv * f.h1 * d;
  Quaternion k1 = dinv * f.h2 * d;
  RealPoly divisor = norm_polynomial(QuatPoly::linear(k2));
  std::optional<Label> label;
  if (f.label) label = complement(*f.label);
  return {std::move(k1), std::move(k2), std::move(divisor), label};
}

std::vector<Factorization> label_factorizations(std::vector<Factorization> fs, const RootReport& roots) {
  for (auto& f : fs) f.label = find_label(f.divisor, roots);
  return fs;
}

bool are_complementary(const Factorization& f, const Factorization& g, const RealPoly& norm) {
  return norm_polynomial(QuatPoly::linear(f.h1)) * norm_polynomial(QuatPoly::linear(g.h1)) == norm;
}

FactorizationSet factorize(const QuatPoly& c) {
  GenericityReport gen = check_generic(c);
  if (!gen.verdict) throw NonGeneric("non-generic polynomial " + c.to_string() + ": " + join(gen.reasons));

  FactorizationSet out{c, norm_polynomial(c), {}, gen, {}, {}, {}};
  out.roots = real_roots(out.norm);
  auto divisors = quadratic_divisors(out.roots);
  if (!divisors) {
    out.warnings.push_back("norm polynomial " + out.norm.to_string() +
                           " has quadratic divisors with irrational coefficients; "
                           "computing factorizations in the float backend");
    out.polynomial = c.to_backend(Backend::Float);
    out.norm = norm_polynomial(out.polynomial);
    out.roots = real_roots(out.norm);
    divisors = quadratic_divisors(out.roots);
  }
  for (const auto& d : *divisors) out.factorizations.push_back(factor_from_divisor(out.polynomial, d.poly));
  out.factorizations = label_factorizations(std::move(out.factorizations), out.roots);

  std::stable_sort(out.factorizations.begin(), out.factorizations.end(),
                   [](const Factorization& a, const Factorization& b) {
                     auto c1 = a.divisor.coeff(1) <=> b.divisor.coeff(1);
                     if (c1 != 0) return c1 < 0;
                     return (a.divisor.coeff(0) <=> b.divisor.coeff(0)) < 0;
                   });
  std::size_t n = out.factorizations.size();
  out.complement.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !out.complement[i] &&
          are_complementary(out.factorizations[i], out.factorizations[j], out.norm))
        out.complement[i] = j;
  return out;
}

}  // namespace splitquat
