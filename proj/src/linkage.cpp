#include "splitquat/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

using Complex = std::complex<double>;

QuatPoly constant(const Quaternion& q) { return QuatPoly(std::vector<Quaternion>{q}); }

Quaternion vector_of(const Scalar& x, const Scalar& y, const Scalar& z, Signature sig) {
  return {x.like(0), x, y, z, sig};
}

Complex evaluate_complex(const RealPoly& p, Complex z) {
  Complex acc = 0;
  for (auto k = p.coeffs().size(); k-- > 0;) acc = acc * z + p.coeffs()[k].to_double();
  return acc;
}

// Largest common factor of the coordinates of a float vectorial polynomial of
// degree n, assuming the generic situation where the cofactor is quadratic.
RealPoly float_content(const QuatPoly& sigma) {
  const int n = sigma.degree();
  if (n <= 2) return RealPoly({Scalar::floating(1)}, Backend::Float);
  std::array<RealPoly, 3> coords{sigma.coordinate(1), sigma.coordinate(2), sigma.coordinate(3)};
  const RealPoly* widest = &coords[0];
  for (const auto& c : coords)
    if (c.degree() > widest->degree() ||
        (c.degree() == widest->degree() && c.degree() >= 0 &&
         std::fabs(c.leading().to_double()) > std::fabs(widest->leading().to_double())))
      widest = &c;
  double scale = 0;
  for (const auto& c : coords) scale = std::max(scale, c.scale());

  struct Candidate {
    Complex z;
    double residual;
  };
  std::vector<Candidate> cands;
  for (const auto& z : complex_roots(*widest)) {
    double r = 0;
    for (const auto& c : coords) r = std::max(r, std::abs(evaluate_complex(c, z)));
    cands.push_back({z, r / (scale * std::pow(1.0 + std::abs(z), n))});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.residual < b.residual; });
  const std::size_t k = static_cast<std::size_t>(n - 2);
  const double imag_tol = std::sqrt(tolerance());
  RealPoly f({Scalar::floating(1)}, Backend::Float);
  for (std::size_t i = 0; i < k && i < cands.size(); ++i) {
    Complex z = cands[i].z;
    if (std::fabs(z.imag()) <= imag_tol * (1.0 + std::abs(z))) {
      f = f * RealPoly::linear_root(Scalar::floating(z.real()));
    } else {
      // The conjugate has the same residual and is the next candidate.
      f = f * RealPoly({Scalar::floating(std::norm(z)), Scalar::floating(-2 * z.real()), Scalar::floating(1)},
                       Backend::Float);
      ++i;
    }
  }
  return f;
}

QuatPoly scale_poly(const QuatPoly& p, const Scalar& s) {
  std::vector<Quaternion> cs;
  for (const auto& q : p.coeffs()) cs.push_back(s * q);
  return {cs, p.signature(), p.backend()};
}

// Exact: primitive integer coefficients. Float: largest coordinate 1.
QuatPoly normalize_poly(const QuatPoly& p) {
  if (p.backend() == Backend::Exact) {
    mpz_class den = 1, num = 0;
    for (const auto& q : p.coeffs())
      for (const auto& c : q.coords()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational().get_num_mpz_t());
      }
    if (num == 0) return p;
    return scale_poly(p, Scalar(mpq_class(den, num)));
  }
  double m = 0;
  for (const auto& q : p.coeffs())
    for (const auto& c : q.coords()) m = std::max(m, std::fabs(c.to_double()));
  return m == 0 ? p : scale_poly(p, Scalar::floating(1.0 / m));
}

std::optional<ProjPoint> try_point(const Quaternion& q) {
  try {
    return ProjPoint(q);
  } catch (const Degenerate&) {
    return std::nullopt;
  }
}

}  // namespace

Leg make_leg(const Factorization& f) {
  return {f, rotation_center(f.h1), rotation_center(f.h2), f.label};
}

std::vector<std::pair<std::size_t, std::size_t>> FourBar::complementary_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < complement.size(); ++i)
    if (complement[i] && i < *complement[i]) out.emplace_back(i, *complement[i]);
  return out;
}

std::optional<std::size_t> FourBar::find(const Label& label) const {
  for (std::size_t i = 0; i < legs.size(); ++i)
    if (legs[i].label && *legs[i].label == label) return i;
  return std::nullopt;
}

FourBar build_linkage(const QuatPoly& c) {
  FactorizationSet fs = factorize(c);
  FourBar fb{fs.polynomial, fs.norm, fs.roots, {}, fs.complement, fs.warnings};
  for (const auto& f : fs.factorizations) fb.legs.push_back(make_leg(f));
  return fb;
}

QuatPoly joint_path_polynomial(const Leg& leg) {
  const Quaternion& h1 = leg.factorization.h1;
  const Quaternion& h2 = leg.factorization.h2;
  return QuatPoly::linear(h1) * constant(h2 - h2.conjugate()) * QuatPoly::linear(h1.conjugate());
}

ProjPoint joint_path(const Leg& leg, const Scalar& t) {
  Quaternion q = joint_path_polynomial(leg).evaluate(t.to_backend(leg.factorization.h1.backend()));
  return ProjPoint(q);
}

ProjPoint CouplerConic::point(const Scalar& t) const {
  return ProjPoint(reduced.evaluate(t.to_backend(reduced.backend())));
}

ProjLine CouplerConic::tangent_at(const Scalar& t) const {
  return ProjLine(tangent.evaluate(t.to_backend(tangent.backend())));
}

ProjLine CouplerConic::tangent_at(const RealRoot& r) const {
  if (!r.is_surd()) return tangent_at(r.base);
  return ProjLine(tangent.to_backend(Backend::Float).evaluate(r.to_float()));
}

CouplerConic coupler_conic(const Leg& h, const Leg& k) {
  CouplerConic out{h, k, joint_path_polynomial(h), joint_path_polynomial(k), {Signature::Split, Backend::Exact},
                   RealPoly(), {Signature::Split, Backend::Exact}, {Signature::Split, Backend::Exact},
                   RealPoly(), {}, {}, {}, {}};
  const Backend b = out.eta.backend();
  const Signature sig = out.eta.signature();
  out.sigma = cross(cross(constant(h.fixed_joint.rep()), out.eta), cross(constant(k.fixed_joint.rep()), out.kappa));
  if (out.sigma.is_zero())
    throw Degenerate("the leg lines of " + h.fixed_joint.to_string() + " and " + k.fixed_joint.to_string() +
                     " coincide for every parameter");

  if (b == Backend::Exact) {
    RealPoly g(b);
    for (int i = 1; i < 4; ++i) g = gcd(g, out.sigma.coordinate(i));
    out.content = g;
  } else {
    out.content = float_content(out.sigma);
  }
  out.reduced = normalize_poly(divide_coordinates(out.sigma, out.content));
  if (out.reduced.degree() != 2)
    throw Degenerate("coupler curve parametrization " + out.reduced.to_string() + " is not quadratic");
  out.tangent = cross(out.reduced, out.reduced.derivative());
  out.quartic = inner(out.tangent, out.tangent);
  if (out.quartic.is_zero()) throw Degenerate("coupler curve is a line");
  out.null_tangent_roots = real_roots(out.quartic);

  for (const auto& r : out.null_tangent_roots.real) {
    try {
      out.null_tangents.push_back(out.tangent_at(r));
    } catch (const Degenerate&) {
      out.warnings.push_back("tangent vanishes at null-tangent parameter " + r.to_string());
    }
  }

  QuatPoly tangent = out.tangent;
  auto divisors = quadratic_divisors(out.null_tangent_roots);
  if (!divisors) {
    out.warnings.push_back("null-tangent quartic has irrational quadratic divisors; focal points computed in floats");
    tangent = tangent.to_backend(Backend::Float);
    divisors = quadratic_divisors(real_roots(out.quartic.to_backend(Backend::Float)));
  }
  for (const auto& d : divisors.value_or(std::vector<QuadraticDivisor>{})) {
    std::array<RealPoly, 3> rem;
    for (int i = 1; i < 4; ++i) rem.at(static_cast<std::size_t>(i - 1)) = divmod(tangent.coordinate(i), d.poly).second;
    Quaternion l1 = vector_of(rem[0].coeff(1), rem[1].coeff(1), rem[2].coeff(1), sig);
    Quaternion l0 = vector_of(rem[0].coeff(0), rem[1].coeff(0), rem[2].coeff(0), sig);
    if (auto p = try_point(cross_product(l1, l0)))
      out.focal_points.push_back(*p);
    else
      out.warnings.push_back("null tangents at the roots of " + d.poly.to_string() + " coincide");
  }
  return out;
}

ProjPoint coupler_point(const CouplerConic& conic, const Scalar& t) {
  const Scalar tb = t.to_backend(conic.eta.backend());
  try {
    ProjLine lh = join(conic.leg_h.fixed_joint, ProjPoint(conic.eta.evaluate(tb)));
    ProjLine lk = join(conic.leg_k.fixed_joint, ProjPoint(conic.kappa.evaluate(tb)));
    return meet(lh, lk);
  } catch (const Degenerate&) {
    return conic.point(tb);
  }
}

std::optional<ProjPoint> move_point(const QuatPoly& c, const Scalar& t, const ProjPoint& x) {
  Quaternion q = c.evaluate(t.to_backend(c.backend()));
  return try_point(q * in_backend(x, c.backend()).rep() * q.conjugate());
}

Trajectory sample_motion(const FourBar& fb, const Scalar& t_from, const Scalar& t_to, int n,
                         const std::vector<ProjPoint>& tracers) {
  if (n < 2) throw std::invalid_argument("sample_motion needs at least 2 samples");
  const Backend b = fb.backend();
  Trajectory out;
  std::optional<CouplerConic> conic;
  auto pairs = fb.complementary_pairs();
  if (pairs.empty()) {
    out.warnings.push_back("no complementary pair of legs; coupler point omitted");
  } else {
    try {
      conic = coupler_conic(fb.legs[pairs[0].first], fb.legs[pairs[0].second]);
    } catch (const Degenerate& e) {
      out.warnings.push_back(std::string("coupler point omitted: ") + e.what());
    }
  }
  std::vector<QuatPoly> paths;
  for (const auto& leg : fb.legs) paths.push_back(joint_path_polynomial(leg));

  const Scalar from = t_from.to_backend(b), step = (t_to.to_backend(b) - from) / Scalar::from_int(n - 1, b);
  for (int i = 0; i < n; ++i) {
    MotionSample row{from + step * Scalar::from_int(i, b), false, {}, std::nullopt, {}};
    row.null_position = fb.norm.evaluate(row.t).is_zero();
    for (const auto& p : paths) row.moving_joints.push_back(try_point(p.evaluate(row.t)));
    if (conic) {
      try {
        row.coupler = coupler_point(*conic, row.t);
      } catch (const Degenerate&) {
      }
    }
    for (const auto& x : tracers) row.tracers.push_back(move_point(fb.source, row.t, x));
    out.rows.push_back(std::move(row));
  }
  return out;
}

EqualQuadrilateral construct_equal_quadrilateral(const ProjPoint& a12, const ProjPoint& a34,
                                                 const ProjPoint& b34) {
  if (a34 == b34) throw Degenerate("B34 coincides with A34");
  if (a12 == b34) throw Degenerate("B34 coincides with A12");
  Midpoints mids = midpoints(a12, b34);
  EqualQuadrilateral out;
  out.exact = mids.exact;
  for (const auto& c : mids.points) {
    out.centers.push_back(c);
    out.b12.push_back(rotate(c.rep(), in_backend(a34, c.backend())));
  }
  return out;
}

}  // namespace splitquat
