#include "splitquat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

void require_vectorial(const Quaternion& a, const char* what) {
  if (!a.is_vectorial())
    throw std::invalid_argument(std::string(what) + ": " + a.to_string() + " is not vectorial");
}

Quaternion normalize(const Quaternion& q) {
  const Signature sig = q.signature();
  if (q.backend() == Backend::Exact) {
    require_vectorial(q, "projective representative");
    mpz_class den = 1, num = 0;
    for (int i = 1; i < 4; ++i) {
      const mpq_class& c = q[i].rational();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    if (num == 0) throw Degenerate("zero vector does not represent a projective element");
    std::array<mpq_class, 3> c;
    int first_sign = 0;
    for (int i = 1; i < 4; ++i) {
      c.at(static_cast<std::size_t>(i - 1)) = q[i].rational() * den / num;
      if (first_sign == 0) first_sign = sgn(q[i].rational());
    }
    if (first_sign < 0)
      for (auto& v : c) v = -v;
    return Quaternion::exact(0, c[0], c[1], c[2], sig);
  }
  Real x = q.x().to_real(), y = q.y().to_real(), z = q.z().to_real();
  Real len = std::sqrt(x * x + y * y + z * z);
  // Float representatives are often products with large coordinates; the
  // real part only needs to be small relative to them.
  if (std::fabs(q.w().to_real()) > tolerance() * std::max<Real>(1, len))
    throw std::invalid_argument("projective representative: " + q.to_string() + " is not vectorial");
  if (len <= tolerance()) throw Degenerate("zero vector does not represent a projective element");
  x /= len;
  y /= len;
  z /= len;
  Real first = std::fabs(x) > tolerance() ? x : std::fabs(y) > tolerance() ? y : z;
  if (first < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return {Scalar::floating(0), Scalar::floating(x), Scalar::floating(y), Scalar::floating(z), sig};
}

Scalar det3(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b, const std::array<Scalar, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

Scalar inner_product(const Quaternion& a, const Quaternion& b) {
  require_vectorial(a, "inner_product");
  require_vectorial(b, "inner_product");
  require_compatible(a, b);
  Scalar rest = a.y() * b.y() + a.z() * b.z();
  return a.signature() == Signature::Split ? a.x() * b.x() - rest : a.x() * b.x() + rest;
}

Quaternion cross_product(const Quaternion& a, const Quaternion& b) {
  require_vectorial(a, "cross_product");
  require_vectorial(b, "cross_product");
  Quaternion d = a * b - b * a;
  return d / d.w().like(2);
}

namespace detail {

Projective::Projective(const Quaternion& rep) : rep_(normalize(rep)) {}

std::string Projective::to_string() const { return "[" + rep_.to_string() + "]"; }

bool projectively_equal(const Quaternion& a, const Quaternion& b) {
  require_compatible(a, b);
  return (a.y() * b.z() - a.z() * b.y()).is_zero() && (a.z() * b.x() - a.x() * b.z()).is_zero() &&
         (a.x() * b.y() - a.y() * b.x()).is_zero();
}

}  // namespace detail

ProjPoint in_backend(const ProjPoint& p, Backend b) {
  return p.backend() == b ? p : ProjPoint(p.rep().to_backend(b));
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Degenerate("join of coincident points " + p.to_string());
  return ProjLine(cross_product(p.rep(), q.rep()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Degenerate("meet of coincident lines " + l.to_string());
  return ProjPoint(cross_product(l.rep(), m.rep()));
}

ProjPoint pole(const ProjLine& l) { return ProjPoint(l.rep()); }
ProjLine polar(const ProjPoint& p) { return ProjLine(p.rep()); }

bool incident(const ProjLine& u, const ProjPoint& x) { return inner_product(u.rep(), x.rep()).is_zero(); }

bool is_null(const ProjPoint& p) { return inner_product(p.rep(), p.rep()).is_zero(); }
bool is_null(const ProjLine& l) { return inner_product(l.rep(), l.rep()).is_zero(); }

Scalar quadrance(const ProjPoint& a, const ProjPoint& b) {
  Scalar aa = inner_product(a.rep(), a.rep());
  Scalar bb = inner_product(b.rep(), b.rep());
  if (aa.is_zero()) throw NullPoint("quadrance with null point " + a.to_string());
  if (bb.is_zero()) throw NullPoint("quadrance with null point " + b.to_string());
  Scalar ab = inner_product(a.rep(), b.rep());
  return 1 - ab * ab / (aa * bb);
}

ProjPoint reflect(const ProjLine& mirror, const ProjPoint& x) {
  if (is_null(mirror)) throw Degenerate("reflection in null line " + mirror.to_string());
  const Quaternion& m = mirror.rep();
  return ProjPoint(m * x.rep() * m);
}

ProjPoint rotate(const Quaternion& h, const ProjPoint& x) {
  if (h.norm().is_zero()) throw Degenerate("rotation by null quaternion " + h.to_string());
  return ProjPoint(h * x.rep() * h.conjugate());
}

ProjPoint rotation_center(const Quaternion& h) {
  if (h.is_real()) throw Degenerate("real quaternion " + h.to_string() + " has no rotation center");
  return ProjPoint(h - h.conjugate());
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

Midpoints midpoints(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw Degenerate("midpoints of coincident points " + a.to_string());
  Scalar alpha = inner_product(a.rep(), a.rep());
  Scalar beta = inner_product(b.rep(), b.rep());
  if (alpha.is_zero()) throw NullPoint("midpoints with null point " + a.to_string());
  if (beta.is_zero()) throw NullPoint("midpoints with null point " + b.to_string());
  Scalar gamma = inner_product(a.rep(), b.rep());
  Midpoints out;
  // On a null join every point of the line has quadrance zero to A and B.
  if ((gamma * gamma - alpha * beta).is_zero()) return out;
  Scalar ratio = alpha / beta;
  if (ratio.sign() < 0) return out;

  Quaternion pa = a.rep(), pb = b.rep();
  std::optional<Scalar> root;
  if (ratio.is_exact()) root = exact_sqrt(ratio);
  if (!root) {
    pa = pa.to_float();
    pb = pb.to_float();
    root = float_sqrt(ratio.to_float());
  }
  out.exact = root->is_exact();
  for (int s : {1, -1}) {
    Quaternion m = pa + (s * *root) * pb;
    if (inner_product(m, m).is_zero()) continue;
    out.points.emplace_back(m);
  }
  return out;
}

}  // namespace splitquat
