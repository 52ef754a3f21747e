#include "splitquat/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

void require_backend(Backend a, Backend b) {
  if (a != b) throw MismatchError("polynomial scalar backends differ");
}

void require_same(const QuatPoly& a, const QuatPoly& b) {
  if (a.signature() != b.signature()) throw MismatchError("polynomial signatures differ");
  require_backend(a.backend(), b.backend());
}

// Prints "+ 3t^2", "- t", "+ 5" style monomials; coefficient text excludes sign.
std::string monomial(const std::string& coeff_text, int degree, bool unit_coeff) {
  std::string out;
  if (degree == 0) return coeff_text;
  if (!unit_coeff) out += coeff_text;
  out += "t";
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RealPoly

RealPoly::RealPoly(std::vector<Scalar> coeffs, Backend b) : c_(std::move(coeffs)), backend_(b) {
  for (const auto& s : c_) require_backend(s.backend(), b);
  trim();
}

RealPoly RealPoly::exact(std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long v : coeffs) c.emplace_back(v);
  return RealPoly(std::move(c), Backend::Exact);
}

RealPoly RealPoly::linear_root(const Scalar& r) {
  return RealPoly({-r, r.like(1)}, r.backend());
}

void RealPoly::trim() {
  if (backend_ == Backend::Exact) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    return;
  }
  double cutoff = tolerance() * scale();
  while (!c_.empty() && std::fabs(c_.back().to_double()) <= cutoff) c_.pop_back();
}

double RealPoly::scale() const {
  double m = 0;
  for (const auto& s : c_) m = std::max(m, std::fabs(s.to_double()));
  return m;
}

Scalar RealPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(backend_);
  return c_[static_cast<std::size_t>(i)];
}

Scalar RealPoly::evaluate(const Scalar& t) const {
  Scalar acc = Scalar::zero(backend_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  std::vector<Scalar> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
  return RealPoly(std::move(d), backend_);
}

RealPoly RealPoly::monic() const {
  if (is_zero()) throw NonInvertible("zero polynomial cannot be made monic");
  Scalar lc = leading();
  std::vector<Scalar> c;
  for (const auto& s : c_) c.push_back(s / lc);
  c.back() = lc.like(1);
  return RealPoly(std::move(c), backend_);
}

RealPoly RealPoly::to_backend(Backend b) const {
  std::vector<Scalar> c;
  for (const auto& s : c_) c.push_back(s.to_backend(b));
  return RealPoly(std::move(c), b);
}

RealPoly RealPoly::operator-() const {
  std::vector<Scalar> c;
  for (const auto& s : c_) c.push_back(-s);
  return RealPoly(std::move(c), backend_);
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  require_backend(a.backend_, b.backend_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return RealPoly(std::move(c), a.backend_);
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + (-b); }

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  require_backend(a.backend_, b.backend_);
  if (a.is_zero() || b.is_zero()) return RealPoly(a.backend_);
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.backend_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RealPoly(std::move(c), a.backend_);
}

RealPoly operator*(const Scalar& s, const RealPoly& p) {
  std::vector<Scalar> c;
  for (const auto& v : p.c_) c.push_back(s * v);
  return RealPoly(std::move(c), p.backend_);
}

bool operator==(const RealPoly& a, const RealPoly& b) {
  require_backend(a.backend_, b.backend_);
  if (a.degree() != b.degree()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::string RealPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& s = c_[static_cast<std::size_t>(i)];
    if (s.is_zero()) continue;
    std::string mag = s.abs().to_string();
    bool neg = s.sign() < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial(mag, i, mag == "1");
  }
  return out.empty() ? "0" : out;
}

std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b) {
  require_backend(a.backend(), b.backend());
  if (b.is_zero()) throw NonInvertible("polynomial division by zero");
  Backend be = a.backend();
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RealPoly(be), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db + 1), Scalar::zero(be));
  const Scalar& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Scalar q = rem[static_cast<std::size_t>(i)] / lb;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  if (be == Backend::Float) {
    // The cancelled leading terms of a float remainder are rounding noise
    // measured against the dividend, not against the remainder itself.
    double cutoff = tolerance() * std::max(a.scale(), 1.0);
    for (auto& s : rem)
      if (std::fabs(s.to_double()) <= cutoff) s = Scalar::zero(be);
  }
  return {RealPoly(std::move(quo), be), RealPoly(std::move(rem), be)};
}

RealPoly gcd(const RealPoly& a, const RealPoly& b) {
  if (a.backend() != Backend::Exact || b.backend() != Backend::Exact)
    throw Unsupported("polynomial gcd is only available in the exact backend");
  RealPoly x = a, y = b;
  while (!y.is_zero()) {
    RealPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

// ---------------------------------------------------------------- QuatPoly

QuatPoly::QuatPoly(std::vector<Quaternion> coeffs, Signature sig, Backend b)
    : c_(std::move(coeffs)), sig_(sig), backend_(b) {
  for (const auto& q : c_) {
    if (q.signature() != sig) throw MismatchError("coefficient signature differs from polynomial");
    require_backend(q.backend(), b);
  }
  trim();
}

QuatPoly::QuatPoly(std::vector<Quaternion> coeffs)
    : QuatPoly(coeffs, coeffs.at(0).signature(), coeffs.at(0).backend()) {}

QuatPoly QuatPoly::linear(const Quaternion& h) {
  return QuatPoly({-h, Quaternion::one(h.signature(), h.backend())}, h.signature(), h.backend());
}

QuatPoly QuatPoly::from_real(const RealPoly& p, Signature sig) {
  std::vector<Quaternion> c;
  for (const auto& s : p.coeffs()) c.push_back(Quaternion::real(s, sig));
  return QuatPoly(std::move(c), sig, p.backend());
}

QuatPoly QuatPoly::from_coordinates(const RealPoly& x, const RealPoly& y, const RealPoly& z,
                                    Signature sig) {
  Backend b = x.backend();
  require_backend(y.backend(), b);
  require_backend(z.backend(), b);
  int n = std::max({x.degree(), y.degree(), z.degree()});
  std::vector<Quaternion> c;
  for (int i = 0; i <= n; ++i)
    c.emplace_back(Scalar::zero(b), x.coeff(i), y.coeff(i), z.coeff(i), sig);
  return QuatPoly(std::move(c), sig, b);
}

void QuatPoly::trim() {
  if (backend_ == Backend::Exact) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    return;
  }
  double m = 0;
  for (const auto& q : c_)
    for (const auto& s : q.coords()) m = std::max(m, std::fabs(s.to_double()));
  double cutoff = tolerance() * m;
  auto small = [cutoff](const Quaternion& q) {
    return std::all_of(q.coords().begin(), q.coords().end(),
                       [cutoff](const Scalar& s) { return std::fabs(s.to_double()) <= cutoff; });
  };
  while (!c_.empty() && small(c_.back())) c_.pop_back();
}

Quaternion QuatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Quaternion::zero(sig_, backend_);
  return c_[static_cast<std::size_t>(i)];
}

bool QuatPoly::is_monic() const {
  return !c_.empty() && c_.back() == Quaternion::one(sig_, backend_);
}

QuatPoly QuatPoly::conjugate() const {
  std::vector<Quaternion> c;
  for (const auto& q : c_) c.push_back(q.conjugate());
  return QuatPoly(std::move(c), sig_, backend_);
}

QuatPoly QuatPoly::derivative() const {
  std::vector<Quaternion> c;
  for (int i = 1; i <= degree(); ++i)
    c.push_back(Scalar::from_int(i, backend_) * c_[static_cast<std::size_t>(i)]);
  return QuatPoly(std::move(c), sig_, backend_);
}

Quaternion QuatPoly::evaluate(const Scalar& t) const {
  Quaternion acc = Quaternion::zero(sig_, backend_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = t * acc + *it;
  return acc;
}

RealPoly QuatPoly::coordinate(int index) const {
  std::vector<Scalar> c;
  for (const auto& q : c_) c.push_back(q[index]);
  return RealPoly(std::move(c), backend_);
}

QuatPoly QuatPoly::to_backend(Backend b) const {
  std::vector<Quaternion> c;
  for (const auto& q : c_) c.push_back(q.to_backend(b));
  return QuatPoly(std::move(c), sig_, b);
}

QuatPoly operator+(const QuatPoly& a, const QuatPoly& b) {
  require_same(a, b);
  int n = std::max(a.degree(), b.degree());
  std::vector<Quaternion> c;
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return QuatPoly(std::move(c), a.sig_, a.backend_);
}

QuatPoly operator-(const QuatPoly& a, const QuatPoly& b) {
  require_same(a, b);
  int n = std::max(a.degree(), b.degree());
  std::vector<Quaternion> c;
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
  return QuatPoly(std::move(c), a.sig_, a.backend_);
}

QuatPoly operator*(const QuatPoly& a, const QuatPoly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return QuatPoly(a.sig_, a.backend_);
  std::vector<Quaternion> c(a.c_.size() + b.c_.size() - 1, Quaternion::zero(a.sig_, a.backend_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QuatPoly(std::move(c), a.sig_, a.backend_);
}

bool operator==(const QuatPoly& a, const QuatPoly& b) {
  require_same(a, b);
  if (a.degree() != b.degree()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::string QuatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Quaternion& q = c_[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    // A coefficient with a single nonzero coordinate prints bare with its sign
    // pulled out; anything else is parenthesised.
    int nonzero = 0;
    for (const auto& s : q.coords()) nonzero += s.is_zero() ? 0 : 1;
    bool neg = false;
    std::string text;
    if (nonzero == 1) {
      Quaternion m = q;
      for (const auto& s : q.coords())
        if (!s.is_zero()) neg = s.sign() < 0;
      if (neg) m = -q;
      text = m.to_string();
      if (text == "1" && i > 0) text.clear();
    } else {
      // Pull out an overall minus when it makes the leading coordinate positive.
      for (const auto& s : q.coords())
        if (!s.is_zero()) {
          neg = s.sign() < 0;
          break;
        }
      text = "(" + (neg ? -q : q).to_string() + ")";
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial(text, i, text.empty());
  }
  return out;
}

QuatPoly poly_multiply(const QuatPoly& a, const QuatPoly& b) { return a * b; }
QuatPoly poly_conjugate(const QuatPoly& p) { return p.conjugate(); }

RealPoly norm_polynomial(const QuatPoly& c) {
  QuatPoly prod = c * c.conjugate();
  std::vector<Scalar> real;
  for (const auto& q : prod.coeffs()) {
    if (!q.vector_part().is_zero())
      throw std::logic_error("norm polynomial has a vector part: arithmetic inconsistency");
    real.push_back(q.w());
  }
  return RealPoly(std::move(real), c.backend());
}

Quaternion linear_zero(const QuatPoly& r) {
  if (r.degree() != 1) throw Unsupported("linear_zero needs a polynomial of degree 1");
  const Quaternion r1 = r.coeff(1), r0 = r.coeff(0);
  try {
    return -(r1.inverse() * r0);
  } catch (const NonInvertible&) {
    throw NonGeneric("leading coefficient " + r1.to_string() +
                     " of the linear remainder is not invertible");
  }
}

QuatPoly cross(const QuatPoly& a, const QuatPoly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return QuatPoly(a.signature(), a.backend());
  std::size_t n = a.coeffs().size() + b.coeffs().size() - 1;
  std::vector<Quaternion> c(n, Quaternion::zero(a.signature(), a.backend()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      const auto& p = a.coeffs()[i];
      const auto& q = b.coeffs()[j];
      c[i + j] += (p * q - q * p) / Scalar::from_int(2, a.backend());
    }
  return QuatPoly(std::move(c), a.signature(), a.backend());
}

RealPoly inner(const QuatPoly& p, const QuatPoly& q) {
  require_same(p, q);
  if (p.is_zero() || q.is_zero()) return RealPoly(p.backend());
  std::size_t n = p.coeffs().size() + q.coeffs().size() - 1;
  std::vector<Scalar> c(n, Scalar::zero(p.backend()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      c[i + j] += (p.coeffs()[i] * q.coeffs()[j].conjugate()).w();
  return RealPoly(std::move(c), p.backend());
}

QuatPoly divide_coordinates(const QuatPoly& p, const RealPoly& d) {
  RealPoly x = divmod(p.coordinate(1), d).first;
  RealPoly y = divmod(p.coordinate(2), d).first;
  RealPoly z = divmod(p.coordinate(3), d).first;
  return QuatPoly::from_coordinates(x, y, z, p.signature());
}

}  // namespace splitquat
