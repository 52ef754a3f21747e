#include "splitquat/quaternion.hpp"

#include "splitquat/errors.hpp"

namespace splitquat {

std::string_view to_string(Signature s) {
  return s == Signature::Split ? "split" : "hamilton";
}

Quaternion::Quaternion(Scalar w, Scalar x, Scalar y, Scalar z, Signature sig)
    : c_{std::move(w), std::move(x), std::move(y), std::move(z)}, sig_(sig) {
  Backend b = c_[0].backend();
  for (const auto& s : c_)
    if (s.backend() != b) throw MismatchError("quaternion coordinates mix scalar backends");
}

Quaternion Quaternion::real(Scalar w, Signature sig) {
  Scalar z = w.like(0);
  return {std::move(w), z, z, z, sig};
}

Quaternion Quaternion::zero(Signature sig, Backend b) { return real(Scalar::zero(b), sig); }
Quaternion Quaternion::one(Signature sig, Backend b) { return real(Scalar::one(b), sig); }

Quaternion Quaternion::basis(int index, Signature sig, Backend b) {
  std::array<Scalar, 4> c{Scalar::zero(b), Scalar::zero(b), Scalar::zero(b), Scalar::zero(b)};
  c.at(static_cast<std::size_t>(index)) = Scalar::one(b);
  return {c[0], c[1], c[2], c[3], sig};
}

Quaternion Quaternion::exact(const mpq_class& w, const mpq_class& x, const mpq_class& y,
                             const mpq_class& z, Signature sig) {
  return {Scalar(w), Scalar(x), Scalar(y), Scalar(z), sig};
}

void require_compatible(const Quaternion& a, const Quaternion& b) {
  if (a.signature() != b.signature())
    throw MismatchError("quaternion signatures differ (hamilton vs split)");
  if (a.backend() != b.backend()) throw MismatchError("quaternion scalar backends differ");
}

Quaternion Quaternion::conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3], sig_}; }

Scalar Quaternion::norm() const {
  Scalar rest = c_[2] * c_[2] + c_[3] * c_[3];
  Scalar n = c_[0] * c_[0] + c_[1] * c_[1];
  return sig_ == Signature::Split ? n - rest : n + rest;
}

Quaternion Quaternion::inverse() const {
  Scalar n = norm();
  if (n.is_zero()) throw NonInvertible("quaternion " + to_string() + " has zero norm");
  return conjugate() / n;
}

Quaternion Quaternion::vector_part() const { return {c_[0].like(0), c_[1], c_[2], c_[3], sig_}; }

bool Quaternion::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool Quaternion::is_real() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Quaternion Quaternion::to_backend(Backend b) const {
  return {c_[0].to_backend(b), c_[1].to_backend(b), c_[2].to_backend(b), c_[3].to_backend(b),
          sig_};
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3], sig_}; }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

// With s = +1 (Hamiltonian) or s = -1 (split) the product table differs only
// in the terms that pair j and k, which pick up the factor s.
Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  require_compatible(a, b);
  const auto& [a0, a1, a2, a3] = a.c_;
  const auto& [b0, b1, b2, b3] = b.c_;
  Scalar jk = a2 * b2 + a3 * b3;
  Scalar cross = a2 * b3 - a3 * b2;
  bool split = a.sig_ == Signature::Split;
  Scalar w = a0 * b0 - a1 * b1;
  Scalar x = a0 * b1 + a1 * b0;
  if (split) {
    w += jk;
    x -= cross;
  } else {
    w -= jk;
    x += cross;
  }
  Scalar y = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
  Scalar z = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
  return {std::move(w), std::move(x), std::move(y), std::move(z), a.sig_};
}

Quaternion multiply(const Quaternion& a, const Quaternion& b) { return a * b; }

Quaternion operator*(const Scalar& s, const Quaternion& q) {
  return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3], q.sig_};
}

Quaternion operator/(const Quaternion& q, const Scalar& s) {
  return {q.c_[0] / s, q.c_[1] / s, q.c_[2] / s, q.c_[3] / s, q.sig_};
}

bool operator==(const Quaternion& a, const Quaternion& b) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::string Quaternion::to_string() const {
  static constexpr const char* units[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Scalar& s = c_[i];
    if (s.is_zero()) continue;
    std::string mag = s.abs().to_string();
    bool neg = s.sign() < 0;
    if (!out.empty())
      out += neg ? "-" : "+";
    else if (neg)
      out += "-";
    if (i == 0 || mag != "1") out += mag;
    out += units[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace splitquat
