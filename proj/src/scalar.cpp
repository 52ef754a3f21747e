#include "splitquat/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

std::atomic<double> g_tolerance{1e-9};

[[noreturn]] void backend_mismatch() {
  throw MismatchError("scalar backends differ (exact vs float)");
}

Real checked(Real v) {
  if (!std::isfinite(v)) throw NonInvertible("float scalar overflow or NaN");
  return v;
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::Exact ? "exact" : "float";
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("tolerance must be positive");
  g_tolerance.store(eps, std::memory_order_relaxed);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw NonInvertible("zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  return Scalar(std::move(q));
}

Scalar Scalar::floating(Real v) {
  Scalar s;
  s.value_ = checked(v);
  return s;
}

Scalar Scalar::from_int(long n, Backend b) {
  return b == Backend::Exact ? Scalar(n) : floating(static_cast<Real>(n));
}

Scalar Scalar::parse_exact(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty number");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    return s;
  };
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed fraction: " + t);
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw NonInvertible("zero denominator in " + t);
    return Scalar(mpq_class(n, d));
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    std::string digits = ip + fp;
    if (ip.empty() || ip == "-" || ip == "+") digits = ip + "0" + fp;
    if (fp.empty() || !valid_int(digits)) throw std::invalid_argument("malformed decimal: " + t);
    mpz_class n(strip_plus(digits));
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    return Scalar(mpq_class(n, d));
  }
  if (!valid_int(t)) throw std::invalid_argument("malformed integer: " + t);
  return Scalar(mpq_class(mpz_class(strip_plus(t))));
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw MismatchError("float scalar has no exact rational value");
}

Real Scalar::to_real() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    // get_d truncates to a double; the remainder supplies the extra bits.
    double hi = q->get_d();
    mpq_class rest = *q - mpq_class(hi);
    return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
  }
  return std::get<Real>(value_);
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::Float) return to_float();
  // Binary floats are dyadic rationals; splitting into two doubles keeps the
  // conversion exact.
  Real v = std::get<Real>(value_);
  double hi = static_cast<double>(v);
  double lo = static_cast<double>(v - static_cast<Real>(hi));
  return Scalar(mpq_class(hi) + mpq_class(lo));
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::fabs(std::get<Real>(value_)) <= tolerance();
}

int Scalar::sign() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  Real v = std::get<Real>(value_);
  if (std::fabs(v) <= tolerance()) return 0;
  return v < 0 ? -1 : 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_))
    *q = -*q;
  else
    std::get<Real>(r.value_) = -std::get<Real>(r.value_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (backend() != o.backend()) backend_mismatch();
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q += std::get<mpq_class>(o.value_);
  else
    value_ = checked(std::get<Real>(value_) + std::get<Real>(o.value_));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (backend() != o.backend()) backend_mismatch();
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q -= std::get<mpq_class>(o.value_);
  else
    value_ = checked(std::get<Real>(value_) - std::get<Real>(o.value_));
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (backend() != o.backend()) backend_mismatch();
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q *= std::get<mpq_class>(o.value_);
  else
    value_ = checked(std::get<Real>(value_) * std::get<Real>(o.value_));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (backend() != o.backend()) backend_mismatch();
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto& d = std::get<mpq_class>(o.value_);
    if (sgn(d) == 0) throw NonInvertible("division by zero");
    *q /= d;
  } else {
    Real d = std::get<Real>(o.value_);
    if (d == 0) throw NonInvertible("division by zero");
    value_ = checked(std::get<Real>(value_) / d);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) backend_mismatch();
  if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::fabs(std::get<Real>(a.value_) - std::get<Real>(b.value_)) <= tolerance();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) backend_mismatch();
  if (a.is_exact()) {
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<Real>(a.value_) <=> std::get<Real>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<double>(std::get<Real>(value_)));
  (void)ec;
  return std::string(buf, end);
}

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  const mpq_class& q = s.rational();
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Scalar(mpq_class(n, d));
}

Scalar float_sqrt(const Scalar& s) {
  Real v = s.to_real();
  if (v < 0) {
    if (-v <= tolerance()) return Scalar::floating(0.0);
    throw std::domain_error("square root of negative scalar");
  }
  return Scalar::floating(std::sqrt(v));
}

}  // namespace splitquat
