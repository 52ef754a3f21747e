#include "splitquat/cli/parse.hpp"

#include <array>
#include <cctype>
#include <map>

namespace splitquat::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

using Coeffs = std::array<mpq_class, 4>;

Coeffs multiply(const Coeffs& a, const Coeffs& b, Signature sig) {
  Quaternion p = Quaternion::exact(a[0], a[1], a[2], a[3], sig) * Quaternion::exact(b[0], b[1], b[2], b[3], sig);
  return {p.w().rational(), p.x().rational(), p.y().rational(), p.z().rational()};
}

class Parser {
 public:
  Parser(std::string_view text, Signature sig) : s_(text), sig_(sig) {}

  std::map<int, Coeffs> sum(bool allow_t) {
    std::map<int, Coeffs> out;
    skip();
    bool first = true;
    while (true) {
      int sign = 1;
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      auto [degree, c] = term(allow_t);
      auto& slot = out[degree];
      for (std::size_t i = 0; i < 4; ++i) slot[i] += sign * c[i];
      first = false;
      skip();
      if (peek() != '+' && peek() != '-') break;
    }
    return out;
  }

  void expect_end() {
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpq_class number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t d = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return pos_ > d;
    };
    bool whole = digits();
    if (peek() == '.') {
      ++pos_;
      if (!digits() && !whole) throw ParseError("malformed number", start);
    } else if (peek() == '/') {
      ++pos_;
      if (!whole || !digits()) throw ParseError("malformed fraction", start);
    }
    try {
      return Scalar::parse_exact(s_.substr(start, pos_ - start)).rational();
    } catch (const std::exception&) {
      throw ParseError("malformed number", start);
    }
  }

  std::pair<int, Coeffs> term(bool allow_t) {
    skip();
    const std::size_t start = pos_;
    Coeffs c{1, 0, 0, 0};
    bool have = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      mpq_class n = number();
      for (auto& v : c) v *= n;
      have = true;
      skip();
    }
    if (peek() == '(') {
      const std::size_t open = pos_++;
      auto inner = sum(false);
      skip();
      if (peek() != ')') throw ParseError("missing ')' for '(' at position " + std::to_string(open), pos_);
      ++pos_;
      c = multiply(c, inner[0], sig_);
      have = true;
      skip();
    } else if (peek() == 'i' || peek() == 'j' || peek() == 'k') {
      Coeffs unit{0, 0, 0, 0};
      unit.at(static_cast<std::size_t>(peek() - 'i' + 1)) = 1;
      ++pos_;
      c = multiply(c, unit, sig_);
      have = true;
      skip();
    }
    bool star = false;
    if (peek() == '*') {
      ++pos_;
      star = true;
      skip();
    }
    int degree = 0;
    if (peek() == 't') {
      if (!allow_t) throw ParseError("'t' is not allowed inside a quaternion", pos_);
      ++pos_;
      degree = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        std::size_t d = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == d) throw ParseError("expected exponent", pos_);
        degree = std::stoi(std::string(s_.substr(d, pos_ - d)));
      }
      have = true;
    } else if (star) {
      throw ParseError("expected 't' after '*'", pos_);
    }
    if (!have) {
      if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", start);
    }
    return {degree, c};
  }

  std::string_view s_;
  Signature sig_;
  std::size_t pos_ = 0;
};

Quaternion to_quaternion(const Coeffs& c, Signature sig, Backend b) {
  return Quaternion::exact(c[0], c[1], c[2], c[3], sig).to_backend(b);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

QuatPoly parse_poly(std::string_view text, Signature sig, Backend b) {
  Parser p(text, sig);
  auto terms = p.sum(true);
  p.expect_end();
  int degree = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<Quaternion> coeffs;
  for (int d = 0; d <= degree; ++d) {
    auto it = terms.find(d);
    coeffs.push_back(it == terms.end() ? Quaternion::zero(sig, b) : to_quaternion(it->second, sig, b));
  }
  return {coeffs, sig, b};
}

Quaternion parse_quaternion(std::string_view text, Signature sig, Backend b) {
  Parser p(text, sig);
  auto terms = p.sum(false);
  p.expect_end();
  return to_quaternion(terms[0], sig, b);
}

Scalar parse_scalar(std::string_view text, Backend b) {
  std::string_view t = trim(text);
  try {
    return Scalar::parse_exact(t).to_backend(b);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed number '" + std::string(t) + "'", 0);
  }
}

ProjPoint parse_point(std::string_view text, Signature sig, Backend b) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("missing ']'", text.size());
    t = t.substr(1, t.size() - 2);
  }
  Quaternion q = Quaternion::zero(sig, b);
  if (t.find(',') != std::string_view::npos) {
    std::array<Scalar, 3> c;
    std::size_t n = 0, start = 0;
    while (true) {
      std::size_t comma = t.find(',', start);
      if (n == 3) throw ParseError("a point has three coordinates", start);
      c.at(n++) = parse_scalar(t.substr(start, comma == std::string_view::npos ? comma : comma - start), b);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (n != 3) throw ParseError("a point has three coordinates", t.size());
    q = Quaternion(Scalar::zero(b), c[0], c[1], c[2], sig);
  } else {
    q = parse_quaternion(t, sig, b);
  }
  if (!q.is_vectorial()) throw ParseError("point " + q.to_string() + " is not vectorial", 0);
  try {
    return ProjPoint(q);
  } catch (const Degenerate&) {
    throw ParseError("the zero vector is not a point", 0);
  }
}

std::pair<Scalar, Scalar> parse_range(std::string_view text, Backend b) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected a range 'a:b'", 0);
  return {parse_scalar(text.substr(0, colon), b), parse_scalar(text.substr(colon + 1), b)};
}

}  // namespace splitquat::cli
