#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "splitquat/errors.hpp"
#include "splitquat/geometry.hpp"
#include "splitquat/polynomial.hpp"

namespace splitquat::cli {

/// Malformed command-line input; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sum of signed terms `coef? unit? ('*'? 't' ('^' INT)?)?`. A coefficient is an
/// integer, fraction `p/q` or decimal, optionally followed by one of i, j, k;
/// a parenthesized quaternion may replace it, e.g.
/// "t^2 - (2+j+2k)t + (1-2i+j+2k)". Literals are read exactly and converted
/// to the requested backend.
QuatPoly parse_poly(std::string_view text, Signature sig, Backend b);

/// A quaternion without t, e.g. "1-3/5j+4/5k".
Quaternion parse_quaternion(std::string_view text, Signature sig, Backend b);

/// A point given as a vectorial quaternion, optionally bracketed ("[i+3j+k]"),
/// or as a comma-separated coordinate triple ("1,3,1").
ProjPoint parse_point(std::string_view text, Signature sig, Backend b);

Scalar parse_scalar(std::string_view text, Backend b);

/// "a:b".
std::pair<Scalar, Scalar> parse_range(std::string_view text, Backend b);

}  // namespace splitquat::cli
