#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rba {

/// Exact rational scalar. Canonical form (reduced, denominator > 0) is
/// maintained by the backend; never a floating point anywhere.
using Scalar = boost::multiprecision::cpp_rational;

inline std::string to_string(const Scalar& s) { return s.str(); }

/// Parse "p", "-p", "p/q" into a Scalar. Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < text.size(); ++i) {
    if (text[i] >= '0' && text[i] <= '9') {
      digits = true;
    } else if (text[i] == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  if (!digits) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (auto pos = text.find('/'); pos != std::string_view::npos) {
    bool all_zero = true;
    for (std::size_t j = pos + 1; j < text.size(); ++j) all_zero &= text[j] == '0';
    if (all_zero) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  try {
    Scalar s{std::string(text)};
    return s;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
}

}  // namespace rba
