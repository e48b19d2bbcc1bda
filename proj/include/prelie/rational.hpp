#ifndef PRELIE_RATIONAL_HPP
#define PRELIE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace prelie {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (cpp_rational maintains both invariants).
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Serializes as "p/q", or "p" when q == 1. Sign lives on the numerator.
inline std::string to_string(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

namespace detail {
inline BigInt parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ParseError("empty integer");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw ParseError("non-digit character");
  return BigInt(text);
}
}  // namespace detail

inline Scalar parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar(detail::parse_integer(text));
    }
    BigInt num = detail::parse_integer(text.substr(0, slash));
    BigInt den = detail::parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational \"" + text + "\"");
    return Scalar(num, den);
  } catch (const std::exception& e) {
    throw ParseError("malformed rational \"" + text + "\": " + e.what());
  }
}

/// Deterministic pseudo-random rational p/q with |p| <= bound, 1 <= q <= bound.
/// Same seed always yields the same value (mt19937_64 is fully specified).
inline Scalar sample_rational(std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("sample_rational: bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  return Scalar(num(rng), den(rng));
}

/// Stateful variant for drawing several independent samples.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar draw(std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, bound);
    auto p = num(rng_);
    auto q = den(rng_);
    return Scalar(p, q);
  }

  /// Draws until the value is nonzero.
  Scalar draw_nonzero(std::int64_t bound) {
    for (;;) {
      Scalar s = draw(bound);
      if (s != 0) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prelie

#endif  // PRELIE_RATIONAL_HPP
