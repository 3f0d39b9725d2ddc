#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heavypath {

/// Exact edge weights and thresholds.
using Rational = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `p`, `p/q` or a plain decimal such as `2.75` into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw fail();

  auto parse_digits = [&](std::string_view digits) -> std::int64_t {
    if (digits.empty()) throw fail();
    std::int64_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw fail();
      if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10)
        throw Error("rational '" + std::string(text) + "' out of range");
      value = value * 10 + (c - '0');
    }
    return value;
  };

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(body.substr(0, slash));
    std::int64_t den = parse_digits(body.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    result = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (frac_part.size() > 17) throw Error("too many decimals in '" + std::string(text) + "'");
    std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part);
    std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    if (whole > std::numeric_limits<std::int64_t>::max() / scale)
      throw Error("rational '" + std::string(text) + "' out of range");
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_digits(body));
  }
  return negative ? -result : result;
}

/// Integers print bare, everything else as `p/q`.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// A rational extended by +infinity; the value of a hypothesis threshold that
/// quantifies over an empty set of vertex tuples.
class ExtendedRational {
 public:
  constexpr ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(value) {}  // NOLINT(implicit)

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const Rational& value() const {
    if (infinite_) throw Error("value() on infinite ExtendedRational");
    return value_;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << r.str();
}

inline ExtendedRational parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtendedRational::infinity();
  return parse_rational(text);
}

}  // namespace heavypath
