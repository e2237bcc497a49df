#include "dp6/qz.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dp6 {

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("QZ: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("malformed fraction \"" + std::string(whole) + "\"");
  return v;
}

}  // namespace

QZ QZ::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (parse_int(text, text) != 0)
      throw std::invalid_argument("fraction \"" + std::string(text) + "\" must be written as num/den");
    return QZ{};
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw std::invalid_argument("fraction \"" + std::string(text) + "\" has a nonpositive denominator");
  if (num < 0 || num >= den)
    throw std::invalid_argument("fraction \"" + std::string(text) + "\" is not in [0, 1)");
  if (std::gcd(num, den) != 1)
    throw std::invalid_argument("fraction \"" + std::string(text) + "\" is not in lowest terms");
  return QZ(num, den);
}

std::string QZ::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

QZ operator+(const QZ& a, const QZ& b) {
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return QZ(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

QZ operator-(const QZ& a, const QZ& b) { return a + (-b); }

QZ operator-(const QZ& a) { return QZ(-a.num_, a.den_); }

QZ operator*(std::int64_t k, const QZ& a) {
  if (a.num_ == 0 || k == 1) return a;
  return QZ((k % a.den_) * a.num_, a.den_);
}

}  // namespace dp6
