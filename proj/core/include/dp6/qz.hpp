#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dp6 {

/// An element of Q/Z stored as a reduced fraction num/den with 0 <= num < den.
class QZ {
 public:
  constexpr QZ() = default;
  /// Reduces num/den modulo 1. Throws std::invalid_argument when den <= 0.
  QZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Order in Q/Z, which equals the reduced denominator.
  std::int64_t order() const { return den_; }

  /// Strict parser for "num/den": lowest terms, 0 <= num < den. "0" is
  /// accepted as the zero element. Throws std::invalid_argument otherwise.
  static QZ parse(std::string_view text);
  /// "num/den"; zero prints as "0/1".
  std::string to_string() const;

  friend QZ operator+(const QZ& a, const QZ& b);
  friend QZ operator-(const QZ& a, const QZ& b);
  friend QZ operator-(const QZ& a);
  friend QZ operator*(std::int64_t k, const QZ& a);
  QZ& operator+=(const QZ& b) { return *this = *this + b; }

  friend bool operator==(const QZ&, const QZ&) = default;
  friend auto operator<=>(const QZ& a, const QZ& b) {
    // Compare as rationals in [0, 1).
    __extension__ using wide = __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace dp6
