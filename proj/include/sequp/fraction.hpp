#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sequp {

/// Exact non-negative rational. Thresholds are parsed from decimal text and
/// kept exact so that ceiling(min_supp * n) never suffers binary rounding.
class Fraction {
 public:
  Fraction() = default;
  /// Reduced num/den; den must be non-zero.
  Fraction(std::uint64_t num, std::uint64_t den);

  /// Accepts `digits[.digits]` (at most 18 fractional digits). The original
  /// text is kept so that serialization reproduces it byte for byte.
  static Fraction parse(std::string_view text);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const noexcept { return num_ == 0; }

  /// The parsed text when available, else an exact decimal when one exists,
  /// else "num/den".
  std::string to_string() const;

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  std::string text_;
};

/// ceiling(f * n), exact.
std::uint64_t ceil_mul(const Fraction& f, std::uint64_t n);

}  // namespace sequp
