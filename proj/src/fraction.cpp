#include "sequp/fraction.hpp"

#include <numeric>

#include "sequp/error.hpp"

namespace sequp {

using u128 = unsigned __int128;

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw input_error("fraction with zero denominator");
  auto g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::parse(std::string_view text) {
  auto bad = [&] { return input_error("not a decimal fraction: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  int frac_digits = 0;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw bad();
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw bad();
    seen_digit = true;
    if (num > (UINT64_MAX - 9) / 10) throw bad();
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    if (seen_dot) {
      if (++frac_digits > 18) throw bad();
      den *= 10;
    }
  }
  if (!seen_digit) throw bad();
  Fraction f(num, den);
  f.text_ = std::string(text);
  return f;
}

std::string Fraction::to_string() const {
  if (!text_.empty()) return text_;
  // Exact decimal iff den only has factors 2 and 5.
  std::uint64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  int digits = std::max(twos, fives);
  if (d != 1 || digits > 18) return std::to_string(num_) + "/" + std::to_string(den_);
  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  u128 scaled = static_cast<u128>(num_) * (scale / den_);
  auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += '.' + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
  return static_cast<u128>(a.num_) * b.den_ <=> static_cast<u128>(b.num_) * a.den_;
}

std::uint64_t ceil_mul(const Fraction& f, std::uint64_t n) {
  u128 p = static_cast<u128>(f.num()) * n;
  return static_cast<std::uint64_t>((p + f.den() - 1) / f.den());
}

}  // namespace sequp
