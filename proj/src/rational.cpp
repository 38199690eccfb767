#include "netdec/rational.hpp"

#include <charconv>
#include <limits>

namespace netdec {

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

unsigned __int128 abs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v)
               : static_cast<unsigned __int128>(v);
}

}  // namespace

Rational Rational::reduce(__int128 numerator, __int128 denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return Rational();
  const unsigned __int128 g = gcd128(abs128(numerator), abs128(denominator));
  numerator /= static_cast<__int128>(g);
  denominator /= static_cast<__int128>(g);
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  if (numerator > kMax || numerator < -kMax || denominator > kMax) {
    throw std::overflow_error("rational out of 64-bit range after reduction");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = reduce(numerator, denominator);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduce(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::reduce(
      static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  return Rational::reduce(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 >= text.size()) {
    return std::nullopt;
  }
  std::int64_t num = 0, den = 0;
  const char* nfirst = text.data();
  const char* nlast = text.data() + slash;
  auto [nptr, nec] = std::from_chars(nfirst, nlast, num);
  if (nec != std::errc() || nptr != nlast) return std::nullopt;
  const char* dfirst = text.data() + slash + 1;
  const char* dlast = text.data() + text.size();
  auto [dptr, dec] = std::from_chars(dfirst, dlast, den);
  if (dec != std::errc() || dptr != dlast || den <= 0) return std::nullopt;
  return Rational(num, den);
}

}  // namespace netdec
