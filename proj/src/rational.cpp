#include "dmt/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dmt {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long parse_ll(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("invalid rational literal");
  }
  return v;
}

}  // namespace

static std::pair<long long, long long> reduced(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {narrow(num), narrow(den)};
}

Rational::Rational(long long num, long long den) {
  auto [n, d] = reduced(num, den);
  num_ = n;
  den_ = d;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_ll(text));
  return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  auto [n, d] = reduced(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                        static_cast<Wide>(den_) * o.den_);
  num_ = n;
  den_ = d;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  auto [n, d] = reduced(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
  num_ = n;
  den_ = d;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  auto [n, d] = reduced(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
  num_ = n;
  den_ = d;
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dmt
