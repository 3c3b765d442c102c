#include "redfib/scalar.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace redfib {

std::string rational_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

namespace {

// A rational has a finite decimal expansion iff its reduced denominator is of
// the form 2^a 5^b; returns max(a, b) (the number of fraction digits) or -1.
int terminating_digits(const BigInt& den) {
  BigInt d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
    if (twos > 4096) return -1;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
    if (fives > 4096) return -1;
  }
  if (d != 1) return -1;
  return twos > fives ? twos : fives;
}

}  // namespace

std::string decimal_string(const Rational& q, int digits) {
  if (denominator(q) == 1) {
    std::ostringstream out;
    out << numerator(q);
    return out.str();
  }
  const int frac = terminating_digits(denominator(q));
  if (frac >= 0) {
    // Scale to an integer, then re-insert the decimal point.
    BigInt scaled = numerator(q);
    for (int i = 0; i < frac; ++i) scaled *= 10;
    scaled /= denominator(q);
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::ostringstream raw;
    raw << scaled;
    std::string s = raw.str();
    if (static_cast<int>(s.size()) <= frac) s.insert(0, frac + 1 - s.size(), '0');
    s.insert(s.size() - frac, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return (neg ? "-" : "") + s;
  }
  return decimal_string(to_real(q), digits);
}

std::string decimal_string(const Real& x, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 50) digits = 50;
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational or decimal literal: '" + text + "'");
  };

  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail();

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) fail();
    try {
      BigInt p(num);
      BigInt q(den);
      if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
      return Rational(p, q);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (...) {
      fail();
    }
  }

  // Decimal / integer form: [sign] digits [. digits] [e [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string intpart, fracpart;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart.push_back(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart.push_back(s[i++]);
  }
  if (intpart.empty() && fracpart.empty()) fail();
  long expo = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    std::string edig;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) edig.push_back(s[i++]);
    if (edig.empty() || edig.size() > 6) fail();
    expo = std::stol(edig);
    if (eneg) expo = -expo;
  }
  if (i != s.size()) fail();

  BigInt mantissa(intpart.empty() ? std::string("0") : intpart);
  for (char c : fracpart) {
    mantissa *= 10;
    mantissa += (c - '0');
  }
  long shift = expo - static_cast<long>(fracpart.size());
  BigInt num = mantissa;
  BigInt den = 1;
  if (shift > 0)
    for (long k = 0; k < shift; ++k) num *= 10;
  else
    for (long k = 0; k < -shift; ++k) den *= 10;
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace redfib
