#include "hamloop/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace hamloop {

std::string format_rational(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "invalid rational '" + text + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  const auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw bad("missing digits");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw bad("missing digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad("non-digit character");
  };
  try {
    if (slash == std::string::npos) {
      check_int(text);
      return Rational(Int(text));
    }
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    check_int(p);
    check_int(q);
    Int denom(q);
    if (denom == 0) throw bad("zero denominator");
    return Rational(Int(p), denom);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw bad(e.what());
  }
}

Rational mod1(const Rational& q) {
  // floor division of num by den; cpp_rational keeps den > 0
  Int n = num(q), d = den(q);
  Int fl = n / d;
  if (n % d != 0 && n < 0) fl -= 1;
  return q - Rational(fl);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return b < 0 ? Rational(-b) : b;
  if (b == 0) return a < 0 ? Rational(-a) : a;
  // Z*(p/q) + Z*(r/s) = gcd(p*s, r*q) / (q*s)
  Int p = num(a), q = den(a), r = num(b), s = den(b);
  Int g = boost::multiprecision::gcd(Int(p * s), Int(r * q));
  return Rational(g, q * s);
}

Int common_denominator(const QVec& v) {
  Int l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, den(q));
  return l;
}

std::string format_vector(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace hamloop
