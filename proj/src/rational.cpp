#include "prolong/rational.hpp"

#include <stdexcept>

namespace prolong {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed integer: " + s);
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace prolong
