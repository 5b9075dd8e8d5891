#include "mothernet/rational.hpp"

#include <stdexcept>

namespace mothernet {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  mpz_class p, q;
  if (p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace mothernet
