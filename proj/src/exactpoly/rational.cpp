#include "gmqh/exactpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gmqh {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + s);
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw std::invalid_argument("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace gmqh
