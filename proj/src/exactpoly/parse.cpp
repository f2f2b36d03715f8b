#include <cctype>
#include <stdexcept>
#include <string>

#include "gmqh/exactpoly/poly.hpp"

namespace gmqh {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

MultiPoly parse_monomial(const RingPtr& ring, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty monomial");
  Rational coeff(1);
  Exponents e(ring->size(), 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('*', pos);
    if (next == std::string::npos) next = text.size();
    const std::string factor = text.substr(pos, next - pos);
    if (factor.empty()) throw std::invalid_argument("malformed monomial '" + text + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coeff *= parse_rational(factor);
    } else {
      const std::size_t caret = factor.find('^');
      const std::string name = factor.substr(0, caret);
      int power = 1;
      if (caret != std::string::npos) {
        const std::string p = factor.substr(caret + 1);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("bad exponent in '" + factor + "'");
        power = std::stoi(p);
      }
      e[ring->index_of(name)] += power;
    }
    pos = next + 1;
  }
  return MultiPoly::monomial(ring, e, coeff);
}

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, std::string_view input) {
  const std::string text = strip(input);
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  MultiPoly out(ring);
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t next = text.find_first_of("+-", pos);
    if (next == pos) throw std::invalid_argument("malformed polynomial '" + text + "'");
    if (next == std::string::npos) next = text.size();
    MultiPoly m = parse_monomial(ring, text.substr(pos, next - pos));
    out += negative ? -m : m;
    pos = next;
  }
  return out;
}

}  // namespace gmqh
