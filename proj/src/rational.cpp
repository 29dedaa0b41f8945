#include "lamina/rational.hpp"

#include <cctype>

#include "lamina/errors.hpp"

namespace lamina {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + s);
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal: " + s);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace lamina
