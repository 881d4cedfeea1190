#include "s3hopf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace s3hopf {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = t.find('/');
  auto check_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("malformed rational '" + s + "'");
  Rat q(num + "/" + den);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

bool rat_sqrt(const Rat& q, Rat& out) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    out = 0;
    return true;
  }
  Rat c = q;
  c.canonicalize();
  mpz_class n = c.get_num(), d = c.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rat(rn) / Rat(rd);
  return true;
}

}  // namespace s3hopf
