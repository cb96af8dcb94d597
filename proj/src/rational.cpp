#include "hopf/rational.hpp"

#include "hopf/error.hpp"

namespace hopf {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, std::size_t base) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw ParseError("expected digits", base + i);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ParseError("unexpected character in rational", base + i);
  };
  mpq_class q;
  if (slash == std::string::npos) {
    check_int(s, 0);
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    q = mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  }
  return Rational(q);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(mpq_class(f));
}

}  // namespace hopf
