#include "uea/scalar.hpp"

namespace uea {

Rational rational_from_string(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  Rational q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + s);
  q.canonicalize();
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator in rational: " + s);
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Scalar Scalar::of(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational n2 = o.norm2();
  if (sgn(n2) == 0) throw std::domain_error("division by zero scalar");
  // (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|^2
  *this *= o.conj();
  re /= n2;
  im /= n2;
  return *this;
}

std::string Scalar::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "*i";
  std::string s = re.get_str();
  if (sgn(im) > 0) s += "+";
  s += im.get_str() + "*i";
  return s;
}

}  // namespace uea
