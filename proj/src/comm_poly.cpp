#include "uea/comm_poly.hpp"

#include <sstream>

namespace uea {

int CommPoly::var_slot(int i, int j, int d) {
  if (i < 1 || i > d || j < 1 || j > d)
    throw std::invalid_argument("variable index out of range");
  return (i - 1) * d + (j - 1);
}

CommPoly CommPoly::unit(int d) {
  CommPoly p(d);
  p.terms_.emplace(Monomial(d), Scalar::one());
  return p;
}

CommPoly CommPoly::constant(const Scalar& s, int d) {
  CommPoly p(d);
  if (!s.is_zero()) p.terms_.emplace(Monomial(d), s);
  return p;
}

CommPoly CommPoly::variable(int i, int j, int d) {
  CommPoly p(d);
  Monomial m(d);
  m.bump(var_slot(i, j, d));
  p.terms_.emplace(std::move(m), Scalar::one());
  return p;
}

CommPoly CommPoly::monomial(const Monomial& m, const Scalar& s, int d) {
  CommPoly p(d);
  if (!s.is_zero()) p.terms_.emplace(m, s);
  return p;
}

void CommPoly::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar CommPoly::constant_term() const {
  if (terms_.empty()) return Scalar::zero();
  const auto& first = *terms_.begin();
  return first.first.is_unit() ? first.second : Scalar::zero();
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (d_ != o.d_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (d_ != o.d_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("rank mismatch");
  CommPoly out(a.d_);
  for (const auto& [ma, sa] : a.terms_) {
    for (const auto& [mb, sb] : b.terms_) {
      Monomial m = ma;
      for (size_t k = 0; k < m.exp.size(); ++k) m.exp[k] += mb.exp[k];
      m.deg += mb.deg;
      out.add_term(m, sa * sb);
    }
  }
  return out;
}

CommPoly CommPoly::pow(unsigned k) const {
  CommPoly acc = CommPoly::unit(d_);
  for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

CommPoly CommPoly::derivative(int i, int j) const {
  const int slot = var_slot(i, j, d_);
  CommPoly out(d_);
  for (const auto& [m, s] : terms_) {
    if (m.exp[slot] == 0) continue;
    Monomial dm = m;
    dm.exp[slot] -= 1;
    dm.deg -= 1;
    out.add_term(dm, s * Scalar(Rational(m.exp[slot])));
  }
  return out;
}

std::complex<double> CommPoly::eval(
    const std::vector<std::complex<double>>& entries) const {
  if (entries.size() != static_cast<size_t>(d_) * d_)
    throw std::invalid_argument("entry vector size mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [m, s] : terms_) {
    std::complex<double> t(s.to_double_re(), s.to_double_im());
    for (size_t slot = 0; slot < m.exp.size(); ++slot)
      for (uint32_t k = 0; k < m.exp[slot]; ++k) t *= entries[slot];
    acc += t;
  }
  return acc;
}

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (size_t slot = 0; slot < m.exp.size(); ++slot) {
      if (m.exp[slot] == 0) continue;
      os << "*b[" << static_cast<int>(slot) / d_ + 1 << ","
         << static_cast<int>(slot) % d_ + 1 << "]";
      if (m.exp[slot] > 1) os << "^" << m.exp[slot];
    }
  }
  return os.str();
}

CommPoly traceless_entry_poly(int i, int j, int d) {
  CommPoly p = CommPoly::variable(i, j, d);
  if (i == j) {
    for (int k = 1; k <= d; ++k)
      p -= CommPoly::variable(k, k, d) * Scalar::of(1, d);
  }
  return p;
}

}  // namespace uea
