#include "uea/element.hpp"

#include <sstream>

namespace uea {

Generator Generator::off_diag(int i, int j, int d) {
  if (d < 1) throw std::invalid_argument("rank must be positive");
  if (i < 1 || i > d || j < 1 || j > d || i == j)
    throw std::invalid_argument("off-diagonal generator needs 1<=i!=j<=d");
  return Generator{Kind::OffDiag, i, j, d};
}

Generator Generator::cartan(int i, int d) {
  if (i < 1 || i > d - 1)
    throw std::invalid_argument("cartan index out of range");
  return Generator{Kind::Cartan, i, 0, d};
}

Generator Generator::central(int d) {
  if (d < 1) throw std::invalid_argument("rank must be positive");
  return Generator{Kind::Central, 0, 0, d};
}

int num_slots(int d) { return d * d; }

namespace {

// lexicographic position of the pair (i,j) among raising (i<j) pairs
int raise_index(int i, int j, int d) {
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += d - a;
  return idx + (j - i - 1);
}

// lexicographic position of (i,j) among lowering (i>j) pairs
int lower_index(int i, int j) {
  return (i - 2) * (i - 1) / 2 + (j - 1);
}

}  // namespace

int generator_slot(const Generator& g) {
  const int d = g.d;
  const int nraise = d * (d - 1) / 2;
  switch (g.kind) {
    case Generator::Kind::OffDiag:
      if (g.i < g.j) return raise_index(g.i, g.j, d);
      return nraise + d + lower_index(g.i, g.j);
    case Generator::Kind::Cartan:
      return nraise + (g.i - 1);
    case Generator::Kind::Central:
      return nraise + d - 1;
  }
  throw std::logic_error("bad generator kind");
}

Generator slot_generator(int slot, int d) {
  const int nraise = d * (d - 1) / 2;
  if (slot < nraise) {
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (raise_index(i, j, d) == slot) return Generator::off_diag(i, j, d);
  } else if (slot < nraise + d - 1) {
    return Generator::cartan(slot - nraise + 1, d);
  } else if (slot == nraise + d - 1) {
    return Generator::central(d);
  } else if (slot < d * d) {
    int rem = slot - nraise - d;
    for (int i = 2; i <= d; ++i)
      for (int j = 1; j < i; ++j)
        if (lower_index(i, j) == rem) return Generator::off_diag(i, j, d);
  }
  throw std::invalid_argument("slot out of range");
}

int Monomial::last_slot() const {
  for (int s = static_cast<int>(exp.size()) - 1; s >= 0; --s)
    if (exp[s] > 0) return s;
  return -1;
}

Element Element::unit(int d) {
  Element r(d);
  r.terms_.emplace(Monomial(d), Scalar::one());
  return r;
}

Element Element::constant(const Scalar& s, int d) {
  Element r(d);
  if (!s.is_zero()) r.terms_.emplace(Monomial(d), s);
  return r;
}

Element Element::generator(const Generator& g) {
  Element r(g.d);
  Monomial m(g.d);
  m.bump(generator_slot(g));
  r.terms_.emplace(std::move(m), Scalar::one());
  return r;
}

Element Element::e(int i, int j, int d) {
  if (i < 1 || i > d || j < 1 || j > d)
    throw std::invalid_argument("matrix-unit index out of range");
  if (i == j) return desugar_eii(i, d);
  return generator(Generator::off_diag(i, j, d));
}

Element Element::h(int i, int d) { return generator(Generator::cartan(i, d)); }

Element Element::central(int d) { return generator(Generator::central(d)); }

Element Element::monomial(const Monomial& m, const Scalar& s, int d) {
  Element r(d);
  if (!s.is_zero()) r.terms_.emplace(m, s);
  return r;
}

void Element::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  check_same_rank(*this, o);
  for (const auto& [m, s] : o.terms_) add_term(m, s);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same_rank(*this, o);
  for (const auto& [m, s] : o.terms_) add_term(m, -s);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Scalar Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (size_t slot = 0; slot < m.exp.size(); ++slot) {
      if (m.exp[slot] == 0) continue;
      Generator g = slot_generator(static_cast<int>(slot), d_);
      os << "*";
      switch (g.kind) {
        case Generator::Kind::OffDiag:
          os << "e[" << g.i << "," << g.j << "]";
          break;
        case Generator::Kind::Cartan:
          os << "h[" << g.i << "]";
          break;
        case Generator::Kind::Central:
          os << "c";
          break;
      }
      if (m.exp[slot] > 1) os << "^" << m.exp[slot];
    }
  }
  return os.str();
}

void check_same_rank(const Element& a, const Element& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch between elements");
}

}  // namespace uea
