#include "uea/hopf.hpp"

#include <mutex>
#include <unordered_map>

#include "uea/matrix.hpp"
#include "uea/rep.hpp"

namespace uea {

TensorElement TensorElement::of(const Element& left, const Element& right) {
  check_same_rank(left, right);
  TensorElement t(left.rank());
  for (const auto& [ml, sl] : left.terms())
    for (const auto& [mr, sr] : right.terms()) t.add_term(ml, mr, sl * sr);
  return t;
}

void TensorElement::add_term(const Monomial& l, const Monomial& r,
                             const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto [it, fresh] = terms_.try_emplace(std::move(key), s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("rank mismatch");
  for (const auto& [k, s] : o.terms_) add_term(k.first, k.second, s);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("rank mismatch");
  for (const auto& [k, s] : o.terms_) add_term(k.first, k.second, -s);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("rank mismatch");
  const int d = a.d_;
  TensorElement out(d);
  for (const auto& [ka, sa] : a.terms_) {
    for (const auto& [kb, sb] : b.terms_) {
      Element l = multiply(Element::monomial(ka.first, Scalar::one(), d),
                           Element::monomial(kb.first, Scalar::one(), d));
      Element r = multiply(Element::monomial(ka.second, Scalar::one(), d),
                           Element::monomial(kb.second, Scalar::one(), d));
      const Scalar c = sa * sb;
      for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms())
          out.add_term(ml, mr, c * cl * cr);
    }
  }
  return out;
}

namespace {

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

struct HopfCache {
  std::unordered_map<Monomial, Scalar, MonoHash> eta;
  std::unordered_map<Monomial, Element, MonoHash> p_of;
  std::mutex mu;
};

HopfCache& cache(int d) {
  static std::mutex reg_mu;
  static std::unordered_map<int, HopfCache*> reg;
  std::scoped_lock lk(reg_mu);
  auto it = reg.find(d);
  if (it == reg.end()) it = reg.emplace(d, new HopfCache).first;
  return *it->second;
}

// coproduct of a single PBW monomial; slots are processed in increasing
// order so both legs stay normal-ordered by construction
TensorElement coproduct_monomial(const Monomial& m, int d) {
  const int central = d * (d - 1) / 2 + d - 1;
  std::vector<std::pair<std::pair<Monomial, Monomial>, Scalar>> acc;
  acc.push_back({{Monomial(d), Monomial(d)}, Scalar::one()});
  for (size_t slot = 0; slot < m.exp.size(); ++slot) {
    const uint32_t e = m.exp[slot];
    if (e == 0) continue;
    if (static_cast<int>(slot) == central) {
      for (auto& [legs, c] : acc) {
        legs.first.bump(static_cast<int>(slot), e);
        legs.second.bump(static_cast<int>(slot), e);
      }
      continue;
    }
    std::vector<std::pair<std::pair<Monomial, Monomial>, Scalar>> next;
    next.reserve(acc.size() * (e + 1));
    for (const auto& [legs, c] : acc) {
      for (uint32_t j = 0; j <= e; ++j) {
        auto nl = legs;
        if (j > 0) nl.first.bump(static_cast<int>(slot), j);
        if (e - j > 0) nl.second.bump(static_cast<int>(slot), e - j);
        next.push_back({std::move(nl), c * Scalar(binomial(e, j))});
      }
    }
    acc = std::move(next);
  }
  TensorElement t(d);
  for (auto& [legs, c] : acc) t.add_term(legs.first, legs.second, c);
  return t;
}

}  // namespace

TensorElement coproduct(const Element& u) {
  const int d = u.rank();
  TensorElement out(d);
  for (const auto& [m, s] : u.terms()) {
    TensorElement t = coproduct_monomial(m, d);
    t *= s;
    out += t;
  }
  return out;
}

Scalar eta(const Element& u) {
  const int d = u.rank();
  HopfCache& hc = cache(d);
  Scalar out;
  for (const auto& [m, s] : u.terms()) {
    Scalar v;
    bool have = false;
    {
      std::scoped_lock lk(hc.mu);
      auto it = hc.eta.find(m);
      if (it != hc.eta.end()) {
        v = it->second;
        have = true;
      }
    }
    if (!have) {
      Mat r = rho(Element::monomial(m, Scalar::one(), d));
      v = r.trace() / Scalar(Rational(d));
      std::scoped_lock lk(hc.mu);
      hc.eta.emplace(m, v);
    }
    out += s * v;
  }
  return out;
}

Element apply_P(const Element& u) {
  const int d = u.rank();
  HopfCache& hc = cache(d);
  Element out(d);
  for (const auto& [m, s] : u.terms()) {
    Element pm;
    bool have = false;
    {
      std::scoped_lock lk(hc.mu);
      auto it = hc.p_of.find(m);
      if (it != hc.p_of.end()) {
        pm = it->second;
        have = true;
      }
    }
    if (!have) {
      pm = Element(d);
      TensorElement cp = coproduct_monomial(m, d);
      for (const auto& [legs, c] : cp.terms()) {
        Scalar w = eta(Element::monomial(legs.second, Scalar::one(), d));
        if (!w.is_zero()) pm.add_term(legs.first, c * w);
      }
      std::scoped_lock lk(hc.mu);
      hc.p_of.emplace(m, pm);
    }
    pm *= s;
    out += pm;
  }
  return out;
}

Element apply_P_iter(const Element& u, int k) {
  if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
  Element cur = u;
  for (int i = 0; i < k; ++i) cur = apply_P(cur);
  return cur;
}

}  // namespace uea
