#include <mutex>
#include <unordered_map>

#include "uea/element.hpp"

namespace uea {

namespace {

// matrix-unit expansion of a generator, as (coeff, (row, col)) pairs
using UnitCombo = std::vector<std::pair<long, std::pair<int, int>>>;

UnitCombo unit_combo(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::OffDiag:
      return {{1, {g.i, g.j}}};
    case Generator::Kind::Cartan:
      return {{1, {g.i, g.i}}, {-1, {g.i + 1, g.i + 1}}};
    case Generator::Kind::Central: {
      UnitCombo u;
      for (int k = 1; k <= g.d; ++k) u.push_back({1, {k, k}});
      return u;
    }
  }
  throw std::logic_error("bad generator kind");
}

Element unit_to_element(int i, int j, int d) { return Element::e(i, j, d); }

struct MonoSlotKey {
  Monomial m;
  int slot;
  bool operator==(const MonoSlotKey& o) const {
    return slot == o.slot && m == o.m;
  }
};

struct MonoSlotHash {
  size_t operator()(const MonoSlotKey& k) const {
    return MonoHash{}(k.m) * 31 + static_cast<size_t>(k.slot);
  }
};

// Per-rank rewriting context. Commutator table for all slot pairs plus a
// memo of straightened monomial-times-generator products.
struct PbwContext {
  int d;
  std::vector<Element> comm;  // [s1*n+s2] = [gen(s1), gen(s2)]
  std::unordered_map<MonoSlotKey, Element, MonoSlotHash> straight;
  std::mutex mu;

  explicit PbwContext(int dd) : d(dd) {
    const int n = num_slots(d);
    comm.reserve(n * n);
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2)
        comm.push_back(commutator_basis(slot_generator(s1, d),
                                        slot_generator(s2, d)));
  }

  const Element& commutator(int s1, int s2) const {
    return comm[s1 * num_slots(d) + s2];
  }
};

PbwContext& context(int d) {
  static std::mutex reg_mu;
  static std::unordered_map<int, PbwContext*> reg;
  std::scoped_lock lk(reg_mu);
  auto it = reg.find(d);
  if (it == reg.end()) it = reg.emplace(d, new PbwContext(d)).first;
  return *it->second;
}

// m * gen(slot) in PBW form; recursion moves the generator left past every
// higher slot, producing commutator corrections of lower degree.
Element mono_mul_gen(PbwContext& ctx, const Monomial& m, int slot) {
  const int last = m.last_slot();
  if (last <= slot) {
    Monomial r = m;
    r.bump(slot);
    return Element::monomial(r, Scalar::one(), ctx.d);
  }
  {
    std::scoped_lock lk(ctx.mu);
    auto it = ctx.straight.find(MonoSlotKey{m, slot});
    if (it != ctx.straight.end()) return it->second;
  }
  // m = rest * x with x the top generator; m*g = (rest*g)*x + rest*[x,g]
  Monomial rest = m;
  rest.exp[last] -= 1;
  rest.deg -= 1;

  Element a = mono_mul_gen(ctx, rest, slot);
  Element result = multiply_gen(a, last);

  const Element& corr = ctx.commutator(last, slot);
  if (!corr.is_zero()) {
    for (const auto& [cm, cs] : corr.terms()) {
      if (cm.is_unit()) {
        result.add_term(rest, cs);
      } else {
        Element t = mono_mul_gen(ctx, rest, cm.last_slot());
        t *= cs;
        result += t;
      }
    }
  }
  {
    std::scoped_lock lk(ctx.mu);
    ctx.straight.emplace(MonoSlotKey{m, slot}, result);
  }
  return result;
}

}  // namespace

Element multiply_gen(const Element& a, int slot) {
  PbwContext& ctx = context(a.rank());
  Element out(a.rank());
  for (const auto& [m, s] : a.terms()) {
    const int last = m.last_slot();
    if (last <= slot) {  // already ordered: plain exponent bump
      Monomial r = m;
      r.bump(slot);
      out.add_term(r, s);
    } else {
      Element t = mono_mul_gen(ctx, m, slot);
      t *= s;
      out += t;
    }
  }
  return out;
}

Element multiply(const Element& a, const Element& b) {
  check_same_rank(a, b);
  const int d = a.rank();
  if (a.is_zero() || b.is_zero()) return Element::zero(d);

  // Right factors are processed monomial by monomial in sorted order so
  // partial products a * (slot prefix) can be reused between neighbours.
  std::vector<int> prev;
  std::vector<Element> stack;  // stack[k] = a * prev[0..k)
  Element out(d);
  for (const auto& [m, s] : b.terms()) {
    std::vector<int> gens;
    gens.reserve(m.degree());
    for (size_t slot = 0; slot < m.exp.size(); ++slot)
      for (uint32_t k = 0; k < m.exp[slot]; ++k)
        gens.push_back(static_cast<int>(slot));

    size_t common = 0;
    while (common < gens.size() && common < prev.size() &&
           gens[common] == prev[common])
      ++common;
    stack.resize(common);
    while (stack.size() < gens.size()) {
      const Element& base = stack.empty() ? a : stack.back();
      stack.push_back(multiply_gen(base, gens[stack.size()]));
    }
    const Element& prod = stack.empty() ? a : stack.back();
    Element t = prod;
    t *= s;
    out += t;
    prev = std::move(gens);
  }
  return out;
}

Element desugar_eii(int i, int d) {
  if (i < 1 || i > d) throw std::invalid_argument("diagonal index out of range");
  Element r = Element::central(d) * Scalar::of(1, d);
  for (int m = i; m <= d - 1; ++m) r += Element::h(m, d);
  for (int m = 1; m <= d - 1; ++m)
    r += Element::h(m, d) * Scalar::of(-m, d);
  return r;
}

Element commutator_basis(const Generator& g1, const Generator& g2) {
  if (g1.d != g2.d) throw std::invalid_argument("rank mismatch");
  const int d = g1.d;
  if (g1.kind == Generator::Kind::Central || g2.kind == Generator::Kind::Central)
    return Element::zero(d);
  Element r(d);
  // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb on unit combos
  for (const auto& [c1, u1] : unit_combo(g1)) {
    for (const auto& [c2, u2] : unit_combo(g2)) {
      const long c = c1 * c2;
      if (u1.second == u2.first)
        r += unit_to_element(u1.first, u2.second, d) * Scalar(Rational(c));
      if (u2.second == u1.first)
        r -= unit_to_element(u2.first, u1.second, d) * Scalar(Rational(c));
    }
  }
  return r;
}

Element normal_order(
    const std::vector<std::pair<Scalar, std::vector<Generator>>>& word,
    int d) {
  Element out(d);
  for (const auto& [coeff, gens] : word) {
    Element acc = Element::unit(d);
    for (const Generator& g : gens) {
      if (g.d != d) throw std::invalid_argument("rank mismatch in word");
      acc = multiply_gen(acc, generator_slot(g));
    }
    acc *= coeff;
    out += acc;
  }
  return out;
}

Element ad_action(const Element& x, const Element& u) {
  check_same_rank(x, u);
  if (x.degree() > 1) throw std::invalid_argument("ad requires degree <= 1");
  if (!x.coeff(Monomial(x.rank())).is_zero())
    throw std::invalid_argument("ad requires zero constant term");
  return multiply(x, u) - multiply(u, x);
}

bool is_invariant(const Element& u, int p) {
  const int d = u.rank();
  if (p < 0 || p > d - 1) throw std::invalid_argument("p out of range");
  for (int i = 1; i <= d - p; ++i)
    for (int j = 1; j <= d - p; ++j)
      if (!ad_action(Element::e(i, j, d), u).is_zero()) return false;
  for (int k = d - p + 1; k <= d; ++k)
    if (!ad_action(desugar_eii(k, d), u).is_zero()) return false;
  return true;
}

}  // namespace uea
