#include "uea/span.hpp"

#include <algorithm>

namespace uea {

template <class E>
typename SpanBasis<E>::Vec SpanBasis<E>::to_vec(const E& e) {
  Vec v;
  v.reserve(e.terms().size());
  for (const auto& [m, s] : e.terms()) v.push_back({m, s});
  return v;  // term maps iterate in MonoLess order already
}

template <class E>
void SpanBasis<E>::axpy(Vec& v, const Vec& r, const Scalar& s) {
  Vec out;
  out.reserve(v.size() + r.size());
  auto a = v.begin(), ae = v.end();
  auto b = r.begin(), be = r.end();
  MonoLess less;
  while (a != ae || b != be) {
    if (b == be || (a != ae && less(a->first, b->first))) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == ae || less(b->first, a->first)) {
      out.push_back({b->first, b->second * s});
      ++b;
    } else {
      Scalar c = a->second + b->second * s;
      if (!c.is_zero()) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

template <class E>
void SpanBasis<E>::add_product(const E& value, std::vector<int> word) {
  if (++enumerated_ > opts_.max_products)
    throw std::length_error("span enumeration exceeds product cap");
  Vec v = to_vec(value);
  std::map<int, Scalar> combo;
  const int wid = static_cast<int>(words_.size());
  combo.emplace(wid, Scalar::one());

  while (!v.empty()) {
    auto it = pivot_of_.find(v.back().first);
    if (it == pivot_of_.end()) break;
    const Row& p = rows_[it->second];
    Scalar lam = v.back().second;
    axpy(v, p.vec, -lam);
    for (const auto& [w, c] : p.combo) {
      auto [cit, fresh] = combo.try_emplace(w, -(lam * c));
      if (!fresh) {
        cit->second -= lam * c;
        if (cit->second.is_zero()) combo.erase(cit);
      }
    }
  }
  words_.push_back(std::move(word));
  if (v.empty()) return;  // dependent product, dropped

  const Scalar lead = v.back().second;
  if (!(lead == Scalar::one())) {
    Scalar inv = Scalar::one() / lead;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [w, c] : combo) c *= inv;
  }
  pivot_of_.emplace(v.back().first, static_cast<int>(rows_.size()));
  rows_.push_back(Row{std::move(v), std::move(combo)});
}

template <class E>
void SpanBasis<E>::enumerate_commutative(int idx, const E& current,
                                         std::vector<int>& word,
                                         int deg_left) {
  for (int g = idx; g < static_cast<int>(gens_.size()); ++g) {
    const int dg = gens_[g].degree();
    if (dg > deg_left) continue;
    E child = alg_mul(current, gens_[g]);
    word.push_back(g);
    add_product(child, word);
    enumerate_commutative(g, child, word, deg_left - dg);
    word.pop_back();
  }
}

template <class E>
void SpanBasis<E>::enumerate_words(const E& current, std::vector<int>& word,
                                   int deg_left) {
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
    const int dg = gens_[g].degree();
    if (dg > deg_left) continue;
    E child = alg_mul(current, gens_[g]);
    word.push_back(g);
    add_product(child, word);
    enumerate_words(child, word, deg_left - dg);
    word.pop_back();
  }
}

template <class E>
SpanBasis<E>::SpanBasis(std::vector<E> gens, int degree_bound,
                        SpanOptions opts)
    : bound_(degree_bound), opts_(opts) {
  std::vector<E> kept;
  for (auto& g : gens)
    if (!g.is_zero()) kept.push_back(std::move(g));
  if (kept.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : kept)
    if (g.rank() != kept.front().rank())
      throw std::invalid_argument("rank mismatch among generators");
  E one = alg_unit(kept.front());

  // constants contribute nothing beyond the empty product
  std::erase_if(kept, [](const E& g) { return g.degree() == 0; });
  if (!kept.empty()) {
    int min_deg = kept.front().degree();
    for (const auto& g : kept) min_deg = std::min(min_deg, g.degree());
    if (degree_bound < min_deg)
      throw std::invalid_argument("bound below smallest generator degree");
  }

  // generators above the bound cannot enter any product and are dropped
  for (auto& g : kept)
    if (g.degree() <= degree_bound) gens_.push_back(std::move(g));

  // sort by descending degree so big right factors appear early and the
  // incremental products multiply by small elements afterwards
  std::stable_sort(gens_.begin(), gens_.end(),
                   [](const E& a, const E& b) { return a.degree() > b.degree(); });

  for (size_t i = 0; i < gens_.size() && commutative_; ++i)
    for (size_t j = i + 1; j < gens_.size() && commutative_; ++j)
      if (!(alg_mul(gens_[i], gens_[j]) == alg_mul(gens_[j], gens_[i])))
        commutative_ = false;

  std::vector<int> word;
  add_product(one, word);
  if (commutative_)
    enumerate_commutative(0, one, word, bound_);
  else
    enumerate_words(one, word, bound_);
}

template <class E>
MembershipResult SpanBasis<E>::membership(const E& target) const {
  if (!gens_.empty() && target.rank() != gens_.front().rank())
    throw std::invalid_argument("rank mismatch with basis");
  if (target.degree() > bound_)
    throw std::invalid_argument("target degree exceeds span bound");

  Vec v = to_vec(target);
  std::map<int, Scalar> cert;
  while (!v.empty()) {
    auto it = pivot_of_.find(v.back().first);
    if (it == pivot_of_.end()) break;
    const Row& p = rows_[it->second];
    Scalar lam = v.back().second;
    axpy(v, p.vec, -lam);
    for (const auto& [w, c] : p.combo) {
      auto [cit, fresh] = cert.try_emplace(w, lam * c);
      if (!fresh) {
        cit->second += lam * c;
        if (cit->second.is_zero()) cert.erase(cit);
      }
    }
  }

  MembershipResult res;
  res.bound = bound_;
  if (v.empty()) {
    res.verdict = SpanVerdict::InSpan;
    for (const auto& [w, c] : cert) res.certificate.push_back({words_[w], c});
  } else {
    res.verdict = SpanVerdict::NotInSpanUpToBound;
  }
  return res;
}

template class SpanBasis<Element>;
template class SpanBasis<CommPoly>;

}  // namespace uea
