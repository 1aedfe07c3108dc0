#include "lltlab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace llt {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "m";
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::P: return "p";
    case Basis::S: return "s";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  if (name == "m") return Basis::M;
  if (name == "e") return Basis::E;
  if (name == "h") return Basis::H;
  if (name == "p") return Basis::P;
  if (name == "s") return Basis::S;
  fail(ErrorCode::BadParams, "unknown basis '" + name + "'");
}

namespace detail {

namespace {

std::recursive_mutex cache_mutex;

Partition drop_last(const Partition& lam) {
  std::vector<int> p(lam.parts.begin(), lam.parts.end() - 1);
  return Partition(std::move(p));
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

IntRow row_mul(const IntRow& r1, const IntRow& r2) {
  IntRow out;
  for (const auto& [a, c1] : r1)
    for (const auto& [b, c2] : r2)
      for (const auto& [g, k] : m_product_row(a, b)) out[g] += c1 * c2 * k;
  return out;
}

IntRow compute_to_m_row(Basis basis, const Partition& idx) {
  if (idx.empty()) return {{Partition(), mpz_class(1)}};
  if (basis == Basis::S) {
    IntRow out;
    for (const auto& mu : partitions_of(idx.size())) {
      const long k = kostka(idx, Composition(mu.parts));
      if (k) out[mu] = k;
    }
    return out;
  }
  if (idx.length() == 1) {
    const int k = idx.parts[0];
    if (basis == Basis::P) return {{idx, mpz_class(1)}};
    if (basis == Basis::E) return {{Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), mpz_class(1)}};
    IntRow out;  // h_k = sum of all m_mu, mu |- k
    for (const auto& mu : partitions_of(k)) out[mu] = 1;
    return out;
  }
  const IntRow head = basis_to_m_row(basis, drop_last(idx));
  const IntRow last = basis_to_m_row(basis, Partition({idx.parts.back()}));
  return row_mul(head, last);
}

int permutation_parity(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2;
}

}  // namespace

const IntRow& m_product_row(const Partition& a, const Partition& b) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  static std::map<std::pair<Partition, Partition>, IntRow> cache;
  const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const Partition& x = key.first;
  const Partition& y = key.second;
  IntRow out;
  for (const auto& gamma : partitions_of(x.size() + y.size())) {
    const int k = gamma.length();
    if (k > x.length() + y.length() || k < std::max(x.length(), y.length())) continue;
    // Count ways to split the exponent vector of gamma as A + B with the
    // nonzero entries of A rearranging x and those of B rearranging y.
    std::vector<int> arrangement(static_cast<std::size_t>(k), 0);
    std::copy(x.parts.begin(), x.parts.end(), arrangement.begin());
    std::sort(arrangement.begin(), arrangement.end());
    mpz_class count = 0;
    do {
      std::vector<int> rest;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const int r = gamma.parts[static_cast<std::size_t>(i)] - arrangement[static_cast<std::size_t>(i)];
        if (r < 0) ok = false;
        else if (r > 0) rest.push_back(r);
      }
      if (!ok) continue;
      std::sort(rest.rbegin(), rest.rend());
      if (rest == y.parts) ++count;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    if (count != 0) out[gamma] = count;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

const IntRow& basis_to_m_row(Basis b, const Partition& idx) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  static std::map<std::pair<int, Partition>, IntRow> cache;
  const auto key = std::make_pair(static_cast<int>(b), idx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, compute_to_m_row(b, idx)).first->second;
}

const IntRow& schur_to_h_row(const Partition& lam) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  static std::map<Partition, IntRow> cache;
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;

  IntRow out;
  const int l = lam.length();
  if (l == 0) {
    out[Partition()] = 1;
  } else {
    std::vector<int> sigma(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    do {
      std::vector<int> entries;
      bool dead = false;
      for (int i = 1; i <= l && !dead; ++i) {
        const int e = lam.part(i) - i + sigma[static_cast<std::size_t>(i - 1)];
        if (e < 0) dead = true;
        else if (e > 0) entries.push_back(e);
      }
      if (dead) continue;
      std::sort(entries.rbegin(), entries.rend());
      const int sign = permutation_parity(sigma) ? -1 : 1;
      auto [slot, fresh] = out.emplace(Partition(std::move(entries)), sign);
      if (!fresh) slot->second += sign;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (auto it2 = out.begin(); it2 != out.end();)
      it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
  }
  return cache.emplace(lam, std::move(out)).first->second;
}

const RatRow& e_to_p_row(const Partition& lam) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  static std::map<Partition, RatRow> cache;
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;

  RatRow out;
  if (lam.empty()) {
    out[Partition()] = 1;
  } else if (lam.length() == 1) {
    // Newton: e_k = (1/k) sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    const int k = lam.parts[0];
    for (int i = 1; i <= k; ++i) {
      const RatRow& head = e_to_p_row(k - i > 0 ? Partition({k - i}) : Partition());
      const mpq_class sign = (i % 2 == 1) ? mpq_class(1, k) : mpq_class(-1, k);
      for (const auto& [mu, c] : head) out[merge_parts(mu, Partition({i}))] += sign * c;
    }
    for (auto it2 = out.begin(); it2 != out.end();)
      it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
  } else {
    const RatRow& head = e_to_p_row(drop_last(lam));
    const RatRow& last = e_to_p_row(Partition({lam.parts.back()}));
    for (const auto& [a, c1] : head)
      for (const auto& [b, c2] : last) out[merge_parts(a, b)] += c1 * c2;
    for (auto it2 = out.begin(); it2 != out.end();)
      it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
  }
  return cache.emplace(lam, std::move(out)).first->second;
}

}  // namespace detail

namespace {

LaurentPoly scale_by_int(const LaurentPoly& c, const mpz_class& k) {
  LaurentPoly out = c;
  out *= k;
  return out;
}

RatLaurentPoly scale_by_int(const RatLaurentPoly& c, const mpz_class& k) {
  RatLaurentPoly out = c;
  out *= mpq_class(k);
  return out;
}

mpz_class p_diagonal(const Partition& lam) {
  // coefficient of m_lambda in p_lambda: product of multiplicity factorials
  mpz_class d = 1;
  int i = 0;
  const int len = lam.length();
  while (i < len) {
    int j = i;
    while (j < len && lam.parts[static_cast<std::size_t>(j)] == lam.parts[static_cast<std::size_t>(i)]) ++j;
    for (int t = 2; t <= j - i; ++t) d *= t;
    i = j;
  }
  return d;
}

template <class C>
void add_into(std::map<Partition, C>& m, const Partition& idx, const C& delta) {
  if (delta == C()) return;
  auto [it, fresh] = m.emplace(idx, delta);
  if (!fresh) {
    it->second += delta;
    if (it->second == C()) m.erase(it);
  }
}

}  // namespace

template <class C>
void SymFuncT<C>::add_term(const Partition& idx, const C& c) {
  if (idx.size() != degree_)
    fail(ErrorCode::SizeMismatch, "term " + idx.str() + " in a degree " +
                                      std::to_string(degree_) + " function");
  add_into(terms_, idx, c);
}

template <class C>
SymFuncT<C>& SymFuncT<C>::operator+=(const SymFuncT& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty()) {
    *this = o;
    return *this;
  }
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::logic_error("SymFunc sum needs matching degree and basis");
  for (const auto& [idx, c] : o.terms_) add_into(terms_, idx, c);
  return *this;
}

template <class C>
SymFuncT<C>& SymFuncT<C>::operator-=(const SymFuncT& o) {
  return *this += -o;
}

template <class C>
SymFuncT<C> SymFuncT<C>::operator-() const {
  SymFuncT out(degree_, basis_);
  for (const auto& [idx, c] : terms_) out.terms_[idx] = -c;
  return out;
}

template <class C>
SymFuncT<C> SymFuncT<C>::operator*(const C& c) const {
  SymFuncT out(degree_, basis_);
  if (c == C()) return out;
  for (const auto& [idx, x] : terms_) add_into(out.terms_, idx, C(x * c));
  return out;
}

template <class C>
SymFuncT<C> SymFuncT<C>::operator*(const SymFuncT& o) const {
  const int deg = degree_ + o.degree_;
  const bool multiplicative =
      basis_ == o.basis_ && (basis_ == Basis::E || basis_ == Basis::H || basis_ == Basis::P);
  if (multiplicative) {
    SymFuncT out(deg, basis_);
    for (const auto& [a, c1] : terms_)
      for (const auto& [b, c2] : o.terms_) {
        std::vector<int> parts = a.parts;
        parts.insert(parts.end(), b.parts.begin(), b.parts.end());
        std::sort(parts.rbegin(), parts.rend());
        out.add_term(Partition(std::move(parts)), C(c1 * c2));
      }
    return out;
  }
  const SymFuncT lhs = to_m();
  const SymFuncT rhs = o.to_m();
  SymFuncT prod(deg, Basis::M);
  for (const auto& [a, c1] : lhs.terms_)
    for (const auto& [b, c2] : rhs.terms_) {
      const C c = c1 * c2;
      for (const auto& [g, k] : detail::m_product_row(a, b))
        prod.add_term(g, scale_by_int(c, k));
    }
  return prod.converted(basis_);
}

template <class C>
SymFuncT<C> SymFuncT<C>::to_m() const {
  if (basis_ == Basis::M) return *this;
  SymFuncT out(degree_, Basis::M);
  for (const auto& [idx, c] : terms_)
    for (const auto& [mu, k] : detail::basis_to_m_row(basis_, idx))
      out.add_term(mu, scale_by_int(c, k));
  return out;
}

template <class C>
SymFuncT<C> SymFuncT<C>::from_m(Basis target) const {
  if (target == Basis::M) return *this;
  if (target == Basis::S || target == Basis::E) {
    // Unitriangular peel against the dominance order: the lex-greatest
    // remaining monomial key is dominance-maximal, so its coefficient is the
    // next basis coefficient.
    std::map<Partition, C> residual = terms_;
    SymFuncT out(degree_, target);
    while (!residual.empty()) {
      const auto it = std::prev(residual.end());
      const Partition lam = it->first;
      const C c = it->second;
      const Partition out_idx = target == Basis::S ? lam : conjugate(lam);
      out.add_term(out_idx, c);
      for (const auto& [mu, k] : detail::basis_to_m_row(target, out_idx))
        add_into(residual, mu, C(-scale_by_int(c, k)));
    }
    return out;
  }
  if (target == Basis::H) {
    const SymFuncT s = from_m(Basis::S);
    SymFuncT out(degree_, Basis::H);
    for (const auto& [lam, c] : s.terms_)
      for (const auto& [mu, k] : detail::schur_to_h_row(lam))
        out.add_term(mu, scale_by_int(c, k));
    return out;
  }
  // target == P: triangular the other way around, solved over the rationals.
  if constexpr (std::is_same_v<C, LaurentPoly>) {
    const RatSymFunc rat = to_p_basis(to_rational(*this));
    SymFuncT out(degree_, Basis::P);
    for (const auto& [idx, c] : rat.terms()) out.add_term(idx, demote_coeff(c));
    return out;
  } else {
    std::map<Partition, C> residual = terms_;
    SymFuncT out(degree_, Basis::P);
    while (!residual.empty()) {
      const auto it = residual.begin();
      const Partition lam = it->first;
      C c = it->second;
      c /= mpq_class(p_diagonal(lam));
      out.add_term(lam, c);
      for (const auto& [mu, k] : detail::basis_to_m_row(Basis::P, lam))
        add_into(residual, mu, C(-scale_by_int(c, k)));
    }
    return out;
  }
}

template <class C>
SymFuncT<C> SymFuncT<C>::converted(Basis target) const {
  if (basis_ == target) return *this;
  return to_m().from_m(target);
}

template <class C>
SymFuncT<C> SymFuncT<C>::omega() const {
  switch (basis_) {
    case Basis::E: {
      SymFuncT out = *this;
      out.basis_ = Basis::H;
      return out;
    }
    case Basis::H: {
      SymFuncT out = *this;
      out.basis_ = Basis::E;
      return out;
    }
    case Basis::S: {
      SymFuncT out(degree_, Basis::S);
      for (const auto& [idx, c] : terms_) out.add_term(conjugate(idx), c);
      return out;
    }
    case Basis::P: {
      SymFuncT out(degree_, Basis::P);
      for (const auto& [idx, c] : terms_) {
        const bool flip = (idx.size() - idx.length()) % 2 == 1;
        out.add_term(idx, flip ? C(-c) : c);
      }
      return out;
    }
    case Basis::M:
      return converted(Basis::S).omega().converted(Basis::M);
  }
  return *this;
}

template <class C>
bool SymFuncT<C>::equals(const SymFuncT& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (degree_ != o.degree_) return false;
  return to_m().terms_ == o.to_m().terms_;
}

template <class C>
std::string SymFuncT<C>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const std::string c = it->second.str();
    const std::string name = std::string(basis_name(basis_)) + "[" +
                             it->first.str().substr(1, it->first.str().size() - 2) + "]";
    if (c == "1") {
      out << name;
    } else if (c.find(' ') != std::string::npos || c.find('-') != std::string::npos) {
      out << "(" << c << ")*" << name;
    } else {
      out << c << "*" << name;
    }
  }
  return out.str();
}

template class SymFuncT<LaurentPoly>;
template class SymFuncT<RatLaurentPoly>;

SymFunc sf_from_monomials(int degree, const std::map<Partition, LaurentPoly>& counts) {
  SymFunc out(degree, Basis::M);
  for (const auto& [idx, c] : counts) out.add_term(idx, c);
  return out;
}

RatSymFunc to_rational(const SymFunc& f) {
  RatSymFunc out(f.degree(), f.basis());
  for (const auto& [idx, c] : f.terms()) out.add_term(idx, RatLaurentPoly(c));
  return out;
}

LaurentPoly demote_coeff(const RatLaurentPoly& c) { return c.to_integer(); }

RatSymFunc to_p_basis(const SymFunc& f) { return to_rational(f).converted(Basis::P); }

RatSymFunc to_p_basis(const RatSymFunc& f) { return f.converted(Basis::P); }

RatSymFunc pleth_scale_qminus1(const SymFunc& f) {
  const RatSymFunc p = to_p_basis(f);
  RatSymFunc out(p.degree(), Basis::P);
  for (const auto& [idx, c] : p.terms()) {
    LaurentPoly factor(1);
    for (int k : idx.parts)
      factor *= LaurentPoly::monomial(1, k) - LaurentPoly(1);
    out.add_term(idx, c * RatLaurentPoly(factor));
  }
  return out;
}

PositivityWitness sf_is_positive(const SymFunc& f, Basis basis) {
  PositivityWitness w;
  if (basis == Basis::P) {
    const RatSymFunc p = to_p_basis(f);
    for (const auto& [idx, c] : p.terms()) {
      const bool ok = c.min_deg() >= 0 && c.is_integral() &&
                      std::all_of(c.coeffs().begin(), c.coeffs().end(),
                                  [](const mpq_class& x) { return x >= 0; });
      if (!ok) {
        w.positive = false;
        w.index = idx;
        w.coeff = c.str();
        return w;
      }
    }
    return w;
  }
  const SymFunc g = f.converted(basis);
  for (const auto& [idx, c] : g.terms()) {
    if (!c.is_nonneg_poly()) {
      w.positive = false;
      w.index = idx;
      w.coeff = c.str();
      return w;
    }
  }
  return w;
}

}  // namespace llt
