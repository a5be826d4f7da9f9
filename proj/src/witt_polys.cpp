#include "asw/witt_polys.hpp"

#include <sstream>

#include "asw/error.hpp"
#include "asw/fq.hpp"

namespace asw {

IntPoly IntPoly::variable(std::size_t index) {
  IntPoly p;
  Monomial m{};
  m[index] = 1;
  p.terms_[m] = 1;
  return p;
}

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  if (c != 0) p.terms_[Monomial{}] = c;
  return p;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (std::size_t k = 0; k < kMaxPolyVars; ++k) m[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  IntPoly r;
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divided_exactly(const mpz_class& d) const {
  IntPoly r;
  for (const auto& [m, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw DomainError("inexact division in the Witt ghost recursion");
    r.terms_[m] = c / d;
  }
  return r;
}

IntPoly IntPoly::substitute(const std::vector<IntPoly>& subs) const {
  IntPoly r;
  for (const auto& [m, c] : terms_) {
    IntPoly t = constant(c);
    Monomial rest = m;
    for (std::size_t k = 0; k < subs.size() && k < kMaxPolyVars; ++k) {
      if (m[k] == 0) continue;
      t = t * subs[k].pow(m[k]);
      rest[k] = 0;
    }
    IntPoly leftover;
    leftover.terms_[rest] = 1;
    r = r + t * leftover;
  }
  return r;
}

std::string IntPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in increasing total degree, then monomial order.
  std::vector<std::pair<Monomial, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (auto v : a.first) da += v;
    for (auto v : b.first) db += v;
    if (da != db) return da < db;
    return a.first > b.first;
  });
  for (const auto& [m, c] : ordered) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t k = 0; k < kMaxPolyVars; ++k) {
      if (m[k] == 0) continue;
      if (has_var) vars << '*';
      has_var = true;
      vars << names.at(k);
      if (m[k] > 1) vars << '^' << m[k];
    }
    if (!has_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << vars.str();
    }
  }
  return os.str();
}

IntPoly ghost_polynomial(unsigned p, std::size_t i, std::size_t offset) {
  IntPoly w;
  mpz_class pj = 1;
  for (std::size_t j = 0; j <= i; ++j) {
    unsigned e = 1;
    for (std::size_t k = 0; k < i - j; ++k) e *= p;
    w = w + IntPoly::variable(offset + j).pow(e).scaled(pj);
    pj *= p;
  }
  return w;
}

namespace {

using Combine = IntPoly (*)(const IntPoly&, const IntPoly&);

// Solve the ghost recursion for outputs T_0..T_{n-1} given the target
// ghost polynomials.
std::vector<IntPoly> solve_ghost(unsigned p, const std::vector<IntPoly>& targets) {
  std::vector<IntPoly> out;
  mpz_class pi = 1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    IntPoly acc = targets[i];
    mpz_class pj = 1;
    for (std::size_t j = 0; j < i; ++j) {
      unsigned e = 1;
      for (std::size_t k = 0; k < i - j; ++k) e *= p;
      acc = acc - out[j].pow(e).scaled(pj);
      pj *= p;
    }
    out.push_back(acc.divided_exactly(pi));
    pi *= p;
  }
  return out;
}

}  // namespace

UniversalWittPolys::UniversalWittPolys(unsigned p, std::size_t n) : p_(p), n_(n) {
  std::vector<IntPoly> sum_t, diff_t, prod_t, frob_t;
  for (std::size_t i = 0; i < n; ++i) {
    const IntPoly wx = ghost_polynomial(p, i, 0);
    const IntPoly wy = ghost_polynomial(p, i, n);
    sum_t.push_back(wx + wy);
    diff_t.push_back(wx - wy);
    prod_t.push_back(wx * wy);
    frob_t.push_back(ghost_polynomial(p, i + 1, 0));
  }
  sum_ = solve_ghost(p, sum_t);
  diff_ = solve_ghost(p, diff_t);
  prod_ = solve_ghost(p, prod_t);
  frob_ = solve_ghost(p, frob_t);
}

std::vector<std::string> UniversalWittPolys::variable_names() const {
  std::vector<std::string> names(kMaxPolyVars);
  for (std::size_t i = 0; i < n_; ++i) {
    names[i] = "X" + std::to_string(i);
    names[n_ + i] = "Y" + std::to_string(i);
  }
  return names;
}

const ReducedPolySystem& UniversalWittPolys::reduced(Op op, std::uint64_t modulus) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(static_cast<int>(op), modulus);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;

  const std::vector<IntPoly>* src = nullptr;
  std::size_t vars = 2 * n_;
  switch (op) {
    case Op::kSum: src = &sum_; break;
    case Op::kDifference: src = &diff_; break;
    case Op::kProduct: src = &prod_; break;
    case Op::kFrobenius:
      src = &frob_;
      vars = n_ + 1;
      break;
  }
  auto sys = std::make_unique<ReducedPolySystem>();
  sys->variables = vars;
  sys->max_degree.assign(vars, 0);
  const mpz_class m(std::to_string(modulus));
  for (const IntPoly& poly : *src) {
    std::vector<ReducedPolySystem::Term> terms;
    for (const auto& [mono, c] : poly.terms()) {
      mpz_class r = c % m;
      if (r < 0) r += m;
      if (r == 0) continue;
      ReducedPolySystem::Term t;
      t.coefficient = static_cast<std::int64_t>(r.get_ui());
      for (std::size_t v = 0; v < vars; ++v) {
        if (mono[v] == 0) continue;
        t.factors.emplace_back(static_cast<std::uint8_t>(v), mono[v]);
        sys->max_degree[v] = std::max<unsigned>(sys->max_degree[v], mono[v]);
      }
      terms.push_back(std::move(t));
    }
    sys->outputs.push_back(std::move(terms));
  }
  const ReducedPolySystem& ref = *sys;
  cache_.emplace(key, std::move(sys));
  return ref;
}

const UniversalWittPolys& universal_polys(unsigned p, std::size_t n) {
  if (!is_prime(p)) throw DomainError("Witt vectors need a prime p");
  if (n < 1 || n > kMaxWittLength) throw DomainError("Witt length n must satisfy 1 <= n <= 4");
  std::uint64_t span = 1;
  for (std::size_t i = 1; i < n; ++i) span *= p;
  if (span > 27) throw DomainError("Witt length n=" + std::to_string(n) + " unsupported for p=" + std::to_string(p));
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::size_t>, std::unique_ptr<UniversalWittPolys>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto polys = std::make_unique<UniversalWittPolys>(p, n);
  const UniversalWittPolys& ref = *polys;
  cache.emplace(key, std::move(polys));
  return ref;
}

}  // namespace asw
