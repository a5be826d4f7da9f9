#include "asw/asw_class.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "asw/error.hpp"

namespace asw {

unsigned p_adic_order(unsigned m, unsigned p) {
  if (m == 0) throw DomainError("ord_p(0) is undefined");
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

unsigned weighted_pole(const WittK& a) {
  const unsigned p = a.prime();
  unsigned best = 0;
  unsigned weight = 1;
  for (std::size_t i = a.length(); i-- > 0;) {
    best = std::max(best, weight * static_cast<unsigned>(a[i].pole_order()));
    weight *= p;
  }
  return best;
}

namespace {

// Coefficient of c0 in the F_p-line through c0 with the same trace as c.
FqElem constant_transversal(const FqElem& c) {
  const FqField& f = c.field();
  const FqElem c0 = f.trace_nonzero_element();
  const unsigned p = f.characteristic();
  const unsigned t0 = fq_trace(c0);
  unsigned t0_inv = 1;
  while (t0 * t0_inv % p != 1) ++t0_inv;
  return c0.times(static_cast<std::int64_t>(fq_trace(c) * t0_inv % p));
}

// y with y - y^p = d; d must have trace zero.
FqElem solve_artin_schreier(const FqElem& d) {
  for (const auto& y : d.field().elements())
    if (y - y.frobenius() == d) return y;
  throw Error("Artin-Schreier equation without solution (trace not zero)");
}

WittK embed(std::size_t i, const LaurentFq& y, std::size_t n) {
  std::vector<LaurentFq> c(n, y.zero_like());
  c[i] = y;
  return WittK(std::move(c));
}

enum class Action { kPolar, kPositive, kConstant };

class Reducer {
 public:
  Reducer(const WittK& a, int precision) : n_(a.length()), p_(a.prime()), prec_(precision) {
    std::vector<LaurentFq> c;
    for (const auto& x : a.components()) c.push_back(x.truncated(precision));
    x_ = WittK(std::move(c));
    trail_ = WittK::zero(n_, a.proto());
  }

  std::vector<Action> pending(std::size_t i) const {
    std::vector<Action> out;
    const LaurentFq& xi = x_[i];
    if (xi.is_zero()) return out;
    if (bad_polar(xi)) out.push_back(Action::kPolar);
    if (xi.highest_exponent() >= 1) out.push_back(Action::kPositive);
    const FqElem c = xi.coeff(0);
    if (!(c == constant_transversal(c))) out.push_back(Action::kConstant);
    return out;
  }

  void apply(std::size_t i, Action action) {
    const LaurentFq& xi = x_[i];
    const FqElem zero = xi.proto();
    switch (action) {
      case Action::kPolar: {
        // Largest bad pole c t^{-e}: subtract (1-F) V^i[(-c)^{1/p} t^{-e/p}].
        const int k = *bad_polar(xi);
        const FqElem d = (-xi.coeff(k)).frobenius_inverse();
        step(i, LaurentFq::monomial(d, k / static_cast<int>(p_)));
        break;
      }
      case Action::kPositive: {
        // P = y - y^p with y = P + P^p + P^{p^2} + ... (mod t^N).
        std::vector<FqElem> pos;
        for (int k = 1; k <= xi.highest_exponent(); ++k) pos.push_back(xi.coeff(k));
        // x_i may be known to less than prec_ after Witt carries; y can't claim more
        const int known = std::min(prec_, xi.precision());
        LaurentFq term = LaurentFq::from_terms(zero, 1, std::move(pos), known);
        LaurentFq y(zero, known);
        while (!term.is_zero()) {
          y += term;
          term = term.frobenius().truncated(known);
        }
        step(i, y);
        break;
      }
      case Action::kConstant: {
        const FqElem c = xi.coeff(0);
        const FqElem y = solve_artin_schreier(c - constant_transversal(c));
        step(i, LaurentFq::constant(y));
        break;
      }
    }
  }

  const WittK& current() const { return x_; }
  const WittK& trail() const { return trail_; }

 private:
  std::optional<int> bad_polar(const LaurentFq& xi) const {
    if (xi.is_zero()) return std::nullopt;
    for (int k = xi.lowest_exponent(); k < 0; ++k)
      if (k % static_cast<int>(p_) == 0 && !xi.coeff(k).is_zero()) return k;
    return std::nullopt;
  }

  void step(std::size_t i, const LaurentFq& y) {
    if (++steps_ > kMaxSteps) throw Error("class reduction did not terminate");
    const WittK w = embed(i, y, n_);
    x_ = x_ - (w - frobenius(w));
    trail_ = trail_ + w;
  }

  static constexpr int kMaxSteps = 100000;
  std::size_t n_;
  unsigned p_;
  int prec_;
  int steps_ = 0;
  WittK x_;
  WittK trail_;
};

}  // namespace

bool is_reduced(const WittK& a) {
  const int p = static_cast<int>(a.prime());
  for (const auto& x : a.components()) {
    if (!x.is_exact()) return false;
    if (x.is_zero()) continue;
    if (x.highest_exponent() > 0) return false;
    for (int k = x.lowest_exponent(); k < 0; ++k)
      if (k % p == 0 && !x.coeff(k).is_zero()) return false;
    const FqElem c = x.coeff(0);
    if (!(c == constant_transversal(c))) return false;
  }
  return true;
}

ASWClass reduce_class(const WittK& a, const ReductionOptions& options) {
  const unsigned L = weighted_pole(a);
  int input_prec = kExact;
  for (const auto& x : a.components()) input_prec = std::min(input_prec, x.precision());
  const int work = std::min<long>(input_prec, static_cast<long>(L) + kDefaultRelativePrecision);
  if (work <= static_cast<int>(L))
    throw PrecisionError("components known only mod t^" + std::to_string(input_prec) +
                         "; reduction needs more than t^" + std::to_string(L));

  Reducer r(a, work);
  const std::size_t n = a.length();
  if (options.order == PivotOrder::kComponentMajor) {
    for (std::size_t i = 0; i < n; ++i) {
      for (auto todo = r.pending(i); !todo.empty(); todo = r.pending(i)) r.apply(i, todo.front());
    }
  } else {
    std::mt19937_64 rng(options.seed);
    for (;;) {
      std::vector<std::pair<std::size_t, Action>> todo;
      for (std::size_t i = 0; i < n; ++i)
        for (Action act : r.pending(i)) todo.emplace_back(i, act);
      if (todo.empty()) break;
      const auto& [i, act] = todo[std::uniform_int_distribution<std::size_t>(0, todo.size() - 1)(rng)];
      r.apply(i, act);
    }
  }

  // Only terms at t^{<=0} remain; the series are now exact polynomials.
  std::vector<LaurentFq> rep;
  for (const auto& x : r.current().components()) {
    if (x.precision() < 1) throw PrecisionError("reduction lost the constant term; increase series precision");
    if (x.is_zero()) {
      rep.emplace_back(x.proto());
      continue;
    }
    std::vector<FqElem> c;
    for (int k = x.lowest_exponent(); k <= std::min(0, x.highest_exponent()); ++k) c.push_back(x.coeff(k));
    rep.push_back(LaurentFq::from_terms(x.proto(), x.lowest_exponent(), std::move(c)));
  }
  ASWClass out{WittK(std::move(rep)), r.trail(), true};
  if (options.check_trail) {
    const WittK& c = out.trail;
    if (!(a == out.representative + (c - frobenius(c))))
      throw Error("reduction trail identity input = rep + (1-F)c failed");
  }
  return out;
}

ASWClass reduced_class(const WittK& rep) {
  if (!is_reduced(rep)) throw DomainError("representative is not in reduced form");
  return {rep, WittK::zero(rep.length(), rep.proto()), true};
}

unsigned fil_log_level(const ASWClass& x) {
  if (!x.reduced) throw DomainError("fil_log_level needs a reduced class");
  return weighted_pole(x.representative);
}

bool in_fil_log(const WittK& rep, unsigned m) { return weighted_pole(rep) <= m; }

bool in_fil(const WittK& rep, unsigned m) {
  if (m == 0) return rep.is_zero();
  const std::size_t n = rep.length();
  const std::size_t n2 = std::min<std::size_t>(n, p_adic_order(m, rep.prime()));
  std::vector<LaurentFq> prefix(rep.components().begin(), rep.components().end());
  for (std::size_t i = n - n2; i < n; ++i) prefix[i] = rep[i].zero_like();
  if (weighted_pole(WittK(std::move(prefix))) > m - 1) return false;
  if (n2 == 0) return true;
  std::vector<LaurentFq> suffix(rep.components().begin() + static_cast<long>(n - n2), rep.components().end());
  return weighted_pole(WittK(std::move(suffix))) <= m;
}

unsigned fil_level(const ASWClass& x) {
  if (!x.reduced) throw DomainError("fil_level needs a reduced class");
  if (x.representative.is_zero()) return 0;
  const unsigned bound = weighted_pole(x.representative) + 1;
  for (unsigned m = 1; m <= bound; ++m)
    if (in_fil(x.representative, m)) return m;
  throw Error("fil_level exceeded fil_log_level + 1");
}

std::vector<WittK> enumerate_reduced(const FqField& field, const std::vector<unsigned>& max_pole) {
  constexpr std::uint64_t kMaxClasses = 1u << 22;
  const unsigned p = field.characteristic();
  const auto elems = field.elements();
  const FqElem c0 = field.trace_nonzero_element();
  // Slots per component: exponents -e (p not dividing e), then the constant.
  std::vector<std::vector<int>> exps(max_pole.size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < max_pole.size(); ++i) {
    for (unsigned e = max_pole[i]; e >= 1; --e)
      if (e % p != 0) exps[i].push_back(-static_cast<int>(e));
    for (std::size_t k = 0; k < exps[i].size(); ++k) total *= field.order();
    total *= p;
    if (total > kMaxClasses) throw DomainError("too many classes to enumerate");
  }
  std::vector<WittK> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::vector<LaurentFq> comps(max_pole.size(), LaurentFq(field.zero()));
    for (std::size_t i = max_pole.size(); i-- > 0;) {
      const unsigned k = static_cast<unsigned>(rest % p);
      rest /= p;
      std::vector<FqElem> c;
      int lowest = 0;
      if (!exps[i].empty()) lowest = exps[i].front();
      c.assign(static_cast<std::size_t>(-lowest + 1), field.zero());
      for (std::size_t s = exps[i].size(); s-- > 0;) {
        c[static_cast<std::size_t>(exps[i][s] - lowest)] = elems[rest % field.order()];
        rest /= field.order();
      }
      c.back() = c0.times(k);
      comps[i] = LaurentFq::from_terms(field.zero(), lowest, std::move(c));
    }
    out.emplace_back(std::move(comps));
  }
  return out;
}

std::vector<WittK> enumerate_fil_log(const FqField& field, std::size_t n, unsigned m) {
  const unsigned p = field.characteristic();
  std::vector<unsigned> poles(n);
  unsigned weight = 1;
  for (std::size_t i = n; i-- > 0;) {
    poles[i] = m / weight;
    weight *= p;
  }
  return enumerate_reduced(field, poles);
}

std::vector<WittK> enumerate_pole_bounded(const FqField& field, std::size_t n, unsigned pole_bound) {
  return enumerate_reduced(field, std::vector<unsigned>(n, pole_bound));
}

}  // namespace asw
