#include "polarlib/upoly.hpp"

#include <algorithm>
#include <optional>

#include "polarlib/error.hpp"

namespace polar::elim {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string mainVariable(const Poly& p) {
  const auto used = p.usedVariables();
  if (used.size() > 1) throwInput("not_univariate", "expected a univariate polynomial, got " + p.toString());
  if (used.size() == 1) return used.front();
  if (!p.variables().empty()) return p.variables().front();
  return "x";
}

UPoly UPoly::fromPoly(const Poly& p) {
  const std::string v = mainVariable(p);
  const auto idx = p.indexOf(v);
  std::vector<Rational> c;
  for (const auto& [e, q] : p.terms()) {
    const std::size_t k = idx ? e[*idx] : 0;
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] = q;
  }
  return UPoly(std::move(c));
}

Poly UPoly::toPoly(const std::string& var) const {
  Poly::TermMap terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) terms.emplace(Exponents{static_cast<std::uint32_t>(k)}, c_[k]);
  return Poly({var}, std::move(terms));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  const Rational inv = 1 / c_.back();
  std::vector<Rational> out = c_;
  for (auto& q : out) q *= inv;
  return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.isZero() || b.isZero()) return UPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.isZero()) throwInput("division_by_zero", "univariate division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

namespace {

UPoly euclidGcd(UPoly a, UPoly b) {
  while (!b.isZero()) {
    UPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Primitive integer coefficients of a nonzero polynomial.
std::vector<Integer> integerCoefficients(const UPoly& p) {
  Integer den = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : p.coeffs()) {
    out.push_back(q.get_num() * (den / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer evalAt(const std::vector<Integer>& c, const Integer& xi) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

bool divides(const UPoly& g, const UPoly& a) { return divmod(a, g).second.isZero(); }

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the polynomial back from its balanced xi-adic digits.
std::optional<UPoly> heuristicGcd(const UPoly& a, const UPoly& b) {
  const auto ca = integerCoefficients(a);
  const auto cb = integerCoefficients(b);
  Integer bound = 0;
  for (const auto* c : {&ca, &cb}) {
    Integer m = 0;
    for (const auto& v : *c) m = std::max(m, Integer(abs(v)));
    bound = bound == 0 ? m : std::min(bound, m);
  }
  Integer xi = 2 * bound + 29;
  for (int round = 0; round < 6; ++round) {
    Integer h;
    const Integer va = evalAt(ca, xi);
    const Integer vb = evalAt(cb, xi);
    mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    std::vector<Rational> g;
    const Integer half = xi / 2;
    while (h != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      g.emplace_back(r);
      h = (h - r) / xi;
    }
    const UPoly cand = UPoly(std::move(g)).monic();
    if (!cand.isZero() && divides(cand, a) && divides(cand, b)) return cand;
    // next evaluation point, as in the classical heuristic
    Integer s;
    mpz_sqrt(s.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    xi = xi * 73794 * s / 27011;
  }
  return std::nullopt;
}

}  // namespace

UPoly gcd(UPoly a, UPoly b) {
  if (a.isZero()) return b.monic();
  if (b.isZero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly(std::vector<Rational>{Rational(1)});
  if (auto g = heuristicGcd(a, b)) return *g;
  return euclidGcd(std::move(a), std::move(b));
}

namespace {

using Factorization = std::vector<std::pair<Integer, int>>;

Integer pollardBrent(const Integer& n, unsigned long c) {
  Integer x = 2, y = 2, d = 1, q = 1, ys;
  auto f = [&](const Integer& v) {
    Integer r = v * v + c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  unsigned long r = 1;
  while (d == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && d == 1) {
      ys = y;
      const unsigned long m = std::min(128UL, r - k);
      for (unsigned long i = 0; i < m; ++i) {
        y = f(y);
        Integer diff = x - y;
        q *= abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (d == n) {
    do {
      ys = f(ys);
      Integer diff = x - ys;
      diff = abs(diff);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (d == 1);
  }
  return d;
}

void factorInto(Integer n, Factorization& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.emplace_back(n, 1);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = pollardBrent(n, c);
    if (d != n) {
      factorInto(d, out);
      factorInto(n / d, out);
      return;
    }
  }
}

Factorization factorize(Integer n) {
  n = abs(n);
  Factorization raw;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      raw.emplace_back(Integer(p), 1);
      n /= p;
    }
  }
  factorInto(n, raw);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Factorization merged;
  for (const auto& [p, k] : raw) {
    if (!merged.empty() && merged.back().first == p) {
      merged.back().second += k;
    } else {
      merged.emplace_back(p, k);
    }
  }
  return merged;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rationalRoots(const UPoly& p) {
  if (p.isZero()) throwInput("zero_polynomial", "rational roots of the zero polynomial");
  UPoly sf = divmod(p, gcd(p, p.derivative())).first;
  std::vector<Rational> roots;
  // Clear denominators: integer primitive coefficients.
  Integer den_lcm = 1;
  for (const auto& q : sf.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& q : sf.coeffs()) a.push_back(q.get_num() * (den_lcm / q.get_den()));
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (a.size() >= 2) {
    const UPoly reduced([&] {
      std::vector<Rational> c;
      for (const auto& v : a) c.emplace_back(v);
      return c;
    }());
    if (a.size() == 2) {
      roots.push_back(makeRational(-a[0], a[1]));
    } else {
      // p/q in lowest terms is a root only if p | a0, q | an, and
      // (q - p) | f(1), (q + p) | f(-1).
      const Integer f1 = [&] {
        Integer s = 0;
        for (const auto& v : a) s += v;
        return s;
      }();
      const Integer fm1 = [&] {
        Integer s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i % 2 == 0) ? a[i] : Integer(-a[i]);
        return s;
      }();
      const auto ps = divisors(a.front());
      const auto qs = divisors(a.back());
      for (const auto& q : qs) {
        for (const auto& pabs : ps) {
          Integer g;
          mpz_gcd(g.get_mpz_t(), pabs.get_mpz_t(), q.get_mpz_t());
          if (g != 1) continue;
          for (int sign : {1, -1}) {
            const Integer num = sign * pabs;
            const Integer qm = q - num, qp = q + num;
            if (qm != 0 && f1 != 0 && !mpz_divisible_p(f1.get_mpz_t(), qm.get_mpz_t())) continue;
            if (qp != 0 && fm1 != 0 && !mpz_divisible_p(fm1.get_mpz_t(), qp.get_mpz_t())) continue;
            const Rational r = makeRational(num, q);
            if (reduced.eval(r) == 0) roots.push_back(r);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace polar::elim
