#include "polarlib/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "polarlib/error.hpp"

namespace polar {

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throwInput("zero_denominator", "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parseRational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throwInput("bad_rational", "not a rational number: '" + text + "'");
  return makeRational(Integer(strip_plus(num)), Integer(den));
}

std::string toString(const Rational& q) { return q.get_str(); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throwInput("duplicate_variable", "duplicate variable '" + vars_[i] + "'");
}

Poly::Poly(std::vector<std::string> variables, TermMap terms) : Poly(std::move(variables)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size())
      throwInput("exponent_length", "exponent vector length does not match variable count");
    if (c != 0) terms_.emplace(e, c);
  }
}

Poly Poly::constant(const Rational& c, std::vector<std::string> variables) {
  Poly p(std::move(variables));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::variable(const std::string& name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
  Poly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[*p.indexOf(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool Poly::isConstant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

std::optional<std::size_t> Poly::indexOf(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::string> Poly::usedVariables() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.push_back(vars_[i]);
  return out;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return kZeroDegree;
  const auto& e = terms_.begin()->first;  // grlex puts the highest degree first
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int Poly::degreeIn(std::string_view name) const {
  if (terms_.empty()) return kZeroDegree;
  const auto idx = indexOf(name);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return static_cast<int>(d);
}

bool Poly::isHomogeneous() const {
  if (terms_.empty()) return true;
  const int d = totalDegree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return static_cast<int>(std::accumulate(t.first.begin(), t.first.end(), std::uint64_t{0})) == d;
  });
}

Rational Poly::leadingCoefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Poly::constantTerm() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::alignedTo(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  Poly out(variables);
  std::vector<std::size_t> target(vars_.size());
  const auto used = usedVariables();
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto idx = out.indexOf(vars_[i]);
    if (!idx) {
      if (std::find(used.begin(), used.end(), vars_[i]) != used.end())
        throwInput("unknown_variable", "variable '" + vars_[i] + "' missing from target variable list");
      target[i] = variables.size();  // unused, dropped
    } else {
      target[i] = *idx;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (target[i] < variables.size()) ne[target[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::vector<std::string> unionVariables(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

void Poly::addTerm(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.vars_ != vars_) {
    const auto vars = unionVariables(vars_, other.vars_);
    *this = alignedTo(vars);
    return *this += other.alignedTo(vars);
  }
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.vars_ != vars_) {
    const auto vars = unionVariables(vars_, other.vars_);
    *this = alignedTo(vars);
    return *this -= other.alignedTo(vars);
  }
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) {
    const auto vars = unionVariables(a.vars_, b.vars_);
    return a.alignedTo(vars) * b.alignedTo(vars);
  }
  Poly out(a.vars_);
  Exponents e(a.vars_.size());
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.addTerm(e, prod);
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const auto vars = unionVariables(a.vars_, b.vars_);
  return a.alignedTo(vars).terms_ == b.alignedTo(vars).terms_;
}

std::string Poly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool is_const = std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly differentiate(const Poly& p, std::string_view var) {
  const auto idx = p.indexOf(var);
  if (!idx) throwInput("unknown_variable", "cannot differentiate by unknown variable '" + std::string(var) + "'");
  Poly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[*idx] == 0) continue;
    Exponents ne = e;
    ne[*idx] -= 1;
    out.emplace(std::move(ne), c * e[*idx]);
  }
  return Poly(p.variables(), std::move(out));
}

namespace {

Rational powRational(const Rational& base, std::uint32_t k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

}  // namespace

Rational evaluate(const Poly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values;
  values.reserve(p.variables().size());
  for (const auto& v : p.variables()) {
    auto it = point.find(v);
    if (it == point.end()) throwInput("unbound_variable", "no value bound for variable '" + v + "'");
    values.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i)
      if (e[i] > 0) term *= powRational(values[i], e[i]);
    sum += term;
  }
  return sum;
}

Poly substitute(const Poly& p, std::string_view var, const Rational& value) {
  const auto idx = p.indexOf(var);
  if (!idx) throwInput("unknown_variable", "cannot substitute unknown variable '" + std::string(var) + "'");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < p.variables().size(); ++i)
    if (i != *idx) vars.push_back(p.variables()[i]);
  Poly out(vars);
  std::map<std::uint32_t, Rational> powers;
  for (const auto& [e, c] : p.terms()) {
    auto [it, fresh] = powers.try_emplace(e[*idx]);
    if (fresh) it->second = powRational(value, e[*idx]);
    if (it->second == 0) continue;
    Exponents ne;
    ne.reserve(vars.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *idx) ne.push_back(e[i]);
    out += Poly(vars, Poly::TermMap{{std::move(ne), c * it->second}});
  }
  return out;
}

Poly substitute(const Poly& p, std::string_view var, const Poly& value) {
  const auto idx = p.indexOf(var);
  if (!idx) throwInput("unknown_variable", "cannot substitute unknown variable '" + std::string(var) + "'");
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < p.variables().size(); ++i)
    if (i != *idx) rest.push_back(p.variables()[i]);
  const auto vars = unionVariables(rest, value.variables());
  const Poly v = value.alignedTo(vars);
  // Horner in var over coefficient polynomials.
  auto coeffs = coefficientsIn(p, var);
  Poly acc(vars);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * v + substitute(*it, var, Rational(0)).alignedTo(vars);
  }
  return acc;
}

Poly homogenize(const Poly& p, const std::string& newVar) {
  if (p.hasVariable(newVar)) throwInput("duplicate_variable", "homogenizing variable '" + newVar + "' already present");
  auto vars = p.variables();
  vars.push_back(newVar);
  if (p.isZero()) return Poly(vars);
  const auto d = static_cast<std::uint32_t>(p.totalDegree());
  Poly::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne.push_back(d - std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
    out.emplace(std::move(ne), c);
  }
  return Poly(std::move(vars), std::move(out));
}

Poly dehomogenize(const Poly& p, std::string_view var) {
  if (!p.hasVariable(var)) throwInput("unknown_variable", "cannot dehomogenize by unknown variable '" + std::string(var) + "'");
  if (!p.isHomogeneous()) throwInput("not_homogeneous", "dehomogenize requires a homogeneous polynomial");
  return substitute(p, var, Rational(1));
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1, p.variables());
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Poly> coefficientsIn(const Poly& p, std::string_view var) {
  const auto idx = p.indexOf(var);
  if (!idx) return {p};
  if (p.isZero()) return {};
  std::vector<Poly::TermMap> parts(static_cast<std::size_t>(p.degreeIn(var)) + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    const auto k = ne[*idx];
    ne[*idx] = 0;
    parts[k].emplace(std::move(ne), c);
  }
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& t : parts) out.emplace_back(p.variables(), std::move(t));
  return out;
}

Poly fromCoefficients(const std::vector<Poly>& coeffs, std::string_view var) {
  if (coeffs.empty()) return Poly();
  auto vars = coeffs.front().variables();
  for (const auto& c : coeffs) vars = unionVariables(vars, c.variables());
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.emplace_back(var);
  Poly out(vars);
  const std::size_t idx = static_cast<std::size_t>(
      std::find(vars.begin(), vars.end(), var) - vars.begin());
  Poly::TermMap terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Poly c = coeffs[k].alignedTo(vars);
    for (const auto& [e, q] : c.terms()) {
      if (e[idx] != 0) throwInput("bad_coefficient", "coefficient polynomial depends on the main variable");
      Exponents ne = e;
      ne[idx] = static_cast<std::uint32_t>(k);
      terms.emplace(std::move(ne), q);
    }
  }
  return Poly(vars, std::move(terms));
}

std::optional<Poly> tryDivide(const Poly& a, const Poly& b) {
  if (b.isZero()) throwInput("division_by_zero", "division by the zero polynomial");
  if (a.variables() != b.variables()) {
    const auto vars = unionVariables(a.variables(), b.variables());
    return tryDivide(a.alignedTo(vars), b.alignedTo(vars));
  }
  const auto& vars = a.variables();
  Poly rem = a;
  Poly::TermMap quotient;
  const auto& [lead_e, lead_c] = *b.terms().begin();
  const Rational inv_lead = 1 / lead_c;
  Exponents qe(vars.size());
  while (!rem.isZero()) {
    const auto& [re, rc] = *rem.terms().begin();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      qe[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc * inv_lead;
    quotient.emplace(qe, qc);
    Poly::TermMap sub;
    for (const auto& [be, bc] : b.terms()) {
      Exponents e(be.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = be[i] + qe[i];
      sub.emplace(std::move(e), -(bc * qc));
    }
    rem += Poly(vars, std::move(sub));
  }
  return Poly(vars, std::move(quotient));
}

Poly divideExact(const Poly& a, const Poly& b) {
  auto q = tryDivide(a, b);
  if (!q) throwConsistency("inexact_division", "expected exact division of " + a.toString() + " by " + b.toString());
  return *std::move(q);
}

Poly primitiveNormalized(const Poly& p) {
  if (p.isZero()) return p;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale = makeRational(den_lcm, num_gcd);
  if (p.leadingCoefficient() < 0) scale = -scale;
  return p * scale;
}

}  // namespace polar
