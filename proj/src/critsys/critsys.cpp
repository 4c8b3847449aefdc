#include "polarlib/critsys.hpp"

#include <algorithm>
#include <functional>

#include "polarlib/error.hpp"
#include "polarlib/linear.hpp"

namespace polar::critsys {

QuadricSpec QuadricSpec::general(Poly q, std::string homogenizingVar) {
  QuadricSpec s;
  s.kind = Kind::General;
  s.q = std::move(q);
  s.homogenizingVar = std::move(homogenizingVar);
  return s;
}

QuadricSpec QuadricSpec::euclidean(std::vector<Rational> center) {
  QuadricSpec s;
  s.kind = Kind::Euclidean;
  s.center = std::move(center);
  return s;
}

PolySystem PolySystem::make(std::vector<Poly> equations, int dim, std::vector<std::string> variables) {
  if (equations.empty()) throwInput("empty_system", "polynomial system has no equations");
  if (variables.empty())
    for (const auto& f : equations) variables = unionVariables(variables, f.variables());
  for (auto& f : equations) {
    for (const auto& v : f.usedVariables())
      if (std::find(variables.begin(), variables.end(), v) == variables.end())
        throwInput("variable_mismatch", "equation uses '" + v + "' outside the system variables");
    f = f.alignedTo(variables);
  }
  const int n = static_cast<int>(variables.size());
  if (dim < 0 || dim >= n)
    throwInput("bad_dimension", "dimension must satisfy 0 <= m < n = " + std::to_string(n));
  if (static_cast<int>(equations.size()) < n - dim)
    throwInput("bad_dimension", "need at least n - m equations");
  PolySystem s;
  s.equations = std::move(equations);
  s.dim = dim;
  s.variables = std::move(variables);
  return s;
}

namespace {

std::vector<Poly> gradient(const Poly& f, const std::vector<std::string>& vars) {
  std::vector<Poly> row;
  for (const auto& v : vars) row.push_back(differentiate(f, v).alignedTo(vars));
  return row;
}

void appendJacobian(const PolySystem& sys, CriticalMatrix& m) {
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    auto row = gradient(sys.equations[i], sys.variables);
    if (std::all_of(row.begin(), row.end(), [](const Poly& p) { return p.isZero(); }))
      m.warnings.push_back("gradient row " + std::to_string(i + 1) + " is identically zero");
    m.rows.push_back(std::move(row));
  }
  m.minorSize = sys.ambient() - sys.dim + 1;
}

void checkCenterSum(const std::vector<Rational>& center, CriticalMatrix& m) {
  Rational s = 0;
  for (const auto& a : center) s += a;
  if (s == 1) m.warnings.push_back("center coordinates sum to 1 (excluded case for the Euclidean quadric)");
}

RationalMatrix symmetricMatrix(const Poly& q, const std::vector<std::string>& vars) {
  const std::size_t k = vars.size();
  RationalMatrix a(k, std::vector<Rational>(k, Rational(0)));
  const Poly qa = q.alignedTo(vars);
  for (const auto& [e, c] : qa.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      for (std::uint32_t t = 0; t < e[i]; ++t) idx.push_back(i);
    if (idx[0] == idx[1]) {
      a[idx[0]][idx[0]] += c;
    } else {
      a[idx[0]][idx[1]] += c / 2;
      a[idx[1]][idx[0]] += c / 2;
    }
  }
  return a;
}

}  // namespace

CriticalMatrix buildReciprocalMatrix(const PolySystem& sys, const QuadricSpec& quad) {
  const auto& vars = sys.variables;
  CriticalMatrix m;
  if (quad.kind == QuadricSpec::Kind::Euclidean) {
    if (quad.center.size() != vars.size())
      throwInput("dimension_mismatch", "center has " + std::to_string(quad.center.size()) +
                                           " coordinates, system has " + std::to_string(vars.size()));
    std::vector<Poly> row;
    for (std::size_t i = 0; i < vars.size(); ++i)
      row.push_back(Poly::variable(vars[i], vars) - Poly::constant(quad.center[i], vars));
    m.rows.push_back(std::move(row));
    checkCenterSum(quad.center, m);
    std::map<std::string, Rational> point;
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = quad.center[i];
    if (std::all_of(sys.equations.begin(), sys.equations.end(),
                    [&](const Poly& f) { return evaluate(f, point) == 0; }))
      m.warnings.push_back("data point lies on the variety");
  } else {
    const std::string& h = quad.homogenizingVar;
    if (std::find(vars.begin(), vars.end(), h) != vars.end())
      throwInput("variable_mismatch", "homogenizing variable '" + h + "' is also a system variable");
    std::vector<std::string> qvars{h};
    qvars.insert(qvars.end(), vars.begin(), vars.end());
    for (const auto& v : quad.q.usedVariables())
      if (std::find(qvars.begin(), qvars.end(), v) == qvars.end())
        throwInput("variable_mismatch", "quadric uses '" + v + "' outside x0..xn");
    const Poly q = quad.q.alignedTo(qvars);
    if (q.isZero() || !q.isHomogeneous() || q.totalDegree() != 2)
      throwInput("bad_quadric", "quadric must be homogeneous of degree 2");
    if (determinant(symmetricMatrix(q, qvars)) == 0) throwInput("degenerate_quadric", "quadric is degenerate");
    std::vector<Poly> row;
    for (const auto& v : vars) row.push_back(substitute(differentiate(q, v), h, Rational(1)).alignedTo(vars));
    m.rows.push_back(std::move(row));
  }
  if (std::all_of(m.rows[0].begin(), m.rows[0].end(), [](const Poly& p) { return p.isZero(); }))
    m.warnings.push_back("quadric row is identically zero");
  appendJacobian(sys, m);
  return m;
}

CriticalMatrix buildEDMatrix(const PolySystem& sys, const DataPoint& data) {
  return buildReciprocalMatrix(sys, QuadricSpec::euclidean(data));
}

namespace {

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Poly> minors(const CriticalMatrix& mat) {
  const std::size_t r = mat.rows.size();
  const std::size_t c = r == 0 ? 0 : mat.rows[0].size();
  if (mat.minorSize <= 0 || static_cast<std::size_t>(mat.minorSize) > std::min(r, c))
    throwInput("minor_size", "minor size " + std::to_string(mat.minorSize) + " exceeds the matrix shape " +
                                 std::to_string(r) + "x" + std::to_string(c));
  const auto k = static_cast<std::size_t>(mat.minorSize);
  std::vector<Poly> out;
  combinations(r, k, [&](const std::vector<std::size_t>& rs) {
    combinations(c, k, [&](const std::vector<std::size_t>& cs) {
      elim::PolyMatrix sub(k, std::vector<Poly>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = mat.rows[rs[i]][cs[j]];
      out.push_back(elim::determinant(std::move(sub), false));
    });
  });
  return out;
}

std::vector<std::string> planeVariables(const Poly& a, const Poly& b) {
  const auto used = unionVariables(a.usedVariables(), b.usedVariables());
  if (used.size() > 2) throwInput("not_plane_curve", "expected polynomials in at most two variables");
  auto listed = unionVariables(a.variables(), b.variables());
  if (listed == std::vector<std::string>{"y", "x"}) std::swap(listed[0], listed[1]);
  if (listed.size() == 2) return listed;
  std::vector<std::string> out = used;
  for (const char* v : {"x", "y"})
    if (out.size() < 2 && std::find(out.begin(), out.end(), v) == out.end()) out.emplace_back(v);
  if (out == std::vector<std::string>{"y", "x"}) std::swap(out[0], out[1]);
  return out;
}

PlaneEDSystem planeCurveEDSystem(const Poly& F, const DataPoint& data) {
  if (F.isZero() || F.isConstant()) throwInput("constant_curve", "curve equation is constant");
  if (data.size() != 2) throwInput("dimension_mismatch", "plane data point needs two coordinates");
  const auto vars = planeVariables(F);
  PlaneEDSystem s;
  s.F = F.alignedTo(vars);
  const Poly fx = differentiate(s.F, vars[0]);
  const Poly fy = differentiate(s.F, vars[1]);
  const Poly dx = Poly::variable(vars[0], vars) - Poly::constant(data[0], vars);
  const Poly dy = Poly::variable(vars[1], vars) - Poly::constant(data[1], vars);
  s.G = dx * fy - dy * fx;
  s.degenerate = s.G.isZero();
  return s;
}

}  // namespace polar::critsys
