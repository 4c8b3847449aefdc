// Serial vs OpenMP timings for the Bareiss determinant and the counting trials.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "polarlib/bareiss.hpp"
#include "polarlib/counting.hpp"
#include "polarlib/elim.hpp"
#include "polarlib/random.hpp"

using namespace polar;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

Poly randomBivariate(Rng& rng, int degree) {
  Poly p(std::vector<std::string>{"x", "y"});
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      Poly::TermMap t{{Exponents{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                       Rational(static_cast<long>(rng.uniform(-20, 20)))}};
      p += Poly({"x", "y"}, std::move(t));
    }
  return p;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial [s]", "openmp [s]", "equal");
  Rng rng(2024);
  for (const int degree : {4, 6, 8}) {
    const Poly f = randomBivariate(rng, degree);
    const Poly g = randomBivariate(rng, degree);
    const auto m = elim::sylvesterMatrix(f, g, "y");
    Poly a, b;
    const double ts = seconds([&] { a = elim::bareissDeterminantSerial(m); }, 3);
    const double tp = seconds([&] { b = elim::bareissDeterminantParallel(m); }, 3);
    char name[64];
    std::snprintf(name, sizeof name, "Sylvester det, degree %d", degree);
    std::printf("%-34s %12.4f %12.4f %8s\n", name, ts, tp, a == b ? "yes" : "NO");
  }
  const Poly nodal = parsePolynomial("y^2 - x^2*(x+1)");
  const std::vector<counting::SingularPoint> node{{0, 0, 1, 1}};
  for (const int trials : {2, 8}) {
    counting::CountConfig serial, parallel;
    serial.trials = parallel.trials = trials;
    serial.parallel = false;
    int cs = 0, cp = 0;
    const double ts = seconds([&] { cs = counting::edDegreeCount(nodal, node, 1, serial).count; }, 2);
    const double tp = seconds([&] { cp = counting::edDegreeCount(nodal, node, 1, parallel).count; }, 2);
    char name[64];
    std::snprintf(name, sizeof name, "ED count nodal cubic, %d trials", trials);
    std::printf("%-34s %12.4f %12.4f %8s\n", name, ts, tp, cs == cp ? "yes" : "NO");
  }
  return 0;
}
