#include "polarlib/random.hpp"

namespace polar {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt) {
  return Rng(splitmix(splitmix(splitmix(seed) ^ stream) ^ (attempt * 0x632be59bd9b4e019ULL)));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Rational Rng::rational(std::int64_t numBound, std::int64_t denBound) {
  const std::int64_t num = uniform(-numBound, numBound);
  const std::int64_t den = uniform(1, denBound);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace polar
