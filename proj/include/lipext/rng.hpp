#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace lipext {

// Seeded generator with hand-rolled distributions. mt19937_64's raw stream
// is pinned by the standard; the distributions in <random> are not, so
// uniform/gaussian are derived from raw bits here to keep experiment output
// byte-stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n) without modulo bias.
  int uniform_int(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = (UINT64_MAX / un) * un;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return static_cast<int>(r % un);
  }

  // Box-Muller; keeps the spare value so the stream stays deterministic.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a, used to derive independent per-task seeds and witness digests.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 1469598103934665603ULL) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t seed = 1469598103934665603ULL) {
  return fnv1a64(s.data(), s.size(), seed);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return fnv1a64(&b, sizeof(b), fnv1a64(&a, sizeof(a)));
}

}  // namespace lipext
