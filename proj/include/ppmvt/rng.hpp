#ifndef PPMVT_RNG_HPP
#define PPMVT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ppmvt {

// Deterministic random stream for synthetic pulses. std::mt19937_64 is
// bit-exact across platforms; the normal transform is done by hand because
// std::normal_distribution is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Fresh seed for a derived stream.
  std::uint64_t next_seed() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ppmvt

#endif
