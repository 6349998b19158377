#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace magics {

// Deterministic random stream with explicit, serializable state. Gaussian
// draws use Box-Muller on 53-bit uniforms so sequences do not depend on the
// standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0, 1); never returns 0 or 1 exactly.
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int n);  // in [0, n)

  double normal();

  std::string serialize() const;
  void deserialize(const std::string& text);

  // Independent child stream derived from this stream's position.
  Rng split();

  // Stateless mix of a seed and a stream id, for per-episode streams.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
  bool has_spare_{false};
  double spare_{0.0};
};

}  // namespace magics
