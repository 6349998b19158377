#include "magics/common/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace magics {

int Rng::uniform_int(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_int needs n > 0");
  // Rejection-free modulo is fine here: n is tiny relative to 2^64, so the
  // bias is far below anything our statistical tests can resolve.
  return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::string Rng::serialize() const {
  std::ostringstream os;
  os << gen_ << ' ' << (has_spare_ ? 1 : 0) << ' ';
  os.precision(17);
  os << spare_;
  return os.str();
}

void Rng::deserialize(const std::string& text) {
  std::istringstream is(text);
  int spare_flag = 0;
  is >> gen_ >> spare_flag >> spare_;
  if (is.fail()) throw std::runtime_error("bad rng state string");
  has_spare_ = spare_flag != 0;
}

Rng Rng::split() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace magics
