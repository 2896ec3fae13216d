#include "csmd/random.hpp"

#include <boost/random/uniform_01.hpp>

namespace csmd {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view instance_id,
                          std::string_view algorithm_id, std::uint64_t rep_id) noexcept {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ fnv1a(instance_id));
  h = splitmix64(h ^ fnv1a(algorithm_id));
  return splitmix64(h ^ rep_id);
}

double uniform01(Engine& engine) {
  // 53 high bits -> exactly representable double in [0, 1).
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

bool bernoulli(Engine& engine, double p) {
  return uniform01(engine) < p;
}

}  // namespace csmd
