#include "qstab/rng.hpp"

#include "qstab/special_functions.hpp"

namespace qstab {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag + 0x9e3779b97f4a7c15ULL));
}

double Rng::next_normal() { return sf::normal_quantile(next_uniform()); }

}  // namespace qstab
