#include "absq/random.hpp"

#include <cmath>

#include "absq/errors.hpp"

namespace absq {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : state_) s = splitmix64(sm);
}

RandomStream RandomStream::derive(std::uint64_t master_seed,
                                  std::initializer_list<std::uint64_t> path) {
  std::uint64_t sm = master_seed;
  std::uint64_t acc = splitmix64(sm);
  for (std::uint64_t label : path) {
    acc ^= label + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
    std::uint64_t t = acc;
    acc = splitmix64(t);
  }
  return RandomStream(acc);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

std::int64_t RandomStream::next_below(std::int64_t bound) {
  if (bound <= 0) throw InvalidArgument("next_below: bound must be positive");
  // Multiply-high reduction; deterministic, bias < bound / 2^64.
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(next_u64()) *
      static_cast<unsigned __int128>(static_cast<std::uint64_t>(bound));
  return static_cast<std::int64_t>(prod >> 64);
}

}  // namespace absq
