#include "lrd/rng.hpp"

#include <cmath>

namespace lrd {
namespace {

constexpr std::uint64_t kMul = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

struct pair_out {
  double even;
  double odd;
};

// Box-Muller on one Philox block. u1 is shifted into (0,1] so the log is
// always finite; u2 in [0,1).
inline pair_out box_muller_block(std::uint64_t seed, std::uint64_t c0,
                                 std::uint64_t c1) {
  auto b = philox2x64(seed, c0, c1);
  double u1 = static_cast<double>((b[0] >> 11) + 1) * 0x1p-53;
  double u2 = static_cast<double>(b[1] >> 11) * 0x1p-53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

std::array<std::uint64_t, 2> philox2x64(std::uint64_t key, std::uint64_t c0,
                                        std::uint64_t c1) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) key += kWeyl;
    std::uint64_t hi, lo;
    mulhilo(kMul, c0, hi, lo);
    c0 = hi ^ key ^ c1;
    c1 = lo;
  }
  return {c0, c1};
}

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + kWeyl;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t r) {
  return splitmix64(base_seed + kWeyl * (r + 1));
}

double normal_stream::normal(std::int64_t k) const {
  std::int64_t m = k >> 1;  // floor(k/2), valid for negative k
  pair_out p = box_muller_block(seed_, static_cast<std::uint64_t>(m), stream_);
  return (k & 1) == 0 ? p.even : p.odd;
}

void normal_stream::fill(std::int64_t first, std::size_t count,
                         double* out) const {
  std::int64_t k = first;
  std::size_t i = 0;
  if (count > 0 && (k & 1) != 0) {
    out[i++] = normal(k);
    ++k;
  }
  while (i + 1 < count) {
    pair_out p = box_muller_block(seed_, static_cast<std::uint64_t>(k >> 1),
                                  stream_);
    out[i++] = p.even;
    out[i++] = p.odd;
    k += 2;
  }
  if (i < count) out[i] = normal(k);
}

std::vector<double> normal_stream::take(std::int64_t first,
                                        std::size_t count) const {
  std::vector<double> v(count);
  fill(first, count, v.data());
  return v;
}

}  // namespace lrd
