#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lrd {

// Philox2x64, 10 rounds. Counter-based: the block at (key, c0, c1) is a pure
// function, so any element of a stream can be computed without generating its
// predecessors and a path can be extended without disturbing its prefix.
std::array<std::uint64_t, 2> philox2x64(std::uint64_t key, std::uint64_t c0,
                                        std::uint64_t c1);

// One splitmix64 step from state x (canonical constants).
std::uint64_t splitmix64(std::uint64_t x);

// Seed for replicate r of an experiment keyed by base_seed.
std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t r);

// Index-addressable standard normals. Indices are signed: the linear model
// needs innovations xi_j for j in [-M, n). Consecutive indices 2m, 2m+1 share
// one Philox block through the Box-Muller pair, so a sequential fill costs one
// block per two normals.
class normal_stream {
 public:
  normal_stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  // N(0,1) variate at index k, any k.
  double normal(std::int64_t k) const;

  // out[i] = normal(first + i) for i in [0, count).
  void fill(std::int64_t first, std::size_t count, double* out) const;
  std::vector<double> take(std::int64_t first, std::size_t count) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace lrd
