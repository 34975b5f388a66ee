#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qfilt {

/// SplitMix64 finalizer. Used to decorrelate seeds and to derive streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Folds a sequence of labels (run, repetition, purpose, ...) into one stream id.
std::uint64_t derive_stream(std::initializer_list<std::uint64_t> labels) noexcept;

/**
 * Deterministic random source identified by (seed, stream_id).
 *
 * The engine is mt19937_64, whose output sequence is fixed by the C++
 * standard. All distributions are implemented here rather than taken from
 * <random>, whose distribution algorithms are implementation-defined, so a
 * given (seed, stream_id) yields the same draws with any standard library.
 */
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Independent child stream; the parent state is not advanced.
  SeededRng substream(std::uint64_t label) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via the Marsaglia polar method.
  double normal();
  bool bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace qfilt
