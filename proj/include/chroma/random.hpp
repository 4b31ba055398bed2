#pragma once

#include <cmath>
#include <cstdint>

namespace chroma {

/// Counter-based SplitMix64 stream.
///
/// A stream is fully determined by (seed, index); replicate r of a run uses
/// Stream(seed, r), so results do not depend on how replicates are scheduled.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index)
      : state_(mix(mix(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform integer in [0, bound) for bound in [1, 2^32], by Lemire's multiply-shift
  /// with rejection. Each 64-bit output supplies two 32-bit draws.
  std::uint32_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (std::uint64_t{1} << 32) % bound;
    for (;;) {
      std::uint64_t product = std::uint64_t{next32()} * bound;
      if ((product & 0xFFFFFFFFULL) >= threshold) return static_cast<std::uint32_t>(product >> 32);
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint32_t next32() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    std::uint64_t word = next();
    spare_ = static_cast<std::uint32_t>(word >> 32);
    has_spare_ = true;
    return static_cast<std::uint32_t>(word);
  }

  std::uint64_t state_;
  std::uint32_t spare_ = 0;
  bool has_spare_ = false;
};

/// One 64-bit draw per trial, compared against floor(p * 2^64).
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(double p) {
    if (p >= 1.0) {
      always_ = true;
    } else if (p > 0.0) {
      long double scaled = std::ldexp(static_cast<long double>(p), 64);
      if (scaled >= 0x1.0p64L) {
        always_ = true;
      } else {
        threshold_ = static_cast<std::uint64_t>(scaled);
      }
    }
  }
  bool sample(Stream& s) const { return always_ || s.next() < threshold_; }

 private:
  std::uint64_t threshold_ = 0;
  bool always_ = false;
};

}  // namespace chroma
