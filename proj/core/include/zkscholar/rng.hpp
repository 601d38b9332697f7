#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "zkscholar/bytes.hpp"

namespace zks {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n);
  std::uint64_t next_u64();
  /// Uniform value in [0, bound) via rejection sampling; bound must be > 0.
  std::uint32_t below(std::uint32_t bound);
};

// SHA-256 counter stream. Identical output for a given seed on every
// platform, which is what makes scripted runs bit-reproducible.
class DeterministicRng final : public RandomSource {
 public:
  explicit DeterministicRng(std::uint64_t seed);
  explicit DeterministicRng(ByteView seed);
  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 32> block_{};
  std::uint64_t counter_ = 0;
  std::size_t used_ = 32;
};

class SystemRng final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

}  // namespace zks
