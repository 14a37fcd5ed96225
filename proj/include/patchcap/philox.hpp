#pragma once

#include <array>
#include <cstdint>

namespace patchcap {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// A stream is identified by (seed, stream id); draws advance a 64-bit block
/// counter. Every trajectory gets its own stream, so results do not depend on
/// how trajectories are scheduled across workers.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  /// Raw 10-round bijection.
  static Block bijection(Block counter, Key key);

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  /// Next 32-bit output.
  std::uint32_t next_u32();
  /// Next 64-bit output.
  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();

 private:
  void refill();

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  int used_ = 4;
};

}  // namespace patchcap
