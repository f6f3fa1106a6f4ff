#pragma once

// Philox4x64-10 counter-based generator, bit-compatible with numpy's
// `Philox(key=[seed, stream])`: the 256-bit counter starts at zero and is
// incremented before each block, and the four 64-bit outputs of a block are
// returned in order.

#include <array>
#include <cstdint>
#include <limits>

namespace cardguess {

class Philox4x64 {
 public:
  using result_type = std::uint64_t;
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  // Substream `stream` of `seed`: key = [seed, stream].
  explicit Philox4x64(std::uint64_t seed = 0, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Unbiased uniform integer in [0, n), n >= 1 (Lemire's multiply-and-reject).
  std::uint64_t uniform_below(std::uint64_t n);
  bool coin() { return ((*this)() >> 63) != 0; }

  // The raw 10-round bijection.
  static Counter block(Counter counter, Key key);

 private:
  Counter counter_{};
  Key key_{};
  Counter buffer_{};
  int used_ = 4;
};

}  // namespace cardguess
