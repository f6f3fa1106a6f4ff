#include "cardguess/rng.hpp"

#include "cardguess/errors.hpp"

namespace cardguess {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const u128 product = static_cast<u128>(a) * b;
  hi = static_cast<std::uint64_t>(product >> 64);
  lo = static_cast<std::uint64_t>(product);
}

}  // namespace

Philox4x64::Philox4x64(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

Philox4x64::Counter Philox4x64::block(Counter x, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMultiplier0, x[0], hi0, lo0);
    mulhilo(kMultiplier1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
  }
  return x;
}

Philox4x64::result_type Philox4x64::operator()() {
  if (used_ == 4) {
    for (auto& word : counter_)
      if (++word != 0) break;
    buffer_ = block(counter_, key_);
    used_ = 0;
  }
  return buffer_[used_++];
}

std::uint64_t Philox4x64::uniform_below(std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_below needs n >= 1");
  u128 m = static_cast<u128>((*this)()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<u128>((*this)()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace cardguess
