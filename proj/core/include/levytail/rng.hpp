#pragma once

#include <array>
#include <cstdint>

namespace levytail {

// Philox4x32-10 block function.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k) {
  constexpr std::uint64_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = kM0 * c[0];
    const std::uint64_t p1 = kM1 * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

struct SeededStream {
  std::uint64_t master_seed = 0;
  std::uint32_t stream_id = 0;
};

// Counter-based generator for one Monte Carlo sample: the output is a pure
// function of (master_seed, stream_id, sample_index, draw number).
class CounterRng {
 public:
  CounterRng(const SeededStream& stream, std::uint64_t sample_index);

  std::uint64_t next_u64() {
    if (pos_ >= 4) {
      buf_ = philox4x32(ctr_, key_);
      ++ctr_[3];
      pos_ = 0;
    }
    const std::uint64_t hi = buf_[pos_], lo = buf_[pos_ + 1];
    pos_ += 2;
    return (hi << 32) | lo;
  }
  // Uniform on (0,1), never 0 or 1.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

}  // namespace levytail
