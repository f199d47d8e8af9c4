#include "levytail/rng.hpp"

namespace levytail {

CounterRng::CounterRng(const SeededStream& stream, std::uint64_t sample_index)
    : key_{static_cast<std::uint32_t>(stream.master_seed), static_cast<std::uint32_t>(stream.master_seed >> 32)},
      ctr_{static_cast<std::uint32_t>(sample_index), static_cast<std::uint32_t>(sample_index >> 32), stream.stream_id,
           0u} {}

}  // namespace levytail
