// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace mreg {

enum class errc {
  invalid_parameter,
  invalid_weights,
  invalid_spec,
  stale_tape,
  divergence,
  config,
  io,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_weights: return "invalid-weights";
    case errc::invalid_spec: return "invalid-spec";
    case errc::stale_tape: return "stale-tape";
    case errc::divergence: return "divergence";
    case errc::config: return "config";
    case errc::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// splitmix64 finalizer; used to fan a root seed out into independent streams.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stable derived seed for (root, stream, index). Streams are module-level
// constants so reordering call sites does not change any other stream.
inline std::uint64_t substream_seed(std::uint64_t root, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  return mix_seed(root ^ mix_seed(stream ^ mix_seed(index)));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace mreg
