#pragma once

#include <cstdint>
#include <random>

namespace fpp {

// Deterministic random stream keyed by (seed, stream_id). Streams with distinct
// ids are seeded through std::seed_seq, which decorrelates the engine states.
// Single owner; move between threads freely but never share.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on the open interval (0, 1).
  double uniform();
  // Unit-rate exponential.
  double exponential();
  // Standard normal.
  double normal();
  // Raw 64-bit output.
  std::uint64_t bits() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fpp
