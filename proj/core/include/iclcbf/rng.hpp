#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace iclcbf {

// Every random decision in the pipeline derives from one master seed through
// named streams (e.g. "demo", "train/xsc/3") plus an index. Streams are
// independent of thread scheduling, so parallel rollouts stay reproducible.
uint64_t mix_seed(uint64_t a, uint64_t b);
uint64_t named_seed(uint64_t master, std::string_view stream);
uint64_t indexed_seed(uint64_t stream_seed, uint64_t index);

// mt19937_64 with explicit output mappings. The standard library's
// distribution objects are implementation-defined, so we avoid them.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t raw() { return engine_(); }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., n-1}.
  int uniform_int(int n) { return static_cast<int>(raw() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace iclcbf
