#include "iclcbf/rng.hpp"

namespace iclcbf {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint64_t mix_seed(uint64_t a, uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

uint64_t named_seed(uint64_t master, std::string_view stream) {
  return mix_seed(master, fnv1a(stream));
}

uint64_t indexed_seed(uint64_t stream_seed, uint64_t index) {
  return mix_seed(stream_seed, index + 1);
}

}  // namespace iclcbf
