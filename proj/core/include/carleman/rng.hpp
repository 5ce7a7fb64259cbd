#pragma once
#include <cstdint>
#include <limits>

namespace carleman {

// Counter-based generator: output i of stream s depends only on (seed, s, i),
// so independent experiments can draw reproducibly without shared state.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint64_t counter() const { return counter_; }
  double uniform();  // in [0,1)

 private:
  std::uint64_t seed_, stream_, counter_ = 0;
};

}  // namespace carleman
