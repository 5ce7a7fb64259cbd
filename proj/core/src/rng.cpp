#include "carleman/rng.hpp"

namespace carleman {

namespace {
std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

CounterRng::result_type CounterRng::operator()() {
  const std::uint64_t key = splitmix(seed_ ^ splitmix(stream_ + 0x632be59bd9b4e019ULL));
  return splitmix(key ^ splitmix(counter_++));
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

}  // namespace carleman
