#pragma once
#include <stdexcept>
#include <string>

namespace carleman {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// A symbol was evaluated on its singular set.
struct SingularFrequency : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

// Grid too coarse for the requested feature.
struct ResolutionError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace carleman
