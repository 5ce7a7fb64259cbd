#pragma once
#include <string>

#include "carleman/grid.hpp"

namespace carleman {

// Little-endian binary: int32 d; per axis int64 n, f64 period, f64 center; int32 domain;
// then interleaved re/im f64 samples. A JSON sidecar "<path>.json" describes the header.
void write_field(const GridField& f, const std::string& path, const std::string& note = "");
GridField read_field(const std::string& path);

}  // namespace carleman
