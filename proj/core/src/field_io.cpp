#include "carleman/field_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "carleman/cutoffs.hpp"
#include "carleman/errors.hpp"

namespace carleman {

static_assert(std::endian::native == std::endian::little, "field files are little-endian");

namespace {

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) throw ConfigError("truncated field file");
  return v;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_field(const GridField& f, const std::string& path, const std::string& note) {
  {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + path);
    put<std::int32_t>(os, f.dim());
    for (const auto& a : f.axes()) {
      put<std::int64_t>(os, a.n);
      put<double>(os, a.period);
      put<double>(os, a.center);
    }
    put<std::int32_t>(os, f.domain() == Domain::Space ? 0 : 1);
    os.write(reinterpret_cast<const char*>(f.samples().data()),
             static_cast<std::streamsize>(f.size() * sizeof(cplx)));
  }
  std::ofstream js(path + ".json");
  js << std::setprecision(17) << "{\n  \"format\": \"carleman-field-v1\",\n  \"d\": " << f.dim() << ",\n  \"axes\": [";
  for (std::size_t i = 0; i < f.axes().size(); ++i) {
    const auto& a = f.axes()[i];
    js << (i ? ", " : "") << "{\"n\": " << a.n << ", \"period\": " << a.period << ", \"center\": " << a.center << "}";
  }
  js << "],\n  \"domain\": \"" << (f.domain() == Domain::Space ? "space" : "frequency") << "\",\n  \"bump\": \""
     << json_escape(bump_fingerprint()) << "\",\n  \"note\": \"" << json_escape(note) << "\"\n}\n";
}

GridField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open " + path);
  const auto d = get<std::int32_t>(is);
  if (d < 1 || d > 8) throw ConfigError("bad dimension in field header");
  std::vector<GridAxis> axes(static_cast<std::size_t>(d));
  for (auto& a : axes) {
    a.n = static_cast<int>(get<std::int64_t>(is));
    a.period = get<double>(is);
    a.center = get<double>(is);
  }
  const auto flag = get<std::int32_t>(is);
  GridField f(axes, flag == 0 ? Domain::Space : Domain::Frequency);
  if (!is.read(reinterpret_cast<char*>(f.samples().data()), static_cast<std::streamsize>(f.size() * sizeof(cplx))))
    throw ConfigError("truncated field payload");
  return f;
}

}  // namespace carleman
