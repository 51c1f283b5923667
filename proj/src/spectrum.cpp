#include "orbitwidth/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orbitwidth {

Spectrum::Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParseError("spectrum must contain at least one value");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<Rational> Spectrum::distinct_values() const {
  std::vector<Rational> out;
  for (const Rational& v : values_) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

Spectrum parse_spectrum(std::string_view text) {
  std::vector<Rational> values;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view token =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    values.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Spectrum(std::move(values));
}

std::string render(const Spectrum& s) {
  std::ostringstream os;
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) os << ',';
    os << s[i];
  }
  return os.str();
}

FlagType flag_type(const Spectrum& s) {
  FlagType f;
  int run = 0;
  for (int i = 0; i < s.size(); ++i) {
    ++run;
    if (i + 1 == s.size() || s[i + 1] != s[i]) {
      f.multiplicities.push_back(run);
      f.cumulative.push_back(f.cumulative.empty() ? run : f.cumulative.back() + run);
      run = 0;
    }
  }
  return f;
}

OrbitDimensions orbit_dimensions(const FlagType& f) {
  OrbitDimensions d;
  for (size_t i = 0; i < f.multiplicities.size(); ++i)
    for (size_t j = i + 1; j < f.multiplicities.size(); ++j)
      d.complex_dim += static_cast<long>(f.multiplicities[i]) * f.multiplicities[j];
  d.real_dim = 2 * d.complex_dim;
  return d;
}

}  // namespace orbitwidth
