#include "glassnet/common.hpp"

#include <fmt/format.h>

namespace glassnet {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{}", value);
}

std::string format_vector(const Vector& v, const char* separator) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += separator;
    out += format_number(v[i]);
  }
  return out;
}

std::string format_fixed(double value, int digits) {
  std::string out = fmt::format("{:.{}f}", value, digits);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace glassnet
