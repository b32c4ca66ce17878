#include "hsg/format.hpp"

#include <cmath>
#include <cstdio>

namespace hsg {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace hsg
