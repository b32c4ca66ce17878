#pragma once

#include <string>

namespace hsg {

/// 15 significant digits ("%.15g"), with negative zero printed as 0.
std::string format_real(double value);

}  // namespace hsg
