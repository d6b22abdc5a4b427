#pragma once

#include <string>

namespace dlab {

/// Shortest %.17g rendering: parsing the text back recovers the exact double
/// ("1" for 1.0, "0" for 0.0, 17 significant digits otherwise needed).
std::string format_float(double v);

}  // namespace dlab
