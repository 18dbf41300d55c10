#pragma once

#include <string>

namespace machfvm {

/// Scientific notation with 12 significant digits; locale independent, so
/// identical inputs always serialize to identical bytes.
std::string fmt_sci(double v);

}  // namespace machfvm
