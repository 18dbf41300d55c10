#include "machfvm/csv.hpp"

#include <cstdio>

namespace machfvm {

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

}  // namespace machfvm
