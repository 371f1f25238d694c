#include "adm/errors.hpp"

#include <sstream>

namespace adm {

namespace {

std::string cap_message(const std::string& what, double required, double cap) {
  std::ostringstream os;
  os.precision(15);
  os << what << ": required size " << required << " exceeds cap " << cap;
  return os.str();
}

}  // namespace

CapExceeded::CapExceeded(const std::string& what, double required, double cap)
    : Error(cap_message(what, required, cap)), required_(required), cap_(cap) {}

}  // namespace adm
