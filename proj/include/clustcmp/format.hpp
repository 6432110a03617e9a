#pragma once

#include <string>

namespace clustcmp {

// Locale-independent number rendering with 12 significant digits ('.'
// decimal separator, shortest general form). All CSV/JSON values go through
// this so reruns are byte-identical.
std::string format_value(double value);

}  // namespace clustcmp
