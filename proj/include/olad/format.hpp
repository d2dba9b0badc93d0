#ifndef OLAD_FORMAT_HPP
#define OLAD_FORMAT_HPP

#include <string>

namespace olad {

// Locale-independent numeric formatting for CSV cells and event logs.
// CSV cells always carry exactly three fractional digits with a '.'
// separator so regenerated files are byte-identical across platforms.

// "4.412", "0.000", "100.000"
std::string to_fixed3(double value);

// Trimmed form for prose and column suffixes: "0.4", "40", "0.125".
std::string to_compact(double value);

} // namespace olad

#endif
