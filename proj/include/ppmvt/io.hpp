#ifndef PPMVT_IO_HPP
#define PPMVT_IO_HPP

#include <string>

namespace ppmvt {

/// Double formatted with 17 significant digits (round-trip exact).
std::string format_g17(double v);

/// Double formatted with 9 significant digits (report precision).
std::string format_g9(double v);

/// Write contents to path via a temp file + rename, so readers never
/// observe a partially written file.
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace ppmvt

#endif
