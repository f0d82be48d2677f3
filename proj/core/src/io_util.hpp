#pragma once

// Internal helpers shared by the writers: 17-significant-digit float
// formatting and whole-file atomic writes (temp file + rename).

#include <string>

namespace h2r::detail {

std::string format_g17(double v);
void atomic_write(const std::string& path, const std::string& content);

}  // namespace h2r::detail
