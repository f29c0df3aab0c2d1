// Copyright 2026 The cqed-dit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <system_error>

#include "cqed/errors.hpp"
#include "cqed/spectrum.hpp"

namespace cqed::io {

/// Shortest-independent fixed format: 17 significant digits, '.' decimal
/// point, no locale.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, r.ptr};
}

inline std::string format_cell(const std::optional<double>& v, const std::string& missing) {
  return v ? format_double(*v) : missing;
}

/// Writes `content` to `path` through a temporary file and a rename, so
/// readers never observe a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    out << content;
    if (!out.flush()) {
      throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

/// Spectrum CSV: header `omega_offset_gamma,value`, one row per grid point.
inline std::string spectrum_csv(const Spectrum& s) {
  std::string out = "omega_offset_gamma,value\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    out += format_double(s.grid[i]);
    out += ',';
    out += format_double(s.values[i]);
    out += '\n';
  }
  return out;
}

}  // namespace cqed::io
