// Copyright 2026 The catdress Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "catdress/spin.hpp"

namespace catdress::io {

/// "theta,phi,Q" rows.
std::string husimi_csv(const spin::HusimiGrid& grid);

/// Binary grid: uint32 little-endian header length, a JSON header
/// {"n_theta", "n_phi", "N"}, then n_theta * n_phi little-endian float64
/// values in row-major order (theta outer).
void write_husimi_binary(const spin::HusimiGrid& grid, const std::filesystem::path& path);
spin::HusimiGrid read_husimi_binary(const std::filesystem::path& path);

/// Heatmap over (phi, theta) as a standalone SVG document.
std::string husimi_svg(const spin::HusimiGrid& grid, int cell_px = 3);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Polyline plot; log axes take log10 of positive values.
std::string line_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label,
                     bool log_x = false, bool log_y = false);

/// Writes `content`, creating parent directories. Throws std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& content);

/// "# generated <UTC time>\n", or "" when suppressed.
std::string stamp_line(bool enabled);

}  // namespace catdress::io
