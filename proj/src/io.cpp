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

#include "catdress/io.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "catdress/errors.hpp"

namespace catdress::io {

namespace {

static_assert(std::endian::native == std::endian::little, "binary Husimi format assumes a little-endian host");

std::string fmt(double x, int precision = 10) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

// Blue -> yellow ramp.
std::string colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(68 + t * (253 - 68)));
  const int g = static_cast<int>(std::lround(1 + t * (231 - 1)));
  const int b = static_cast<int>(std::lround(84 + t * (37 - 84)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string husimi_csv(const spin::HusimiGrid& grid) {
  std::ostringstream out;
  out.precision(12);
  out << "theta,phi,Q\n";
  for (int i = 0; i < grid.n_theta; ++i)
    for (int j = 0; j < grid.n_phi; ++j) out << grid.theta(i) << ',' << grid.phi(j) << ',' << grid.at(i, j) << '\n';
  return out.str();
}

void write_husimi_binary(const spin::HusimiGrid& grid, const std::filesystem::path& path) {
  const std::string header =
      nlohmann::json{{"n_theta", grid.n_theta}, {"n_phi", grid.n_phi}, {"N", grid.n_atoms}}.dump();
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const auto len = static_cast<std::uint32_t>(header.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(grid.values.data()),
            static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

spin::HusimiGrid read_husimi_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint32_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  if (!in || len > (1u << 20)) throw std::runtime_error("bad Husimi header in " + path.string());
  std::string header(len, '\0');
  in.read(header.data(), len);
  const auto meta = nlohmann::json::parse(header);
  spin::HusimiGrid grid{meta.at("N").get<int>(), meta.at("n_theta").get<int>(), meta.at("n_phi").get<int>(), {}};
  require(grid.n_theta >= 2 && grid.n_phi >= 2, "Husimi file has an invalid grid shape");
  grid.values.resize(static_cast<std::size_t>(grid.n_theta) * grid.n_phi);
  in.read(reinterpret_cast<char*>(grid.values.data()), static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("truncated Husimi data in " + path.string());
  return grid;
}

std::string husimi_svg(const spin::HusimiGrid& grid, int cell_px) {
  const double qmax = *std::max_element(grid.values.begin(), grid.values.end());
  const int w = grid.n_phi * cell_px, h = grid.n_theta * cell_px;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < grid.n_theta; ++i)
    for (int j = 0; j < grid.n_phi; ++j)
      out << "<rect x=\"" << j * cell_px << "\" y=\"" << i * cell_px << "\" width=\"" << cell_px << "\" height=\""
          << cell_px << "\" fill=\"" << colour(qmax > 0 ? grid.at(i, j) / qmax : 0.0) << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string line_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label,
                     bool log_x, bool log_y) {
  const double W = 640, H = 420, L = 70, R = 20, T = 20, B = 50;
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((log_x && s.x[i] <= 0) || (log_y && s.y[i] <= 0)) continue;
      x0 = std::min(x0, tx(s.x[i]));
      x1 = std::max(x1, tx(s.x[i]));
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto px = [&](double v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
      << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
  out << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\">" << fmt(x0, 4) << "</text>\n";
  out << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\">" << fmt(x1, 4) << "</text>\n";
  out << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\">" << fmt(y0, 4) << "</text>\n";
  out << "<text x=\"" << L - 4 << "\" y=\"" << T + 10 << "\" text-anchor=\"end\">" << fmt(y1, 4) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out << "<polyline fill=\"none\" stroke=\"" << palette[k % 6] << "\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((log_x && s.x[i] <= 0) || (log_y && s.y[i] <= 0)) continue;
      out << fmt(px(s.x[i]), 6) << ',' << fmt(py(s.y[i]), 6) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << W - R - 6 << "\" y=\"" << T + 16 + 16 * k << "\" text-anchor=\"end\" fill=\"" << palette[k % 6]
        << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string stamp_line(bool enabled) {
  if (!enabled) return {};
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[64];
  std::strftime(buf, sizeof buf, "# generated %Y-%m-%dT%H:%M:%SZ\n", &utc);
  return buf;
}

}  // namespace catdress::io
