/* Copyright 2026 The vrlite Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef VRLITE_BENCH_CSV_HPP
#define VRLITE_BENCH_CSV_HPP

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "vrlite/core/metrics.hpp"

namespace vrlite::bench {

inline constexpr std::string_view kCsvHeader =
    "algo,mode,workers,epoch,wall_ms,objective,rel_grad_norm,eta,seed";

namespace detail {

inline std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string format_csv(const std::vector<MetricsRow> &rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto &r : rows) {
    out += r.algo + ',' + r.mode + ',' + std::to_string(r.workers) + ',' + std::to_string(r.epoch) +
           ',' + detail::real(r.wall_ms) + ',' + detail::real(r.objective) + ',' +
           detail::real(r.rel_grad_norm) + ',' + detail::real(r.eta) + ',' + std::to_string(r.seed) +
           '\n';
  }
  return out;
}

/// Writes to a sibling temporary file, then renames it over `path`.
inline void write_csv(const std::vector<MetricsRow> &rows, const std::filesystem::path &path) {
  const std::string body = format_csv(rows);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move results into " + path.string());
  }
}

/// Parses the output of format_csv.
inline std::vector<MetricsRow> read_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error("missing or unexpected CSV header");
  std::vector<MetricsRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      f.push_back(rest.substr(0, pos));
    f.push_back(rest);
    if (f.size() != 9) throw Error("CSV line " + std::to_string(line_no) + ": expected 9 fields");
    auto num = [&](std::string_view s, auto &v) {
      const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
      if (r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw Error("CSV line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
    };
    MetricsRow r;
    r.algo = f[0];
    r.mode = f[1];
    num(f[2], r.workers);
    num(f[3], r.epoch);
    num(f[4], r.wall_ms);
    num(f[5], r.objective);
    num(f[6], r.rel_grad_norm);
    num(f[7], r.eta);
    num(f[8], r.seed);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace vrlite::bench

#endif  // VRLITE_BENCH_CSV_HPP
