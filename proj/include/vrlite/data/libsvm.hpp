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

#ifndef VRLITE_DATA_LIBSVM_HPP
#define VRLITE_DATA_LIBSVM_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <string_view>
#include <utility>

#include "vrlite/core/types.hpp"

namespace vrlite {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LibsvmOptions {
  /// Feature count; defaults to the largest index seen.
  std::optional<std::size_t> dimension;
  /// Defaults to classification when every label is in {-1,+1} or {0,1}.
  std::optional<Task> task;
};

namespace detail {

inline bool parse_real(std::string_view tok, double &out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) return false;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

inline bool parse_index(std::string_view tok, std::size_t &out) {
  if (tok.empty()) return false;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

struct SparseRow {
  double label = 0.0;
  std::vector<std::pair<std::size_t, double>> entries;
  std::size_t line = 0;
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Reads "label idx:val idx:val ..." lines (1-based, strictly ascending
/// indices) into a dense data set. Blank lines and '#' comments are skipped.
/// Classification labels in {0,1} are mapped to {-1,+1}.
inline Dataset parse_libsvm(std::istream &in, const LibsvmOptions &opt = {}) {
  std::vector<detail::SparseRow> rows;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = detail::split_ws(view);
    if (tokens.empty()) continue;

    detail::SparseRow row;
    row.line = line_no;
    if (!detail::parse_real(tokens[0], row.label) || !std::isfinite(row.label))
      throw ParseError(line_no, "malformed label '" + std::string(tokens[0]) + "'");
    std::size_t prev = 0;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const auto tok = tokens[t];
      const auto colon = tok.find(':');
      std::size_t idx = 0;
      double val = 0.0;
      if (colon == std::string_view::npos || !detail::parse_index(tok.substr(0, colon), idx) ||
          !detail::parse_real(tok.substr(colon + 1), val) || !std::isfinite(val))
        throw ParseError(line_no, "malformed feature '" + std::string(tok) + "'");
      if (idx == 0) throw ParseError(line_no, "feature indices are 1-based");
      if (idx <= prev)
        throw ParseError(line_no, "non-ascending feature index " + std::to_string(idx) +
                                      " after " + std::to_string(prev));
      if (opt.dimension && idx > *opt.dimension)
        throw ParseError(line_no, "feature index " + std::to_string(idx) +
                                      " exceeds dimension " + std::to_string(*opt.dimension));
      prev = idx;
      row.entries.emplace_back(idx, val);
    }
    max_index = std::max(max_index, prev);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("libsvm input contains no samples");

  const std::size_t d = opt.dimension.value_or(max_index);
  if (d == 0) throw Error("libsvm input has no features and no dimension was given");

  bool pm_one = true;
  bool zero_one = true;
  for (const auto &r : rows) {
    pm_one = pm_one && (r.label == 1.0 || r.label == -1.0);
    zero_one = zero_one && (r.label == 1.0 || r.label == 0.0);
  }
  const Task task = opt.task.value_or((pm_one || zero_one) ? Task::classification : Task::regression);

  Dataset ds(d, task);
  ds.reserve(rows.size());
  for (const auto &r : rows) {
    LabeledSample s{Vector::Zero(static_cast<Eigen::Index>(d)), r.label};
    if (task == Task::classification) {
      if (r.label == 0.0)
        s.label = -1.0;
      else if (r.label != 1.0 && r.label != -1.0)
        throw ParseError(r.line, "classification label must be in {-1,+1} or {0,1}");
    }
    for (const auto &[idx, val] : r.entries) s.features[static_cast<Eigen::Index>(idx - 1)] = val;
    ds.add(std::move(s));
  }
  return ds;
}

inline Dataset load_libsvm(const std::string &path, const LibsvmOptions &opt = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_libsvm(in, opt);
}

}  // namespace vrlite

#endif  // VRLITE_DATA_LIBSVM_HPP
