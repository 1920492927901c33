// Copyright 2026 The gbslxe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GBSLXE_IO_HPP
#define GBSLXE_IO_HPP

#include <string>
#include <vector>

#include "gbslxe/distributions.hpp"
#include "gbslxe/idealscore.hpp"
#include "gbslxe/lxe.hpp"
#include "gbslxe/models.hpp"

namespace gbslxe {

inline constexpr const char *kSampleFormat = "gbslxe.samples";
inline constexpr const char *kReportFormat = "gbslxe.score_report";
inline constexpr const char *kCacheFormat = "gbslxe.coefficients";
inline constexpr int kFormatVersion = 1;

/// Whole-file read; throws ErrorCode::Io naming the path.
std::string read_text_file(const std::string &path);
/// Writes to "<path>.tmp" and renames over path, so readers never observe a
/// partial file.
void write_text_file_atomic(const std::string &path, const std::string &content);

/// {"m": M, "entries": [[re, im], ...]} in row-major order. Doubles are written
/// with 17 significant digits.
std::string unitary_to_json(const UnitaryMatrix &u);
UnitaryMatrix unitary_from_json(const std::string &text);
/// Same layout without the unitarity check, for feeding nearest_unitary.
CMatrix matrix_from_json(const std::string &text);

std::string samples_to_json(const SampleSet &set);
SampleSet samples_from_json(const std::string &text);

std::string reports_to_json(const std::vector<ScoreReport> &reports);

std::string coefficients_to_json(const std::vector<CoefficientTable> &tables);
std::vector<CoefficientTable> coefficients_from_json(const std::string &text);

}  // namespace gbslxe

#endif
