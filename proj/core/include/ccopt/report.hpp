// Copyright 2026 The ccopt Authors
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

#ifndef CCOPT_REPORT_HPP_
#define CCOPT_REPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccopt/study.hpp"

namespace ccopt {

/// 17 significant digits, independent of the global locale.
std::string format_real(double value);

/// Study rows as CSV:
///   trial,failed,u_1..u_n,cost,oracle_v_hat,oracle_violations,oracle_n,failure
void write_study_csv(std::ostream& out, const StudyResult& result);
/// Writes the CSV to `path`; throws std::runtime_error naming the path on I/O
/// failure.
void emit_csv(const StudyResult& result, const std::filesystem::path& path);

/// Reads rows back from write_study_csv output. Throws std::runtime_error on
/// malformed input.
std::vector<TrialRow> parse_study_csv(std::istream& in);

/// SVG scatter of final (u_1, u_2) for each result, one marker style and one
/// legend entry per result. Failed rows are not drawn. Throws ConfigError for
/// an empty list and std::invalid_argument when a result is not 2-D; no file
/// is created in either case.
void write_scatter_svg(std::ostream& out, std::span<const StudyResult> results,
                       const BoxDomain& domain);
void emit_scatter_plot(std::span<const StudyResult> results, const BoxDomain& domain,
                       const std::filesystem::path& path);

}  // namespace ccopt

#endif  // CCOPT_REPORT_HPP_
