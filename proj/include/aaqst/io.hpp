// Copyright 2026 The AAQST Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "aaqst/constraint.hpp"
#include "aaqst/ingest.hpp"
#include "aaqst/optimize.hpp"
#include "aaqst/reconstruct.hpp"

// File formats.  JSON documents for structured inputs (spin system, state,
// sequence), delimited text for tabular data (peak lists, traces, matrix
// dumps, optimizer logs).  Writers stamp tool version, seed, and input
// digests; readers reject malformed input with a field/line diagnostic.

namespace aaqst::io {

struct SystemFile {
  SpinSystem system;
  RegisterLayout layout;
};

// Metadata stamped into every output: version, seed, input digests.
struct Stamp {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string file_digest(const std::filesystem::path& path);

SystemFile parse_system(const std::string& text, const std::string& origin = "system");
SystemFile load_system(const std::filesystem::path& path);

DeviationDensityMatrix parse_state(const std::string& text,
                                   const std::string& origin = "state");
DeviationDensityMatrix load_state(const std::filesystem::path& path);
std::string format_state(const DeviationDensityMatrix& rho, const Stamp& stamp = {});

PulseSequence parse_sequence(const std::string& text,
                             const std::string& origin = "sequence");
PulseSequence load_sequence(const std::filesystem::path& path);
std::string format_sequence(const PulseSequence& seq, const Stamp& stamp = {});

PeakList parse_peaks(const std::string& text, const SpinSystem& sys,
                     const RegisterLayout& layout, const std::string& origin = "peaks");
PeakList load_peaks(const std::filesystem::path& path, const SpinSystem& sys,
                    const RegisterLayout& layout);
std::string format_peaks(const PeakList& peaks, const RegisterLayout& layout,
                         const Stamp& stamp = {});

SpectrumTrace parse_trace(const std::string& text, const std::string& origin = "trace");
SpectrumTrace load_trace(const std::filesystem::path& path);
std::string format_trace(const SpectrumTrace& trace, const Stamp& stamp = {});

std::string format_constraint_matrix(const ConstraintMatrix& m);
std::string format_ga_log(const std::vector<GenerationStat>& log);

// Reconstruction report with the solved state, residual, conditioning, and
// optional fidelity versus a reference state.
std::string format_result(const ReconstructionResult& result,
                          std::optional<double> fidelity_vs_reference,
                          const Stamp& stamp);

}  // namespace aaqst::io
