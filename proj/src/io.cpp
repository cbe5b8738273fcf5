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

#include "aaqst/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aaqst::io {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& origin) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(origin + ": missing field '" + std::string(key) + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, where));
  return out;
}

RMatrix real_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a 2-d array");
  const long rows = static_cast<long>(j.size());
  const long cols = static_cast<long>(j.front().size());
  RMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      throw ParseError(where + ": ragged rows at row " + std::to_string(r));
    for (long c = 0; c < cols; ++c)
      m(r, c) = number(row[static_cast<std::size_t>(c)],
                       where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

CMatrix complex_matrix(const json& j, const std::string& where) {
  const RMatrix re = real_matrix(field(j, "re", where), where + ".re");
  RMatrix im = RMatrix::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_matrix(j["im"], where + ".im");
    if (im.rows() != re.rows() || im.cols() != re.cols())
      throw ParseError(where + ": re/im shapes differ");
  }
  CMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (long c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json stamp_to_json(const Stamp& stamp) {
  json meta;
  meta["version"] = kVersion;
  meta["seed"] = stamp.seed;
  if (!stamp.input_digests.empty()) {
    json digests;
    for (const auto& [name, digest] : stamp.input_digests) digests[name] = digest;
    meta["inputs"] = std::move(digests);
  }
  return meta;
}

std::string stamp_header(const Stamp& stamp) {
  std::ostringstream os;
  os << "# version=" << kVersion << " seed=" << stamp.seed << "\n";
  for (const auto& [name, digest] : stamp.input_digests)
    os << "# input " << name << "=" << digest << "\n";
  return os.str();
}

TargetSpec parse_targets(const json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "all") return TargetSpec::all();
    if (s == "input") return TargetSpec::input();
    if (s == "ancilla") return TargetSpec::ancilla();
    throw ParseError(where + ": unknown target '" + s + "'");
  }
  if (j.is_object()) {
    if (j.contains("qubits")) {
      std::vector<int> qs;
      for (const auto& v : j["qubits"]) {
        if (!v.is_number_integer()) throw ParseError(where + ".qubits: expected integers");
        qs.push_back(v.get<int>());
      }
      return TargetSpec::of_qubits(std::move(qs));
    }
    if (j.contains("species")) {
      if (!j["species"].is_string()) throw ParseError(where + ".species: expected a string");
      return TargetSpec::of_species(j["species"].get<std::string>());
    }
  }
  throw ParseError(where + ": expected \"all\"/\"input\"/\"ancilla\" or {qubits|species}");
}

json targets_to_json(const TargetSpec& t) {
  switch (t.mode) {
    case TargetSpec::Mode::All:
      return "all";
    case TargetSpec::Mode::Input:
      return "input";
    case TargetSpec::Mode::Ancilla:
      return "ancilla";
    case TargetSpec::Mode::Qubits:
      return json{{"qubits", t.qubits}};
    case TargetSpec::Mode::Species:
      return json{{"species", t.species}};
  }
  return "all";
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
}

std::string file_digest(const std::filesystem::path& path) {
  return hex_digest(read_text_file(path));
}

SystemFile parse_system(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  SystemFile out;
  const auto shifts = number_array(field(j, "shift_hz", origin), origin + ".shift_hz");
  out.system.shift_hz = shifts;
  out.system.coupling_hz =
      real_matrix(field(j, "coupling_hz", origin), origin + ".coupling_hz");
  if (j.contains("labels")) {
    for (const auto& v : j["labels"]) {
      if (!v.is_string()) throw ParseError(origin + ".labels: expected strings");
      out.system.labels.push_back(v.get<std::string>());
    }
  }
  if (j.contains("species")) {
    for (const auto& v : j["species"]) {
      if (!v.is_string()) throw ParseError(origin + ".species: expected strings");
      out.system.species.push_back(v.get<std::string>());
    }
  }
  const auto& layout = field(j, "layout", origin);
  const int n_input = static_cast<int>(number(field(layout, "n_input", origin + ".layout"),
                                              origin + ".layout.n_input"));
  const int n_ancilla = static_cast<int>(
      number(field(layout, "n_ancilla", origin + ".layout"), origin + ".layout.n_ancilla"));
  try {
    out.layout = RegisterLayout::make(n_input, n_ancilla);
    out.system.validate();
  } catch (const ValidationError& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (out.system.size() != out.layout.total_qubits())
    throw ParseError(origin + ": " + std::to_string(out.system.size()) +
                     " spins but layout declares " +
                     std::to_string(out.layout.total_qubits()) + " qubits");
  return out;
}

SystemFile load_system(const std::filesystem::path& path) {
  return parse_system(read_text_file(path), path.string());
}

DeviationDensityMatrix parse_state(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  try {
    if (j.contains("matrix"))
      return DeviationDensityMatrix::from_matrix(
          complex_matrix(j["matrix"], origin + ".matrix"));
    if (j.contains("pauli_terms")) {
      std::vector<PauliTerm> terms;
      for (const auto& t : j["pauli_terms"]) {
        PauliTerm term;
        term.coeff = number(field(t, "coeff", origin + ".pauli_terms"),
                            origin + ".pauli_terms.coeff");
        const auto& ops = field(t, "ops", origin + ".pauli_terms");
        if (!ops.is_string()) throw ParseError(origin + ".pauli_terms.ops: expected a string");
        term.ops = ops.get<std::string>();
        terms.push_back(std::move(term));
      }
      return from_pauli_terms(terms);
    }
  } catch (const ValidationError& e) {
    throw ParseError(origin + ": " + e.what());
  }
  throw ParseError(origin + ": needs either 'matrix' or 'pauli_terms'");
}

DeviationDensityMatrix load_state(const std::filesystem::path& path) {
  return parse_state(read_text_file(path), path.string());
}

std::string format_state(const DeviationDensityMatrix& rho, const Stamp& stamp) {
  json j;
  j["meta"] = stamp_to_json(stamp);
  j["dim"] = rho.dim();
  j["matrix"] = matrix_to_json(rho.entries);
  j["frobenius_norm"] = rho.entries.norm();

  // Pauli decomposition, emitted alongside the matrix for readability.
  const long dim = rho.dim();
  int qubits = 0;
  while ((1L << qubits) < dim) ++qubits;
  if ((1L << qubits) == dim) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    const CMatrix paulis[4] = {
        (CMatrix(2, 2) << 1, 0, 0, 1).finished(),
        (CMatrix(2, 2) << 0, 1, 1, 0).finished(),
        (CMatrix(2, 2) << 0, cxd(0, -1), cxd(0, 1), 0).finished(),
        (CMatrix(2, 2) << 1, 0, 0, -1).finished()};
    json terms = json::array();
    const long strings = 1L << (2 * qubits);
    for (long code = 1; code < strings; ++code) {
      std::string ops(static_cast<std::size_t>(qubits), 'I');
      CMatrix p = CMatrix::Ones(1, 1);
      long rem = code;
      for (int q = qubits - 1; q >= 0; --q) {
        const int letter = static_cast<int>(rem & 3);
        rem >>= 2;
        ops[static_cast<std::size_t>(q)] = letters[letter];
      }
      for (int q = 0; q < qubits; ++q) {
        CMatrix next(p.rows() * 2, p.cols() * 2);
        const CMatrix& f = paulis[std::string("IXYZ").find(ops[static_cast<std::size_t>(q)])];
        for (long r = 0; r < p.rows(); ++r)
          for (long c = 0; c < p.cols(); ++c)
            next.block(r * 2, c * 2, 2, 2) = p(r, c) * f;
        p = std::move(next);
      }
      const double coeff = (p * rho.entries).trace().real() / static_cast<double>(dim);
      if (std::abs(coeff) > 1e-12) terms.push_back(json{{"coeff", coeff}, {"ops", ops}});
    }
    j["pauli_terms"] = std::move(terms);
  }
  return j.dump(2) + "\n";
}

PulseSequence parse_sequence(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  const auto& elements = field(j, "elements", origin);
  if (!elements.is_array()) throw ParseError(origin + ".elements: expected an array");
  PulseSequence seq;
  std::size_t i = 0;
  for (const auto& e : elements) {
    const std::string where = origin + ".elements[" + std::to_string(i++) + "]";
    if (e.contains("delay_s")) {
      seq.elements.push_back(Delay{number(e["delay_s"], where + ".delay_s")});
    } else if (e.contains("rot")) {
      const auto& r = e["rot"];
      Rotation rot;
      rot.angle_rad = number(field(r, "angle_deg", where), where + ".angle_deg") * kPi / 180.0;
      rot.phase_rad = number(field(r, "phase_deg", where), where + ".phase_deg") * kPi / 180.0;
      if (r.contains("targets")) rot.targets = parse_targets(r["targets"], where + ".targets");
      seq.elements.push_back(std::move(rot));
    } else if (e.contains("controlled")) {
      const auto& c = e["controlled"];
      Controlled ctrl;
      const auto& blocks = field(c, "input_unitaries", where);
      if (!blocks.is_array()) throw ParseError(where + ".input_unitaries: expected an array");
      for (const auto& b : blocks)
        ctrl.input_unitaries.push_back(complex_matrix(b, where + ".input_unitaries"));
      ctrl.ancilla_unitary =
          complex_matrix(field(c, "ancilla_unitary", where), where + ".ancilla_unitary");
      seq.elements.push_back(std::move(ctrl));
    } else {
      throw ParseError(where + ": expected one of delay_s / rot / controlled");
    }
  }
  return seq;
}

PulseSequence load_sequence(const std::filesystem::path& path) {
  return parse_sequence(read_text_file(path), path.string());
}

std::string format_sequence(const PulseSequence& seq, const Stamp& stamp) {
  json elements = json::array();
  for (const auto& e : seq.elements) {
    if (const auto* delay = std::get_if<Delay>(&e)) {
      elements.push_back(json{{"delay_s", delay->tau_s}});
    } else if (const auto* rot = std::get_if<Rotation>(&e)) {
      elements.push_back(json{{"rot",
                               {{"angle_deg", rot->angle_rad * 180.0 / kPi},
                                {"phase_deg", rot->phase_rad * 180.0 / kPi},
                                {"targets", targets_to_json(rot->targets)}}}});
    } else {
      const auto& ctrl = std::get<Controlled>(e);
      json blocks = json::array();
      for (const auto& u : ctrl.input_unitaries) blocks.push_back(matrix_to_json(u));
      elements.push_back(json{{"controlled",
                               {{"input_unitaries", std::move(blocks)},
                                {"ancilla_unitary", matrix_to_json(ctrl.ancilla_unitary)}}}});
    }
  }
  json j;
  j["meta"] = stamp_to_json(stamp);
  j["elements"] = std::move(elements);
  return j.dump(2) + "\n";
}

PeakList parse_peaks(const std::string& text, const SpinSystem& sys,
                     const RegisterLayout& layout, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::vector<Peak> rows;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    for (auto& ch : line)
      if (ch == ',' || ch == '\t') ch = ' ';
    std::istringstream ls(line);
    Peak p;
    double re = 0.0, im = 0.0;
    if (!(ls >> p.qubit >> p.nu >> p.frequency_hz >> re >> im))
      throw ParseError(origin + ":" + std::to_string(line_no) +
                       ": expected 'qubit, nu, frequency_hz, re, im'");
    p.intensity = cxd(re, im);
    rows.push_back(p);
  }

  // Reorder to canonical (qubit, nu) and verify coverage.
  const auto lines = transitions(sys, layout);
  PeakList peaks;
  peaks.entries.reserve(lines.size());
  std::ostringstream missing;
  int missing_count = 0;
  for (const auto& t : lines) {
    bool found = false;
    for (const auto& p : rows) {
      if (p.qubit == t.qubit && p.nu == t.nu) {
        peaks.entries.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) {
      if (missing_count < 8) missing << " (j=" << t.qubit << ", nu=" << t.nu << ")";
      ++missing_count;
    }
  }
  if (missing_count > 0)
    throw ParseError(origin + ": missing " + std::to_string(missing_count) +
                     " of " + std::to_string(lines.size()) + " lines:" + missing.str());
  if (rows.size() != lines.size())
    throw ParseError(origin + ": " + std::to_string(rows.size()) + " rows but " +
                     std::to_string(lines.size()) + " transitions (duplicates?)");
  return peaks;
}

PeakList load_peaks(const std::filesystem::path& path, const SpinSystem& sys,
                    const RegisterLayout& layout) {
  return parse_peaks(read_text_file(path), sys, layout, path.string());
}

std::string format_peaks(const PeakList& peaks, const RegisterLayout& layout,
                         const Stamp& stamp) {
  std::ostringstream os;
  os << "# aaqst peaks v1\n" << stamp_header(stamp);
  os << "# n_input=" << layout.input_qubits() << " n_ancilla=" << layout.ancilla_qubits()
     << "\n";
  os << "# columns: qubit, nu, frequency_hz, re, im\n";
  for (const auto& p : peaks.entries) {
    os << p.qubit << ", " << p.nu << ", " << fmt_double(p.frequency_hz) << ", "
       << fmt_double(p.intensity.real()) << ", " << fmt_double(p.intensity.imag()) << "\n";
  }
  return os.str();
}

SpectrumTrace parse_trace(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  SpectrumTrace trace;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      // "# key=value" metadata entries
      std::istringstream ls(line.substr(1));
      std::string token;
      while (ls >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
          if (key == "linewidth_hz") trace.linewidth_hz = std::stod(value);
          if (key == "reference_scale") trace.reference_scale = std::stod(value);
        } catch (const std::exception&) {
          throw ParseError(origin + ":" + std::to_string(line_no) + ": bad value for " + key);
        }
      }
      continue;
    }
    for (auto& ch : line)
      if (ch == ',' || ch == '\t') ch = ' ';
    std::istringstream ls(line);
    double f = 0.0, re = 0.0, im = 0.0;
    if (!(ls >> f >> re >> im))
      throw ParseError(origin + ":" + std::to_string(line_no) +
                       ": expected 'frequency_hz, re, im'");
    trace.samples.push_back({f, cxd(re, im)});
  }
  try {
    trace.validate();
  } catch (const ValidationError& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return trace;
}

SpectrumTrace load_trace(const std::filesystem::path& path) {
  return parse_trace(read_text_file(path), path.string());
}

std::string format_trace(const SpectrumTrace& trace, const Stamp& stamp) {
  std::ostringstream os;
  os << "# aaqst trace v1\n" << stamp_header(stamp);
  os << "# linewidth_hz=" << fmt_double(trace.linewidth_hz);
  if (trace.reference_scale) os << " reference_scale=" << fmt_double(*trace.reference_scale);
  os << "\n# columns: frequency_hz, re, im\n";
  for (const auto& s : trace.samples)
    os << fmt_double(s.frequency_hz) << ", " << fmt_double(s.value.real()) << ", "
       << fmt_double(s.value.imag()) << "\n";
  return os.str();
}

std::string format_constraint_matrix(const ConstraintMatrix& m) {
  std::ostringstream os;
  os << "row";
  for (const auto& col : m.col_map) os << "\t" << col.name();
  os << "\n";
  for (long r = 0; r < m.rows(); ++r) {
    os << m.row_map[static_cast<std::size_t>(r)].name();
    for (long c = 0; c < m.cols(); ++c) os << "\t" << fmt_double(m.values(r, c));
    os << "\n";
  }
  return os.str();
}

std::string format_ga_log(const std::vector<GenerationStat>& log) {
  std::ostringstream os;
  os << "# generation\tbest_condition\tmean_condition\n";
  for (const auto& stat : log)
    os << stat.generation << "\t" << fmt_double(stat.best_condition) << "\t"
       << fmt_double(stat.mean_condition) << "\n";
  return os.str();
}

std::string format_result(const ReconstructionResult& result,
                          std::optional<double> fidelity_vs_reference,
                          const Stamp& stamp) {
  json j;
  j["meta"] = stamp_to_json(stamp);
  j["state"] = parse_json(format_state(result.rho, stamp), "state");
  json report;
  report["residual_norm"] = result.residual_norm;
  report["condition"] = result.condition.condition;
  report["rank"] = result.condition.rank;
  report["rank_tolerance"] = result.condition.tolerance;
  json sv = json::array();
  for (long i = 0; i < result.condition.singular_values.size(); ++i)
    sv.push_back(result.condition.singular_values(i));
  report["singular_values"] = std::move(sv);
  if (fidelity_vs_reference) report["fidelity_vs_reference"] = *fidelity_vs_reference;
  j["report"] = std::move(report);
  return j.dump(2) + "\n";
}

}  // namespace aaqst::io
