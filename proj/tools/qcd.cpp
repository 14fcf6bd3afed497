// Copyright 2026 The qcd authors
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

// qcd: detect quantum channels outside the completely co-positive and
// bi-entangling classes from JSON channel specs.
//
// Exit codes: 0 analysis completed (verdicts live in the report),
// 2 invalid spec, 3 I/O failure, 4 class/spec mismatch, 5 non-qubit
// dimensions in decompose.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcd/be.hpp"
#include "qcd/ccop.hpp"
#include "qcd/channels.hpp"
#include "qcd/measure.hpp"
#include "qcd/report.hpp"
#include "qcd/spec_io.hpp"
#include "qcd/version.hpp"

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonQubitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitInvalidSpec = 2;
constexpr int kExitIo = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitNonQubit = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("error while writing " + path);
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw qcd::SpecError(std::string("JSON parse error: ") + e.what());
  }
}

qcd::ParsedSpec load_spec(const std::string& path) {
  return qcd::parse_channel_spec(parse_json_text(read_file(path)));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QCD_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw qcd::SpecError("QCD_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

struct DetectOptions {
  std::string klass;
  std::string spec_path;
  double tol = 1e-9;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  double k_sigma = 3.0;
  std::string report_path;
};

void add_measurement(ordered_json& report, const qcd::ComplexMatrix& witness,
                     const qcd::ComplexMatrix& state, std::uint64_t shots,
                     std::uint64_t seed, double k_sigma) {
  const std::size_t dim = witness.rows();
  if (!is_power_of_two(dim)) {
    report["measurement_skipped"] =
        "witness has non-qubit dimensions; only the exact expectation is "
        "reported";
    return;
  }
  const qcd::PauliDecomposition decomp =
      qcd::pauli_decompose(witness, log2_exact(dim));
  const qcd::ShotEstimate est =
      qcd::simulate_shots(decomp, state, shots, seed);
  const qcd::Verdict verdict = qcd::detection_decision(est, k_sigma);
  report["measurement"] = qcd::report::measurement_fragment(decomp, est, verdict);
}

int run_detect(const DetectOptions& opt) {
  const qcd::ParsedSpec spec = load_spec(opt.spec_path);
  const std::uint64_t seed = resolve_seed(opt.seed);

  ordered_json report;
  report["tool"] = "qcd";
  report["version"] = qcd::kVersion;
  const std::string canonical = qcd::report::dump(spec.canonical);
  report["input"] = {{"spec", spec.canonical},
                     {"digest", "fnv1a:" + qcd::report::fnv1a_hex(canonical)}};
  report["seed"] = seed;
  report["tolerances"] = {{"tol", opt.tol}, {"k_sigma", opt.k_sigma}};

  if (opt.klass == "ccop") {
    const qcd::CcopDetection det = qcd::analyze_ccop(spec.channel, opt.tol);
    report["detection"] = qcd::report::ccop_fragment(det);
    if (opt.shots) {
      if (det.witness) {
        const qcd::ChoiState c = qcd::choi(spec.channel);
        add_measurement(report, det.witness->matrix, c.matrix, *opt.shots,
                        seed, opt.k_sigma);
      } else {
        report["measurement_skipped"] =
            "Choi is PPT: no witness available to sample";
      }
    }
  } else {  // be
    if (!spec.two_qudit_gate)
      throw MismatchError(
          "bi-entangling detection needs a unitary two-qudit gate spec");
    const qcd::BeAnalysis analysis =
        qcd::analyze_be(*spec.two_qudit_gate, opt.tol);
    report["detection"] = qcd::report::be_fragment(analysis);
    if (opt.shots) {
      const qcd::PureState u_vec =
          qcd::choi_vector_of_gate(*spec.two_qudit_gate);
      add_measurement(report, analysis.witness_be, u_vec.projector(),
                      *opt.shots, seed, opt.k_sigma);
    }
  }

  write_output(opt.report_path, qcd::report::dump(report));
  return 0;
}

struct ChoiOptions {
  std::string spec_path;
  std::string out_path;
};

int run_choi(const ChoiOptions& opt) {
  const qcd::ParsedSpec spec = load_spec(opt.spec_path);
  const qcd::ChoiState c = qcd::choi(spec.channel);
  const qcd::EigResult eig = qcd::hermitian_eig(c.matrix);

  ordered_json out;
  out["dims"] = c.dims;
  out["eigenvalues"] = eig.eigenvalues;
  out["matrix"] = qcd::matrix_to_json(c.matrix);
  write_output(opt.out_path, qcd::report::dump(out));
  return 0;
}

struct DecomposeOptions {
  std::string klass;
  std::string spec_path;
  std::string witness_path;
  double tol = 1e-9;
  bool verify = false;
};

int run_decompose(const DecomposeOptions& opt) {
  qcd::ComplexMatrix witness;
  if (!opt.witness_path.empty()) {
    const ordered_json j = parse_json_text(read_file(opt.witness_path));
    witness = qcd::parse_matrix(j.is_object() && j.contains("matrix")
                                    ? j["matrix"]
                                    : j);
  } else {
    const qcd::ParsedSpec spec = load_spec(opt.spec_path);
    if (opt.klass == "ccop") {
      const qcd::CcopDetection det = qcd::analyze_ccop(spec.channel, opt.tol);
      if (!det.witness)
        throw MismatchError(
            "Choi is PPT: the channel admits no CCOP witness to decompose");
      witness = det.witness->matrix;
    } else {
      if (!spec.two_qudit_gate)
        throw MismatchError(
            "bi-entangling witness needs a unitary two-qudit gate spec");
      witness = qcd::be_witness(*spec.two_qudit_gate);
    }
  }

  if (!is_power_of_two(witness.rows()))
    throw NonQubitError(
        "witness dimension is not a power of 2; no local Pauli decomposition");

  const qcd::PauliDecomposition decomp =
      qcd::pauli_decompose(witness, log2_exact(witness.rows()));

  std::vector<const qcd::PauliDecomposition::Term*> order;
  for (const auto& term : decomp.terms) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const double ma = std::abs(a->coeff), mb = std::abs(b->coeff);
    if (ma != mb) return ma > mb;
    return a->string.name() < b->string.name();
  });
  for (const auto* term : order) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%+.17g", term->coeff);
    std::cout << term->string.name() << "  " << buf << "\n";
  }

  if (opt.verify) {
    const double dev = qcd::max_abs_diff(qcd::reconstruct(decomp), witness);
    std::cout << "# reconstruction max abs deviation = " << dev << "\n";
    if (dev > 1e-10) {
      std::cerr << "decompose: reconstruction deviates beyond 1e-10\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witness-based detection of non-CCOP channels and non-BE gates"};
  app.set_version_flag("--version", qcd::kVersion);
  app.require_subcommand(1);

  ChoiOptions choi_opt;
  CLI::App* cmd_choi = app.add_subcommand("choi", "write a channel's Choi state");
  cmd_choi->add_option("spec", choi_opt.spec_path, "channel spec JSON")
      ->required();
  cmd_choi->add_option("-o,--out", choi_opt.out_path,
                       "output path (default stdout)");

  DetectOptions detect_opt;
  CLI::App* cmd_detect =
      app.add_subcommand("detect", "run a detection and emit a report");
  cmd_detect->add_option("class", detect_opt.klass, "ccop or be")
      ->required()
      ->check(CLI::IsMember({"ccop", "be"}));
  cmd_detect->add_option("spec", detect_opt.spec_path, "channel spec JSON")
      ->required();
  cmd_detect->add_option("--tol", detect_opt.tol, "detection tolerance")
      ->capture_default_str();
  cmd_detect
      ->add_option("--shots", detect_opt.shots,
                   "also simulate finite-shot sampling, shots per term")
      ->check(CLI::PositiveNumber);
  cmd_detect->add_option("--seed", detect_opt.seed,
                         "RNG seed (falls back to QCD_SEED, then 0)");
  cmd_detect->add_option("--k-sigma", detect_opt.k_sigma,
                         "sigmas below zero required by the sampled verdict")
      ->capture_default_str();
  cmd_detect->add_option("--report", detect_opt.report_path,
                         "report path (default stdout)");

  DecomposeOptions dec_opt;
  CLI::App* cmd_dec = app.add_subcommand(
      "decompose", "print a witness as local Pauli terms");
  cmd_dec->add_option("class", dec_opt.klass, "ccop or be")
      ->check(CLI::IsMember({"ccop", "be"}));
  cmd_dec->add_option("spec", dec_opt.spec_path, "channel spec JSON");
  cmd_dec->add_option("--witness", dec_opt.witness_path,
                      "decompose a witness matrix JSON file instead");
  cmd_dec->add_option("--tol", dec_opt.tol, "detection tolerance")
      ->capture_default_str();
  cmd_dec->add_flag("--verify", dec_opt.verify,
                    "check the terms reconstruct the witness");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_choi->parsed()) return run_choi(choi_opt);
    if (cmd_detect->parsed()) return run_detect(detect_opt);
    if (cmd_dec->parsed()) {
      if (dec_opt.witness_path.empty() &&
          (dec_opt.klass.empty() || dec_opt.spec_path.empty())) {
        std::cerr << "decompose: need either --witness FILE or CLASS SPEC\n";
        return kExitInvalidSpec;
      }
      return run_decompose(dec_opt);
    }
  } catch (const qcd::SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const IoError& e) {
    std::cerr << "I/O failure: " << e.what() << "\n";
    return kExitIo;
  } catch (const MismatchError& e) {
    std::cerr << "class/spec mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const NonQubitError& e) {
    std::cerr << e.what() << "\n";
    return kExitNonQubit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
