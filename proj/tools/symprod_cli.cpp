// Copyright 2026 The symprod Authors
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

// Command-line front end. Talks to the library only through symprod.h.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "CLI11.hpp"
#include "symprod/symprod.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitViolation = 2;
constexpr const char* kOutDirVariable = "SYMPROD_OUT_DIR";

// Raised for any failure that should end the run with exit status 1.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(symprod_status status) {
  if (status != SYMPROD_OK) {
    throw CliError(std::string(symprod_status_name(status)) + ": " + symprod_last_error());
  }
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { symprod_string_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
};

struct PointSetHandle {
  symprod_pointset* ptr = nullptr;
  ~PointSetHandle() { symprod_pointset_destroy(ptr); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A document argument is inline JSON when it starts with '{' or '[',
// otherwise a path.
std::string read_document(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

// Writes next to the target and renames, so a failed run leaves nothing.
void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw CliError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliError("cannot move output to '" + path.string() + "'");
  }
}

// Explicit path, else $SYMPROD_OUT_DIR/<fallback>, else stdout.
void emit(const std::string& text, const std::string& path, const std::string& fallback) {
  if (!path.empty()) {
    write_atomically(path, text);
    return;
  }
  if (const char* dir = std::getenv(kOutDirVariable); dir && *dir) {
    fs::create_directories(dir);
    write_atomically(fs::path(dir) / fallback, text);
    return;
  }
  std::cout << text << std::flush;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw CliError("cannot format number");
  return std::string(buf, end);
}

struct Options {
  std::string a, b;
  std::string input, output, out;
  std::string map = "embed";
  std::string space, csv, certificate;
  int n = 2, k = 1, d = 2, max = 8;
  std::size_t q = 2, origin = 0, points = 64, steps = 64;
  std::uint64_t samples = 10000, search = 0, seed = 1;
  double step = 0.1;
  bool certify = false, with_map = false, family_given = false;
};

int run_hausdorff(const Options& o) {
  PointSetHandle a, b;
  check(symprod_pointset_from_json(read_document(o.a).c_str(), &a.ptr));
  check(symprod_pointset_from_json(read_document(o.b).c_str(), &b.ptr));
  double d = 0.0;
  check(symprod_hausdorff(a.ptr, b.ptr, &d));
  emit(format_number(d) + "\n", o.out, "hausdorff.txt");
  return kExitOk;
}

int run_embed(const Options& o) {
  const std::string input = read_document(o.input);
  symprod_pipeline* raw = nullptr;
  check(symprod_pipeline_create(o.n, &raw));
  std::unique_ptr<symprod_pipeline, void (*)(symprod_pipeline*)> pipeline(
      raw, symprod_pipeline_destroy);
  OwnedString result;
  check(symprod_embed_json(pipeline.get(), input.c_str(), &result.text));
  emit(result.str(), o.output.empty() ? o.out : o.output, "embed.json");
  return kExitOk;
}

int run_embed_rd(const Options& o) {
  const std::string input = read_document(o.input);
  OwnedString result;
  check(symprod_embed_rd_json(o.n, o.d, input.c_str(), &result.text));
  emit(result.str(), o.output.empty() ? o.out : o.output, "embed-rd.json");
  return kExitOk;
}

int run_retract(const Options& o) {
  if (o.n < 1 || o.k < 0) throw CliError("BadRange: need n >= 1 and k >= 0");
  const std::string input = read_document(o.input);
  OwnedString result;
  check(symprod_retract_json(input.c_str(), static_cast<size_t>(o.n),
                             static_cast<size_t>(o.k), &result.text));
  emit(result.str(), o.output.empty() ? o.out : o.output, "retract.json");
  return kExitOk;
}

int run_tomo(const Options& o) {
  if (o.d < 2) throw CliError("BadRange: d must be >= 2");
  const auto d = static_cast<size_t>(o.d);
  OwnedString cert;
  if (!o.certificate.empty()) {
    if (!o.certify) throw CliError("--certificate needs --certify");
    const std::string text = read_document(o.certificate);
    OwnedString report;
    int passed = 0;
    check(symprod_tomo_verify(text.c_str(), o.samples, o.search, o.seed, &report.text, &passed));
    emit(report.str(), o.out, "tomo.json");
    return passed ? kExitOk : kExitViolation;
  }
  if (!o.family_given) throw CliError("tomo needs --q and --d (or --certificate)");
  check(symprod_tomo_certify(o.q, d, &cert.text));
  if (!o.input.empty()) {
    const std::string input = read_document(o.input);
    OwnedString projections;
    check(symprod_project_json(o.q, d, input.c_str(), &projections.text));
    emit(projections.str(), o.out, "tomo.json");
    return kExitOk;
  }
  if (!o.certify) {
    emit(cert.str(), o.out, "tomo.json");
    return kExitOk;
  }
  OwnedString report;
  int passed = 0;
  check(symprod_tomo_verify(cert.text, o.samples, o.search, o.seed, &report.text, &passed));
  emit(report.str(), o.out, "tomo.json");
  return passed ? kExitOk : kExitViolation;
}

int run_cone_check(const Options& o) {
  std::string space;
  if (!o.space.empty()) space = read_document(o.space);
  OwnedString report;
  int passed = 0;
  check(symprod_cone_check(o.space.empty() ? nullptr : space.c_str(), o.origin, o.points,
                           o.samples, o.seed, &report.text, &passed));
  emit(report.str(), o.out, "cone-check.json");
  return passed ? kExitOk : kExitViolation;
}

int run_distortion(const Options& o) {
  OwnedString report, csv;
  int passed = 0;
  check(symprod_distortion_run(o.map.c_str(), o.n, o.d, o.samples, o.search, o.step, o.seed,
                               &report.text, o.csv.empty() ? nullptr : &csv.text, &passed));
  if (!o.csv.empty()) write_atomically(o.csv, csv.str());
  emit(report.str(), o.out, "distortion.json");
  return passed ? kExitOk : kExitViolation;
}

int run_dims(const Options& o) {
  if (o.max < 1) throw CliError("BadRange: --max must be >= 1");
  std::ostringstream table;
  table << "n m\n";
  for (int n = 1; n <= o.max; ++n) {
    std::uint64_t m = 0;
    check(symprod_dimension(n, &m));
    table << n << ' ' << m << '\n';
  }
  emit(table.str(), o.out, "dims.txt");
  return kExitOk;
}

int run_extend(const Options& o) {
  if (o.n < 1) throw CliError("BadRange: n must be >= 1");
  const std::string input = read_document(o.input);
  OwnedString result;
  check(symprod_ball_extension_json(input.c_str(), static_cast<size_t>(o.n), o.steps,
                                    o.with_map ? 1 : 0, &result.text));
  emit(result.str(), o.output.empty() ? o.out : o.output, "extend.json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff symmetric products: embeddings, retractions and checks"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output file (default: $SYMPROD_OUT_DIR or stdout)");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  };

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance between two sets");
  hausdorff->add_option("A", o.a, "Point-set file or inline JSON")->required();
  hausdorff->add_option("B", o.b, "Point-set file or inline JSON")->required();
  add_out(hausdorff);

  auto* embed = app.add_subcommand("embed", "Embed subsets of R with at most n points");
  embed->add_option("--n", o.n, "Capacity")->required()->check(CLI::Range(1, 6));
  embed->add_option("input", o.input, "Point-set file or array")->required();
  embed->add_option("output", o.output, "Output file");
  add_out(embed);

  auto* embed_rd = app.add_subcommand("embed-rd", "Embed subsets of R^d with at most n points");
  embed_rd->add_option("--n", o.n, "Capacity")->required()->check(CLI::Range(1, 4));
  embed_rd->add_option("--d", o.d, "Ambient dimension")->required()->check(CLI::Range(2, 3));
  embed_rd->add_option("input", o.input, "Point-set file or array")->required();
  embed_rd->add_option("output", o.output, "Output file");
  add_out(embed_rd);

  auto* retract = app.add_subcommand("retract", "Retract sets of at most n points to k points");
  retract->add_option("--n", o.n, "Capacity of the input")->required();
  retract->add_option("--k", o.k, "Target capacity")->required();
  retract->add_option("input", o.input, "Point-set file or array")->required();
  retract->add_option("output", o.output, "Output file");
  add_out(retract);

  auto* tomo = app.add_subcommand("tomo", "Projection family of q+1 lines in R^d");
  auto* tomo_q = tomo->add_option("--q", o.q, "Capacity")->check(CLI::PositiveNumber);
  auto* tomo_d = tomo->add_option("--d", o.d, "Ambient dimension");
  tomo->add_flag("--certify", o.certify, "Verify the separation constant on sampled pairs");
  tomo->add_option("--samples", o.samples, "Random pairs")->capture_default_str();
  tomo->add_option("--search", o.search, "Adversarial iterations")->capture_default_str();
  tomo->add_option("--input", o.input, "Project these sets instead");
  tomo->add_option("--certificate", o.certificate,
                   "Verify this certificate instead of a freshly computed one");
  add_seed(tomo);
  add_out(tomo);

  auto* cone = app.add_subcommand("cone-check", "Compare the lifted cone metric with d_c");
  cone->add_option("--samples", o.samples, "Random pairs")->required();
  cone->add_option("--points", o.points, "Size of the random ball sample in R^3")
      ->capture_default_str();
  cone->add_option("--space", o.space, "Point-set file used as the base space");
  cone->add_option("--origin", o.origin, "Index of the origin in --space")
      ->capture_default_str();
  add_seed(cone);
  add_out(cone);

  auto* distortion = app.add_subcommand("distortion", "Bracket the distortion of a map");
  distortion->add_option("--map", o.map, "Map under test")
      ->required()
      ->check(CLI::IsMember({"embed", "retract", "tomo", "circle"}));
  distortion->add_option("--n", o.n, "Capacity (q for tomo)")->required();
  distortion->add_option("--d", o.d, "Ambient dimension for tomo")->capture_default_str();
  distortion->add_option("--samples", o.samples, "Random pairs")->required();
  distortion->add_option("--search", o.search, "Adversarial iterations")->required();
  distortion->add_option("--step", o.step, "Initial search step")->capture_default_str();
  distortion->add_option("--csv", o.csv, "Also write sampled pairs as CSV");
  add_seed(distortion);
  add_out(distortion);

  auto* dims = app.add_subcommand("dims", "Print the embedding dimension table");
  dims->add_option("--max", o.max, "Largest n")->required();
  add_out(dims);

  auto* extend = app.add_subcommand("extend", "Extend a sphere-sampled map to the ball");
  extend->add_option("--n", o.n, "Capacity")->required();
  extend->add_option("--steps", o.steps, "Radial steps")->capture_default_str();
  extend->add_flag("--with-map", o.with_map, "Include the full ball map");
  extend->add_option("input", o.input, "Sampled map file or inline JSON")->required();
  extend->add_option("output", o.output, "Output file");
  add_out(extend);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*hausdorff) return run_hausdorff(o);
    if (*embed) return run_embed(o);
    if (*embed_rd) return run_embed_rd(o);
    if (*retract) return run_retract(o);
    if (*tomo) {
      o.family_given = tomo_q->count() > 0 && tomo_d->count() > 0;
      return run_tomo(o);
    }
    if (*cone) return run_cone_check(o);
    if (*distortion) return run_distortion(o);
    if (*dims) return run_dims(o);
    if (*extend) return run_extend(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
