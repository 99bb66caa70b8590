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

// Acceptance run. Prints one PASS or FAIL line per criterion, followed by
// indented detail lines, and exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "core/cone.hpp"
#include "core/distortion.hpp"
#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/extension.hpp"
#include "core/maps.hpp"
#include "core/point_set.hpp"
#include "core/retraction.hpp"
#include "core/sampler.hpp"
#include "core/tomography.hpp"
#include "support/instances.hpp"
#include "support/test_support.hpp"

#ifndef SYMPROD_CLI_PATH
#error "SYMPROD_CLI_PATH must be defined"
#endif

namespace symprod {
namespace {

using testing::oracle_dimension_floor;
using testing::oracle_dimension_rational;
using testing::oracle_dist;
using testing::oracle_hausdorff;
using testing::SetGenerator;

constexpr std::size_t kSamples = 10000;

// Collects violations for one criterion. Only the first few are printed.
class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (++violations_ <= 5) notes_.push_back("violation: " + what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool ok() const { return violations_ == 0 && !aborted_; }
  void abort(const std::string& why) {
    aborted_ = true;
    notes_.push_back("error: " + why);
  }
  std::size_t violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t violations_ = 0;
  bool aborted_ = false;
  std::vector<std::string> notes_;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string show(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    const auto p = s.point(i);
    if (p.size() == 1) {
      out += num(p[0]);
      continue;
    }
    out += "(";
    for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + num(p[k]);
    out += ")";
  }
  return out + "}";
}

// a <= b up to a relative slack.
bool le_rel(double a, double b, double rel) { return a <= b + rel * (1.0 + std::abs(b)); }

// ---------------------------------------------------------------------------

void dimension_identity(Outcome& out) {
  const std::uint64_t expected[] = {2, 6, 20, 82};
  std::uint64_t prev = 0;
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t m = dimension(n);
    const std::uint64_t rec = n == 1 ? 2 : static_cast<std::uint64_t>(n) * prev + 2;
    out.check(m == oracle_dimension_rational(n), "rational mismatch at n=" + std::to_string(n));
    out.check(m == oracle_dimension_floor(n), "floor mismatch at n=" + std::to_string(n));
    out.check(m == rec, "recursion mismatch at n=" + std::to_string(n));
    if (n <= 4) out.check(m == expected[n - 1], "table mismatch at n=" + std::to_string(n));
    prev = m;
  }
  std::string row = "m(1..8) =";
  for (int n = 1; n <= 8; ++n) row += " " + std::to_string(dimension(n));
  out.note(row);
}

void hausdorff_axioms(Outcome& out) {
  struct Case {
    std::size_t capacity, dim;
  };
  for (const Case c : {Case{5, 1}, Case{4, 2}}) {
    SetGenerator gen(1000 + c.dim);
    double worst = 0.0;
    for (std::size_t i = 0; i < kSamples; ++i) {
      const PointSet a = gen.set(c.capacity, c.dim), b = gen.set(c.capacity, c.dim),
                     x = gen.set(c.capacity, c.dim);
      const double ab = hausdorff_distance(a, b), ba = hausdorff_distance(b, a);
      const double ax = hausdorff_distance(a, x), xb = hausdorff_distance(x, b);
      out.check(std::abs(ab - ba) <= 1e-9 * std::max(ab, ba), "symmetry " + show(a) + " " + show(b));
      out.check(ab <= (ax + xb) * (1 + 1e-9), "triangle " + show(a) + " " + show(x) + " " + show(b));
      out.check(std::abs(ab - oracle_hausdorff(a, b)) <= 1e-12 * (1 + ab), "oracle " + show(a));
      if (ax + xb > 0) worst = std::max(worst, ab / (ax + xb));
    }
    out.note("capacity " + std::to_string(c.capacity) + ", dim " + std::to_string(c.dim) +
             ": max d(a,b)/(d(a,x)+d(x,b)) = " + num(worst));
  }
}

void cone_metric(Outcome& out) {
  const SampledSpace space = SampledSpace::random_ball(5, 64, 3);
  out.check(space.diameter() <= 2.0, "space diameter " + num(space.diameter()));
  for (double c : space.embedded(space.origin())) out.check(c == 0.0, "origin not at 0");
  SetGenerator gen(3);
  auto point = [&] {
    const double t = gen.coin() ? gen.uniform(0, 1) : std::pow(10.0, gen.uniform(-6, 2));
    return ConePoint{gen.index(8) == 0 ? 0.0 : t, gen.index(space.size())};
  };
  for (std::size_t i = 0; i < kSamples; ++i) {
    const ConePoint p = point(), q = point(), r = point();
    const double pq = cone_distance(p, q, space);
    const double bound = cone_distance(p, r, space) + cone_distance(r, q, space);
    out.check(pq <= bound + 1e-12 * (1 + bound), "triangle at t=" + num(p.t) + "," + num(q.t));
  }
  const ConeComparisonReport rep = check_cone_comparison(space, kSamples, 11);
  out.check(rep.pairs_tested == kSamples, "pairs tested " + std::to_string(rep.pairs_tested));
  out.check(rep.bound_10_ok, "rho <= 10 d_c fails, max ratio " + num(rep.max_ratio));
  out.check(rep.bound_12_ok, "d_c <= 12 rho fails, min ratio " + num(rep.min_ratio));
  out.note("rho/d_c in [" + num(rep.min_ratio) + ", " + num(rep.max_ratio) + "] over " +
           std::to_string(rep.pairs_tested) + " pairs");
}

void cone_scaling(Outcome& out) {
  SetGenerator gen(4);
  for (std::size_t i = 0; i < kSamples; ++i) {
    const std::size_t n = 2 + gen.index(5);
    const PointSet e1 = gen.pinned(n), e2 = gen.pinned(n);
    const double t = std::pow(10.0, gen.uniform(-3, 3));
    const double t1 = gen.uniform(0, 2), t2 = gen.uniform(0, 2);
    const double base = hausdorff_distance(e1, e2);
    const double scaled = hausdorff_distance(e1.scaled(t), e2.scaled(t));
    out.check(std::abs(scaled - t * base) <= 1e-12 * (1 + t * base),
              "homogeneity " + show(e1) + " " + show(e2) + " t=" + num(t));
    const double gap = std::abs(t1 - t2);
    out.check(hausdorff_distance(e1.scaled(t1), e2.scaled(t2)) >= gap - 1e-12 * (1 + gap),
              "lower bound " + show(e1) + " " + show(e2));
    out.check(le_rel(hausdorff_distance(e1.scaled(t1), e1.scaled(t2)), gap, 1e-12),
              "upper bound " + show(e1));
  }
}

void retraction(Outcome& out) {
  for (std::size_t n = 2; n <= 6; ++n) {
    MetricSampler sampler = MetricSampler::on_line(20 + n, n);
    SetGenerator gen(40 + n);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const PairSample pair = sampler.next_pair();
      for (const PointSet* s : {&pair.a, &pair.b}) {
        const PointSet r = retract_once(*s, n);
        const double tol = 1e-12 * (1 + std::max(std::abs(s->min_value()), std::abs(s->max_value())));
        if (s->size() < n) out.check(r == *s, "not fixed " + show(*s));
        if (s->size() == n) out.check(r.size() <= n - 1, "cardinality " + show(*s));
        out.check(hausdorff_distance(*s, r) <= n * min_gap(*s, n).delta + tol,
                  "displacement " + show(*s));
      }
      // A set of exactly n points, to exercise the collapsing branch every time.
      const PointSet full = gen.set_exact(n);
      out.check(retract_once(full, n).size() <= n - 1, "cardinality " + show(full));
      const double dh = hausdorff_distance(pair.a, pair.b);
      const double dd = std::abs(min_gap(pair.a, n).delta - min_gap(pair.b, n).delta);
      out.check(le_rel(dd, 2 * dh, 1e-9), "gap Lipschitz " + show(pair.a) + " " + show(pair.b));
    }
    const MapUnderTest map = retraction_map(n);
    DistortionReport rep = estimate_distortion(map, domain_sampler(map, 60 + n), kSamples);
    rep = adversarial_search(map, rep, {kSamples, 0.1, false});
    const double bound = retraction_lipschitz_bound(n);
    out.check(le_rel(rep.upper_ratio, bound, 1e-9), "ratio " + num(rep.upper_ratio) +
                                                        " exceeds " + num(bound) + " at n=" + std::to_string(n));
    out.note("n=" + std::to_string(n) + ": max ratio " + num(rep.upper_ratio) + " (bound " +
             num(bound) + ")");
  }
}

void tomography(Outcome& out) {
  struct Case {
    std::size_t q, d;
  };
  for (const Case c : {Case{2, 2}, Case{3, 2}, Case{2, 3}}) {
    const SeparationCertificate cert = separation_constant(make_line_family(c.q, c.d));
    const SeparationReport rep = verify_separation(cert, kSamples, 70 + c.q + c.d, kSamples);
    const std::string tag = "(q,d)=(" + std::to_string(c.q) + "," + std::to_string(c.d) + ")";
    out.check(rep.separation_ok, tag + " separation, worst ratio " + num(rep.worst_ratio));
    out.check(rep.one_lipschitz_ok, tag + " projection ratio " + num(rep.max_component_ratio));
    out.check(rep.pairs_tested == kSamples && rep.search_iterations == kSamples, tag + " counts");
    out.note(tag + ": M = " + num(cert.separation) + ", worst d_H(A,B)/max_j d_H = " +
             num(rep.worst_ratio) + ", max projection ratio " + num(rep.max_component_ratio));
  }
  LineFamily perpendicular{2, 1, {{1.0, 0.0}, {0.0, 1.0}}};
  const SeparationCertificate cert = separation_constant(perpendicular);
  const double rel = std::abs(cert.separation - std::numbers::sqrt2) / std::numbers::sqrt2;
  out.check(rel <= 0.01 + 1e-12, "perpendicular M = " + num(cert.separation));
  out.note("perpendicular lines: M = " + num(cert.separation) + " (relative offset from sqrt 2: " +
           num(rel) + ")");
}

void embedding(Outcome& out) {
  for (int n = 2; n <= 4; ++n) {
    const auto start = std::chrono::steady_clock::now();
    auto pipeline = std::make_shared<const EmbeddingPipeline>(EmbeddingPipeline::build(n));
    const std::string tag = "n=" + std::to_string(n);
    out.check(pipeline->output_dim() == oracle_dimension_rational(n), tag + " output dimension");
    const MapUnderTest map = embedding_map(pipeline);
    MetricSampler sampler = domain_sampler(map, 80 + n);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const PairSample pair = sampler.next_pair();
      if (pair.a == pair.b) continue;
      out.check(pipeline->embed(pair.a) != pipeline->embed(pair.b),
                tag + " collision " + show(pair.a) + " " + show(pair.b));
    }
    DistortionReport rep = estimate_distortion(map, domain_sampler(map, 90 + n), kSamples);
    rep = adversarial_search(map, rep, {kSamples, 0.1, false});
    const double upper = *map.certified_upper;
    out.check(le_rel(rep.upper_ratio, upper, 1e-9), tag + " upper ratio " + num(rep.upper_ratio));
    out.check(rep.lower_ratio > 0.0 && rep.witness_low.has_value(), tag + " lower ratio not positive");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.check(n != 4 || secs <= 600.0, "n=4 took " + num(secs) + " s");
    out.note(tag + ": dim " + std::to_string(pipeline->output_dim()) + ", ratios [" +
             num(rep.lower_ratio) + ", " + num(rep.upper_ratio) + "], certified upper " +
             num(upper) + ", " + num(secs) + " s");
    if (rep.witness_low) {
      out.note("  lower witness A = " + show(rep.witness_low->a) + ", B = " +
               show(rep.witness_low->b) + ", d_H = " + num(rep.witness_low->domain_distance) +
               ", image distance = " + num(rep.witness_low->image_distance));
    }
  }
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<Vec> pts = a.points();
  for (const Vec& p : b.points()) pts.push_back(p);
  return PointSet::canonicalize(pts, a.dim());
}

void decomposition(Outcome& out) {
  const auto f = make_sampled_map({{0.0}, {1.0}},
                                  {PointSet::on_line({0, 100}), PointSet::on_line({0.5, 100.2})}, 0.5);
  const Decomposition worked = decompose_map(f, 2, 0);
  out.check(worked.g.images[0] == PointSet::on_line({0}) &&
                worked.g.images[1] == PointSet::on_line({0.5}),
            "worked example g");
  out.check(worked.h.images[0] == PointSet::on_line({100}) &&
                worked.h.images[1] == PointSet::on_line({100.2}),
            "worked example h");

  SetGenerator gen(99);
  std::size_t instances = 0;
  while (instances < 100) {
    std::size_t n = 0;
    const SampledMap m = testing::generated_instance(gen, n);
    if (m.max_cardinality() > n) continue;
    ++instances;
    const std::string tag = "instance " + std::to_string(instances);
    out.check(m.images[0].diameter() > 3 * m.lipschitz * m.diameter * (n - 1.0), tag + " hypothesis");
    const Decomposition parts = decompose_map(m, n, 0);
    for (std::size_t x = 0; x < m.size(); ++x) {
      out.check(set_union(parts.g.images[x], parts.h.images[x]) == m.images[x], tag + " union");
      for (std::size_t y = 0; y < m.size(); ++y) {
        const double bound = m.lipschitz * oracle_dist(m.domain[x], m.domain[y]);
        out.check(le_rel(oracle_hausdorff(parts.g.images[x], parts.g.images[y]), bound, 1e-9),
                  tag + " g Lipschitz");
        out.check(le_rel(oracle_hausdorff(parts.h.images[x], parts.h.images[y]), bound, 1e-9),
                  tag + " h Lipschitz");
      }
    }
  }
  out.note(std::to_string(instances) + " generated instances checked");
}

SampledMap on_circle(std::size_t count, double lipschitz,
                     const std::function<PointSet(double)>& f) {
  std::vector<Vec> domain = circle_grid(count);
  std::vector<PointSet> images;
  for (const Vec& x : domain) images.push_back(f(std::atan2(x[1], x[0])));
  return make_sampled_map(std::move(domain), std::move(images), lipschitz);
}

void extension(Outcome& out) {
  struct Case {
    std::string name;
    double lipschitz;
    std::function<PointSet(double)> f;
  };
  const std::vector<Case> cases = {
      {"constant", 1.0, [](double) { return PointSet::on_line({0, 1}); }},
      {"small diameter", 0.35,
       [](double t) {
         const double a = 0.2 * std::cos(t);
         return PointSet::on_line({a, a + 0.5 + 0.1 * std::sin(t)});
       }},
  };
  for (const Case& c : cases) {
    // 128 boundary points: spacing pi/64.
    const SampledMap f = on_circle(128, c.lipschitz, c.f);
    for (const bool ball : {false, true}) {
      const std::string tag = c.name + (ball ? " ball" : " radial");
      const ExtensionResult r = ball ? ball_extension(f, 2, {}) : radial_extension(f, 2, {});
      const std::size_t R = r.radial_steps, S = r.sphere_points;
      for (std::size_t j = 0; j < S; ++j) {
        out.check(r.map.images[1 + (R - 1) * S + j] == f.images[j], tag + " boundary");
      }
      const double top = r.sphere_constants.back();
      out.check(le_rel(top, f.lipschitz, 1e-9), tag + " boundary constant " + num(top));
      for (std::size_t i = 1; i <= R; ++i) {
        const double radius = static_cast<double>(i) / static_cast<double>(R);
        out.check(std::abs(r.sphere_constants[i - 1] - radius * top) <= 1e-9 * (1 + top),
                  tag + " sphere constant at r=" + num(radius));
      }
      ExtensionOptions fine;
      fine.radial_steps = 2 * R;
      const SampledMap f2 = on_circle(256, c.lipschitz, c.f);
      const ExtensionResult r2 = ball ? ball_extension(f2, 2, fine) : radial_extension(f2, 2, fine);
      const double c1 = r.grid_constant, c2 = r2.grid_constant;
      const double change = c1 == c2 ? 0.0 : std::abs(c2 - c1) / std::max(c1, c2);
      out.check(change < 0.1, tag + " refinement change " + num(change));
      out.note(tag + ": grid constant " + num(c1) + " -> " + num(c2) + " under 2x refinement");
    }
  }
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = "'" + std::string(SYMPROD_CLI_PATH) + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void reproducibility(Outcome& out) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("symprod_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands = {
      "tomo --certify --q 3 --d 2 --samples 2000 --search 500 --seed 17",
      "tomo --certify --q 2 --d 3 --samples 2000 --search 500 --seed 17",
      "cone-check --samples 2000 --seed 17",
      "distortion --map embed --n 3 --samples 2000 --search 500 --seed 17",
      "distortion --map retract --n 4 --samples 2000 --search 500 --seed 17",
      "distortion --map tomo --n 2 --d 3 --samples 2000 --search 500 --seed 17",
      "distortion --map circle --n 3 --samples 2000 --search 500 --seed 17",
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string reports[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path file = dir / (std::to_string(i) + "_" + std::to_string(k) + ".json");
      const Run r = run_cli(commands[i] + " --out '" + file.string() + "'");
      out.check(r.status == 0, "'" + commands[i] + "' exited " + std::to_string(r.status));
      reports[k] = slurp(file);
    }
    out.check(!reports[0].empty() && reports[0] == reports[1], "'" + commands[i] + "' differs");
  }
  out.note(std::to_string(commands.size()) + " verify commands rerun, reports compared byte for byte");
  fs::remove_all(dir);
}

}  // namespace
}  // namespace symprod

int main() {
  using namespace symprod;
  struct Criterion {
    const char* name;
    void (*body)(Outcome&);
  };
  const Criterion criteria[] = {
      {"dimension identity", dimension_identity},
      {"Hausdorff metric axioms", hausdorff_axioms},
      {"cone metric", cone_metric},
      {"cone scaling identities", cone_scaling},
      {"retraction", retraction},
      {"tomography", tomography},
      {"embedding", embedding},
      {"decomposition", decomposition},
      {"radial and ball extension", extension},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.abort(e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.ok()) ++failed;
    std::printf("%s %2d %s (%.1f s)\n", outcome.ok() ? "PASS" : "FAIL", index, c.name, secs);
    for (const std::string& line : outcome.notes()) std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
