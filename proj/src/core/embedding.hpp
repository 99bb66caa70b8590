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

#ifndef SYMPROD_CORE_EMBEDDING_HPP_
#define SYMPROD_CORE_EMBEDDING_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "core/point_set.hpp"
#include "core/tomography.hpp"

namespace symprod {

// (min A, A - min A).
std::pair<double, PointSet> split_min(const PointSet& set);

struct PinnedNormalization {
  double scale = 0.0;              // t = max B
  std::optional<PointSet> pinned;  // E = B / t, empty for the cone apex (t = 0)
};

// Writes a set with min 0 as t*E with E containing 0 and 1.
PinnedNormalization pinned_normalize(const PointSet& set);

// E -> {exp(2 pi i e)}; 0 and 1 land on the same point (1, 0).
PointSet circle_map(const PointSet& pinned);

// 2 * n! * sum_{k=1..n} 1/k! = 2 floor((e-1) n!), exact. Rejects n > 12.
std::uint64_t dimension(int n);

enum class StageKind {
  kPad,
  kSplit,
  kPinnedNormalize,
  kCircleMap,
  kProject,
  kRecurse,
  kAffineNormalize,
  kConeLift,
  kAssemble,
};

std::string_view stage_name(StageKind kind);

// Two-sided constants of a stage: lower * d_in <= d_out <= upper * d_in.
struct StageConstants {
  double lower = 1.0;
  double upper = 1.0;
  bool lower_certified = true;
  bool upper_certified = true;
};

struct Stage {
  StageKind kind;
  StageConstants constants;
};

// The recursive bi-Lipschitz embedding of R^(n) into R^m(n):
//
//   A -> (min A, cone lift of t * psi(E)),  A - min A = t E,
//   psi(E) = s_n * (Phi_{n-1}(g_1 C), ..., Phi_{n-1}(g_n C) - c_n),
//   C = circle image of E, g_j the projections along n planar lines.
//
// c_n is the image of {0, 1} and s_n scales the image of the pinned sets to
// diameter at most 2, so the Euclidean cone lift applies.
class EmbeddingPipeline {
 public:
  static constexpr int kMaxCapacity = 6;

  static EmbeddingPipeline build(int n);

  int capacity() const { return n_; }
  std::size_t output_dim() const { return output_dim_; }

  Vec embed(const PointSet& set) const;
  // Normalized image psi(E) of a pinned set, n >= 2.
  Vec embed_pinned(const PointSet& pinned) const;

  const std::vector<Stage>& stages() const { return stages_; }
  // Constants of psi on the pinned sets with the Hausdorff metric.
  const StageConstants& inner() const { return inner_; }
  const StageConstants& overall() const { return overall_; }

  const EmbeddingPipeline* sub_pipeline() const { return sub_.get(); }
  const SeparationCertificate* separation() const {
    return certificate_ ? &*certificate_ : nullptr;
  }
  const Vec& center() const { return center_; }
  double scale() const { return scale_; }
  // Certified bound on diam of the unnormalized pinned-set image.
  double diameter_bound() const { return diameter_bound_; }

 private:
  EmbeddingPipeline() = default;
  Vec raw_pinned_image(const PointSet& pinned) const;

  int n_ = 1;
  std::size_t output_dim_ = 2;
  std::shared_ptr<const EmbeddingPipeline> sub_;
  std::optional<SeparationCertificate> certificate_;
  Vec center_;
  double scale_ = 1.0;
  double diameter_bound_ = 0.0;
  std::vector<Stage> stages_;
  StageConstants inner_;
  StageConstants overall_;
};

inline Vec embed(const PointSet& set, const EmbeddingPipeline& pipeline) {
  return pipeline.embed(set);
}

// Embedding of (R^d)^(n), d in {2,3}: project d-1 times along n+1 lines, then
// embed each resulting subset of R with the n-pipeline.
class RdEmbedding {
 public:
  static constexpr int kMaxCapacity = 4;

  static RdEmbedding build(int n, int d);

  int capacity() const { return n_; }
  int dim() const { return d_; }
  std::size_t output_dim() const;
  Vec embed(const PointSet& set) const;
  const EmbeddingPipeline& pipeline() const { return *pipeline_; }

 private:
  RdEmbedding() = default;

  int n_ = 1;
  int d_ = 2;
  std::vector<LineFamily> families_;  // dimension d, d-1, ..., 2
  std::shared_ptr<const EmbeddingPipeline> pipeline_;
};

Vec embed_rd(const PointSet& set, int n, int d);
// 2 (n+1)^(d-1) floor((e-1) n!).
std::uint64_t embed_rd_dimension(int n, int d);

}  // namespace symprod

#endif  // SYMPROD_CORE_EMBEDDING_HPP_
