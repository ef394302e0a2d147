#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypertrees/kernel.hpp"
#include "hypertrees/rng.hpp"

namespace hypertrees::measure {

enum class SampleMethod { exact, floating, ust };
std::string method_name(SampleMethod m);
SampleMethod method_from_name(const std::string& name);

struct SampleRecord {
  Complex complex;
  Integer torsion;
  std::uint64_t seed = 0;
  std::uint64_t draw_index = 0;
  SampleMethod method = SampleMethod::exact;
};

/// Chain-rule walk over the k-faces in colex order: at each face the
/// inclusion probability is the current conditioned kernel's leading
/// diagonal entry, and stepping applies the matching Schur complement.
/// Driving it with exhaustive decisions instead of coin flips walks the
/// whole branch tree, which is how the trajectory-sum tests work.
class ExactChainSampler {
 public:
  ExactChainSampler(int n, int k);

  bool done() const { return offset_ == faces_.size(); }
  const Face& current_face() const { return faces_[offset_]; }
  Rational current_prob() const;
  void step(bool include);

  /// Probability of the decision path taken so far.
  const Rational& trajectory_probability() const { return trajectory_; }
  Complex result() const;

 private:
  int n_, k_;
  std::vector<Face> faces_;
  std::size_t offset_ = 0;
  RatMatrix kernel_;  // conditioned kernel over faces_[offset_..]
  std::vector<Face> chosen_;
  Rational trajectory_ = 1;
};

struct SampleBudget {
  std::size_t exact_max_faces = 300;
  std::size_t float_max_faces = 20000;
};

/// One draw of nu_{n,k}. Streams are split per draw index, so batches can
/// run concurrently and still be reproducible. The returned complex always
/// passes is_tree; the float method throws when a conditional probability
/// leaves [-1e-8, 1 + 1e-8].
SampleRecord sample(int n, int k, std::uint64_t seed, std::uint64_t draw_index,
                    SampleMethod method, const SampleBudget& budget = {});

/// Batch helper: draws [0, count) with per-draw streams, in parallel.
std::vector<SampleRecord> sample_many(int n, int k, std::uint64_t seed, std::size_t count,
                                      SampleMethod method, const SampleBudget& budget = {});

/// Wilson's loop-erased random walk on the complete graph; edges of a
/// uniform spanning tree of K_n.
std::vector<std::pair<int, int>> wilson_ust(int n, Rng& rng);

}  // namespace hypertrees::measure
