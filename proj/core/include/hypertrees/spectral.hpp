#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "hypertrees/complex.hpp"
#include "hypertrees/graph.hpp"

namespace hypertrees::spectral {

struct SpectralReport {
  double lambda2 = 0.0;
  int min_degree = 0;
  double avg_degree = 0.0;
  bool connected = false;
  double residual = 0.0;  // ||L v - lambda2 v|| for the reported pair
  int iterations = 0;
};

/// Id - D^{-1/2} A D^{-1/2} as a dense matrix (oracle-scale only).
Eigen::MatrixXd normalized_laplacian(const Graph& g);

/// Full spectrum by dense symmetric eigendecomposition, ascending.
/// The test oracle for the iterative path.
Eigen::VectorXd spectrum_dense(const Graph& g);

/// Second-smallest eigenvalue of the normalized Laplacian, by Lanczos
/// with full reorthogonalization and explicit deflation of D^{1/2} 1.
/// Disconnected graphs take the lambda2 = 0 path with an explicit
/// component eigenvector; isolated vertices are an error, as is failing
/// to push the residual below 1e-9.
SpectralReport lambda2(const Graph& g);

/// Every (k-1)-face of [n] lies in some top face (with the implicit full
/// lower skeleton this is all purity can still fail on).
bool is_pure(const Complex& x);

/// Smallest nonzero eigenvalue of the weighted up-down Laplacian on
/// (k-1)-forms, each face weighted by the number of top faces containing
/// it; for k = 1 this is exactly the normalized-Laplacian gap. The count
/// of structural zero eigenvalues comes from the exact boundary rank.
double updown_gap(const Complex& x);

/// The graph on [n] minus tau whose edges complete tau to a top face.
Graph face_link_graph(const Complex& x, const Face& tau);

struct GarlandLinkRow {
  Face tau;
  bool isolated = false;   // link has a degree-0 vertex; bound vacuous
  bool connected = false;
  double lambda0 = 0.0;
};

struct GarlandReport {
  std::vector<GarlandLinkRow> links;
  bool vacuous = false;      // some link was isolated or had gap <= 0
  double eps_star = 0.0;     // 1 - min link gap
  double bound = 0.0;        // 1 - k * eps_star
  std::optional<double> actual_gap;
  bool consistent = false;   // actual >= bound - 1e-8 (or bound vacuous)
};

/// Garland's local-to-global estimate, instance-checked: the (k-2)-links'
/// gaps give the bound, the weighted up-down gap gives the actual value.
GarlandReport garland_report(const Complex& x, bool compute_actual = true);

struct ZukRow {
  int vertex = 0;
  bool connected = false;
  double lambda0 = 0.0;
};

struct ZukReport {
  std::vector<ZukRow> rows;
  bool verdict = false;  // all links connected with lambda0 > 1/2
};

/// The numeric inputs of Zuk's criterion for a pure 2-complex.
ZukReport zuk_report(const Complex& x);

struct SweepRow {
  int n = 0;
  int k = 0;
  int m = 0;
  double p = 0.0;  // er generator only
  std::uint64_t seed = 0;
  double lambda2 = 0.0;
  int min_deg = 0;
  double avg_deg = 0.0;
  bool connected = false;
  double residual = 0.0;
};

struct SweepConfig {
  enum class Generator { link_union, erdos_renyi };
  Generator generator = Generator::link_union;
  std::vector<int> n_values;
  int k = 2;
  std::vector<int> m_values;        // link_union grid
  std::vector<Rational> p_values;   // erdos_renyi grid
  int runs = 1;
  std::uint64_t seed = 0;
};

/// Grid runs; rows appear in grid order (n, then m/p, then run), each run
/// on its own derived stream.
std::vector<SweepRow> sweep(const SweepConfig& config);

}  // namespace hypertrees::spectral
