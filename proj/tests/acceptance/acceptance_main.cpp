// Acceptance suite: one criterion per block, each printing a PASS/FAIL
// line with the measured values. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hypertrees/coupling.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/measure.hpp"
#include "hypertrees/sampler.hpp"
#include "hypertrees/spectral.hpp"
#include "hypertrees/stats.hpp"

using namespace hypertrees;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool check_sampler_fit(int n, int k, measure::SampleMethod method, std::size_t draws,
                       std::uint64_t seed, std::ostringstream& detail) {
  const auto atoms = trees::enumerate_trees(n, k);
  std::map<Complex, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index[atoms[i].complex] = i;

  std::vector<long> counts(atoms.size(), 0);
  const auto recs = measure::sample_many(n, k, seed, draws, method);
  for (const auto& rec : recs) {
    auto it = index.find(rec.complex);
    if (it == index.end()) {
      detail << "draw outside the enumerated support; ";
      return false;
    }
    counts[it->second] += 1;
  }
  std::vector<double> expected(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    expected[i] =
        static_cast<double>(measure::nu_mass(atoms[i].complex)) * static_cast<double>(draws);
  const double stat = stats::chi_square_stat(counts, expected);
  const double p = stats::chi_square_pvalue(stat, static_cast<long>(atoms.size()) - 1);
  detail << "(" << n << "," << k << ") " << measure::method_name(method) << " atoms="
         << atoms.size() << " chi2=" << stat << " p=" << p << "; ";
  return p > 0.001;
}

Outcome criterion1() {
  Outcome out;
  std::ostringstream detail;
  const std::vector<std::tuple<int, int, long long>> cases = {
      {4, 1, 16}, {5, 1, 125}, {6, 1, 1296}, {5, 2, 125}, {6, 2, 46656}, {6, 3, 1296}};
  for (auto [n, k, want] : cases) {
    const auto v = measure::kalai_sum_verify(n, k);
    const bool ok = v.equal && v.det_route == want;
    detail << "(" << n << "," << k << "): " << v.det_route << " = " << v.cauchy_binet_route
           << " = " << v.torsion_route << (ok ? "" : " MISMATCH") << "; ";
    out.pass = out.pass && ok;
  }
  out.detail = detail.str();
  return out;
}

Outcome criterion2() {
  Outcome out;
  int checked = 0;
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      if (!homology::hodge_check(n, k)) {
        out.pass = false;
        out.detail += "failed at (" + std::to_string(n) + "," + std::to_string(k) + "); ";
      }
      ++checked;
    }
  out.detail += std::to_string(checked) + " (n,k) pairs exact";
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::ostringstream detail;
  for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    const bool link_ok = coupling::link_law_check(n, k);
    const bool proj_ok = coupling::proj_law_check(n, k);
    detail << "(" << n << "," << k << ") link " << (link_ok ? "=" : "!=") << " model, proj "
           << (proj_ok ? "=" : "!=") << " model; ";
    out.pass = out.pass && link_ok && proj_ok;
  }
  out.detail = detail.str();
  return out;
}

Outcome criterion4() {
  Outcome out;
  out.pass = coupling::simplex_link_law_check(5, 2, 2);
  out.detail = "(5,2) j=2 pushforward table vs T(3,0) u Y_0(3, 2/5): ";
  out.detail += out.pass ? "equal" : "DIFFER";
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::ostringstream detail;
  const double budget = 1e7;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= std::min(3, n - 2); ++k) {
      // incr
      const auto incr = coupling::incr_identity_check(n, k, budget);
      if (!incr.ok()) detail << "incr(" << n << "," << k << ") FAILED; ";
      out.pass = out.pass && incr.ok();
      // bridge with deterministic small windows
      const auto km1 = all_faces(n, k - 1);
      const auto kf = all_faces(n, k);
      std::vector<Face> a{km1[0]};
      if (km1.size() > 2) a.push_back(km1[2]);
      std::vector<Face> b{kf[0]};
      if (kf.size() > 1) b.push_back(kf[1]);
      const auto bridge = measure::bridge_check(n, k, a, b, budget);
      if (!bridge.ok()) detail << "bridge(" << n << "," << k << ") FAILED; ";
      out.pass = out.pass && bridge.ok();
      // split (exhaustive where the pair space fits)
      const Integer pair_count =
          binomial(static_cast<long>(kf.size()), static_cast<long>(binomial(n - 1, k))) *
          binomial(static_cast<long>(km1.size()), static_cast<long>(binomial(n - 1, k - 1)));
      if (Rational(pair_count) <= Rational(budget)) {
        const auto split = coupling::split_identity_check(n, k, budget);
        if (!split.ok()) detail << "split(" << n << "," << k << ") FAILED; ";
        out.pass = out.pass && split.ok();
      }
      // newdef and the nu-product corollary
      const bool nd = coupling::newdef_check(n, k, budget);
      if (!nd) detail << "newdef(" << n << "," << k << ") FAILED; ";
      const auto prod = coupling::split_product_check(n, k, budget);
      if (!prod.ok) detail << "nu-product(" << n << "," << k << ") FAILED; ";
      out.pass = out.pass && nd && prod.ok;
    }
  }
  // the (6,2) torsion identity on 1000 random pairs
  const auto spot = coupling::split_torsion_spotcheck(6, 2, 1000, 20240811, budget);
  if (!spot.torsion_identity_ok) detail << "split-spotcheck(6,2) FAILED; ";
  out.pass = out.pass && spot.torsion_identity_ok;
  detail << "grid n<=6, k<=3 plus 1000 sampled (6,2) pairs";
  out.detail = detail.str();
  return out;
}

Outcome criterion6() {
  Outcome out;
  const auto sub = trees::submain_check(5, 2);
  const auto split = coupling::split_identity_check(4, 2);
  out.pass = sub.ok() && split.ok();
  std::ostringstream detail;
  detail << "|T_{5,2}| = " << sub.tree_count << ", |F^root_{4,2}| = "
         << sub.rooted_forest_count << ", phi bijective element-wise: "
         << (sub.bijective ? "yes" : "NO") << ", homology matched: "
         << (sub.homology_match ? "yes" : "NO") << ", split restriction at (4,2): "
         << (split.ok() ? "ok" : "FAILED");
  out.detail = detail.str();
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::ostringstream detail;
  out.pass = check_sampler_fit(5, 1, measure::SampleMethod::exact, 100000, 61, detail) &&
             check_sampler_fit(5, 2, measure::SampleMethod::exact, 100000, 62, detail) &&
             check_sampler_fit(6, 1, measure::SampleMethod::ust, 100000, 63, detail);
  out.detail = detail.str();
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::ostringstream detail;
  for (auto [n, k] : {std::pair{5, 1}, {5, 2}}) {
    const auto rep = measure::negative_association_check(n, k);
    detail << "(" << n << "," << k << ") " << rep.pairs_checked << " pairs"
           << (rep.ok ? "" : " VIOLATION") << (rep.minors_agree ? "" : " MINOR-MISMATCH")
           << "; ";
    out.pass = out.pass && rep.ok && rep.minors_agree;
  }
  out.detail = detail.str();
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::ostringstream detail;
  const int runs = 20;
  for (int n : {200, 500, 1000}) {
    const int m_hi = static_cast<int>(std::ceil(2.0 * std::log(n)));
    const int m_lo = static_cast<int>(std::ceil(std::log(n)));
    double sum_hi = 0.0, sum_lo = 0.0, sum_deg = 0.0;
    int connected = 0;
    double max_residual = 0.0;
    for (int run = 0; run < runs; ++run) {
      const std::uint64_t seed = 90000 + static_cast<std::uint64_t>(run);
      {
        spectral::Graph g = spectral::sample_link_union(n, 2, m_hi, seed);
        if (g.connected()) ++connected;
        const auto rep = spectral::lambda2(g);
        sum_hi += rep.lambda2;
        sum_deg += rep.avg_degree;
        max_residual = std::max(max_residual, rep.residual);
      }
      {
        spectral::Graph g = spectral::sample_link_union(n, 2, m_lo, seed + 7000);
        sum_lo += spectral::lambda2(g).lambda2;
      }
    }
    const double mean_hi = sum_hi / runs;
    const double mean_lo = sum_lo / runs;
    const double mean_deg = sum_deg / runs;
    const double target_deg = 3.0 * m_hi;  // (k+1) m at k = 2
    const bool conn_ok = connected >= static_cast<int>(0.95 * runs);
    const bool gap_ok = mean_hi >= 0.5;
    const bool res_ok = max_residual <= 1e-9;
    const bool deg_ok = std::fabs(mean_deg - target_deg) <= 0.1 * target_deg;
    const bool trend_ok = mean_hi > mean_lo;
    detail << "n=" << n << " m=" << m_hi << ": lambda2=" << mean_hi << " (m=" << m_lo
           << ": " << mean_lo << "), avg_deg=" << mean_deg << "/" << target_deg
           << ", connected " << connected << "/" << runs << ", max residual "
           << max_residual << (conn_ok && gap_ok && res_ok && deg_ok && trend_ok
                                   ? ""
                                   : " FAILED")
           << "; ";
    out.pass = out.pass && conn_ok && gap_ok && res_ok && deg_ok && trend_ok;
  }
  out.detail = detail.str();
  return out;
}

Outcome criterion10() {
  Outcome out;
  std::ostringstream detail;
  int produced = 0;
  int eps_ok_instances = 0;
  std::uint64_t seed = 500;
  int attempts = 0;
  while (produced < 100 && attempts < 1000) {
    ++attempts;
    const int n = 8 + static_cast<int>(seed % 9);  // 8..16, all <= 25
    std::vector<Face> faces;
    bool sampled = true;
    try {
      for (std::uint64_t i = 0; i < 3; ++i) {
        const auto rec =
            measure::sample(n, 2, seed, i, measure::SampleMethod::floating);
        for (const Face& f : rec.complex.faces()) faces.push_back(f);
      }
    } catch (const convergence_error&) {
      sampled = false;
    }
    ++seed;
    if (!sampled) continue;
    Complex x(n, 2, std::move(faces));
    if (!spectral::is_pure(x)) continue;
    ++produced;
    const auto rep = spectral::garland_report(x);
    if (rep.eps_star < 1.0) {
      ++eps_ok_instances;
      if (!rep.actual_gap.has_value() ||
          *rep.actual_gap < 1.0 - 2.0 * rep.eps_star - 1e-8) {
        out.pass = false;
        detail << "violation at n=" << n << " seed=" << (seed - 1) << ": actual="
               << (rep.actual_gap ? *rep.actual_gap : -1.0) << " bound=" << rep.bound
               << "; ";
      }
    }
  }
  if (produced < 100) {
    out.pass = false;
    detail << "only " << produced << " pure instances; ";
  }
  detail << produced << " pure 2-complexes, " << eps_ok_instances
         << " with eps* < 1, inequality exact to 1e-8";
  out.detail = detail.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kalai-sum three-way equality", criterion1},
      {"hodge identity n <= 12", criterion2},
      {"theorem-1 link/proj laws", criterion3},
      {"theorem-2 simplex link law", criterion4},
      {"incr/bridge/split/newdef/nu-product suites", criterion5},
      {"submain bijection", criterion6},
      {"sampler goodness of fit", criterion7},
      {"negative association", criterion8},
      {"spectral gap experiments", criterion9},
      {"garland instance consistency", criterion10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    const auto start = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
        1000.0;
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " C" << id << " "
              << criteria[i].first << " (" << secs << "s): " << out.detail << "\n";
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
