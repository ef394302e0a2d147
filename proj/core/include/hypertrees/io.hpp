#pragma once

#include <iosfwd>
#include <string>

#include "hypertrees/complex.hpp"
#include "hypertrees/sampler.hpp"
#include "hypertrees/spectral.hpp"

namespace hypertrees::io {

/// One line-delimited JSON record per complex: integer fields n and k plus
/// a faces array of ascending integer arrays, faces in colex order.
std::string complex_record(const Complex& x);
/// Enumeration record: complex fields plus its torsion order.
std::string tree_record(const Complex& x, const Integer& torsion);
std::string sample_record(const measure::SampleRecord& rec);

/// Parses a record produced by any of the writers above; extra fields are
/// ignored.
Complex parse_complex_record(const std::string& line);

/// Plain "u v" pairs, 1-indexed, one edge per line.
void write_edge_list(std::ostream& out, const spectral::Graph& g);
spectral::Graph read_edge_list(std::istream& in);

std::string sweep_csv_header(bool er_generator);
std::string sweep_csv_row(const spectral::SweepRow& row, bool er_generator);

/// Structured verification outcome, one JSON line.
struct VerifyRecord {
  std::string identity;
  int n = 0;
  int k = 0;
  int j = -1;                   // simplex-link only
  std::string method = "exact";
  bool pass = false;
  std::string detail;           // human-readable; exact values or max discrepancy
};
std::string verify_record(const VerifyRecord& rec);

}  // namespace hypertrees::io
