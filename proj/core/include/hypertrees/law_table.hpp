#pragma once

#include <map>

#include "hypertrees/complex.hpp"
#include "hypertrees/numeric.hpp"

namespace hypertrees::coupling {

/// A finitely supported probability law on complexes, keyed by the
/// canonical (colex-sorted) face list. Masses are exact rationals and
/// must sum to exactly 1 once finalized.
class LawTable {
 public:
  void add(const Complex& x, const Rational& mass);
  /// Verifies the total mass is exactly 1 (throws otherwise) and drops
  /// zero-mass atoms.
  void finalize();

  const std::map<Complex, Rational>& entries() const { return table_; }
  Rational mass_of(const Complex& x) const;
  std::size_t support_size() const { return table_.size(); }

  bool operator==(const LawTable& other) const { return table_ == other.table_; }

  /// Total variation distance, exact.
  Rational tv_distance(const LawTable& other) const;

 private:
  std::map<Complex, Rational> table_;
};

/// Empirical counts over complexes, convertible to an exact law.
class Histogram {
 public:
  void add(const Complex& x, long count = 1);
  long total() const { return total_; }
  const std::map<Complex, long>& counts() const { return counts_; }
  LawTable to_law() const;

 private:
  std::map<Complex, long> counts_;
  long total_ = 0;
};

}  // namespace hypertrees::coupling
