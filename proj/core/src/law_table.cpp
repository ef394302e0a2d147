#include "hypertrees/law_table.hpp"

#include <stdexcept>

namespace hypertrees::coupling {

void LawTable::add(const Complex& x, const Rational& mass) {
  if (mass < 0) throw std::invalid_argument("LawTable: negative mass");
  if (mass == 0) return;
  table_[x] += mass;
}

void LawTable::finalize() {
  Rational total = 0;
  for (auto it = table_.begin(); it != table_.end();) {
    if (it->second == 0) {
      it = table_.erase(it);
      continue;
    }
    total += it->second;
    ++it;
  }
  if (total != 1) throw std::logic_error("LawTable: masses do not sum to 1");
}

Rational LawTable::mass_of(const Complex& x) const {
  auto it = table_.find(x);
  return it == table_.end() ? Rational(0) : it->second;
}

Rational LawTable::tv_distance(const LawTable& other) const {
  Rational sum = 0;
  for (const auto& [x, p] : table_) sum += abs(p - other.mass_of(x));
  for (const auto& [x, q] : other.table_)
    if (table_.find(x) == table_.end()) sum += q;
  return sum / 2;
}

void Histogram::add(const Complex& x, long count) {
  counts_[x] += count;
  total_ += count;
}

LawTable Histogram::to_law() const {
  LawTable law;
  for (const auto& [x, c] : counts_) law.add(x, Rational(c, total_));
  law.finalize();
  return law;
}

}  // namespace hypertrees::coupling
