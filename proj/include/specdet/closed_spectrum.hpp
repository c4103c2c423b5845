#pragma once

#include <vector>

#include "specdet/exact.hpp"
#include "specdet/polynomial.hpp"

namespace specdet {

struct SpectrumEntry {
  QuadraticNumber value;
  int mult = 0;
  bool operator==(const SpectrumEntry&) const = default;
};

// Multiset of quadratic eigenvalues, kept merged and sorted descending.
class ClosedSpectrum {
 public:
  ClosedSpectrum() = default;
  explicit ClosedSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int size() const;  // total multiplicity
  int multiplicity(const QuadraticNumber& value) const;

  void add(const QuadraticNumber& value, int mult = 1);
  void remove(const QuadraticNumber& value, int mult = 1);  // throws if absent
  ClosedSpectrum merged(const ClosedSpectrum& other) const;

  // Irrational entries must come in conjugate pairs of equal multiplicity.
  CharPoly to_char_poly() const;
  std::vector<double> numeric() const;  // with multiplicity, descending

  bool operator==(const ClosedSpectrum&) const = default;

 private:
  void normalize();
  std::vector<SpectrumEntry> entries_;
};

}  // namespace specdet
