#include "specdet/closed_spectrum.hpp"

#include <algorithm>

#include "specdet/error.hpp"

namespace specdet {

ClosedSpectrum::ClosedSpectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) require(e.mult >= 0, "negative multiplicity");
  normalize();
}

void ClosedSpectrum::normalize() {
  std::vector<SpectrumEntry> merged;
  for (const auto& e : entries_) {
    if (e.mult == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const SpectrumEntry& m) { return m.value == e.value; });
    if (it == merged.end()) merged.push_back(e);
    else it->mult += e.mult;
  }
  std::sort(merged.begin(), merged.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    const double dx = x.value.to_double(), dy = y.value.to_double();
    if (dx != dy) return dx > dy;
    // close values: fall back to exact comparison when radicands agree
    if (x.value.delta() == y.value.delta() || x.value.is_rational() || y.value.is_rational())
      return x.value > y.value;
    return x.value.delta() < y.value.delta();
  });
  entries_ = std::move(merged);
}

int ClosedSpectrum::size() const {
  int s = 0;
  for (const auto& e : entries_) s += e.mult;
  return s;
}

int ClosedSpectrum::multiplicity(const QuadraticNumber& value) const {
  for (const auto& e : entries_)
    if (e.value == value) return e.mult;
  return 0;
}

void ClosedSpectrum::add(const QuadraticNumber& value, int mult) {
  entries_.push_back({value, mult});
  normalize();
}

void ClosedSpectrum::remove(const QuadraticNumber& value, int mult) {
  for (auto& e : entries_)
    if (e.value == value) {
      require(e.mult >= mult, "eigenvalue " + value.to_string() + " has too small a multiplicity");
      e.mult -= mult;
      normalize();
      return;
    }
  throw PreconditionError("eigenvalue " + value.to_string() + " not present in spectrum");
}

ClosedSpectrum ClosedSpectrum::merged(const ClosedSpectrum& other) const {
  auto all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return ClosedSpectrum(std::move(all));
}

CharPoly ClosedSpectrum::to_char_poly() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& e : entries_) {
    const auto& v = e.value;
    if (v.is_rational()) {
      p = p * power(Polynomial::x_minus(v.a()), e.mult);
      continue;
    }
    if (v.b() < 0) continue;  // handled with its conjugate
    require(multiplicity(v.conjugate()) == e.mult, "irrational eigenvalue without matching conjugate");
    const Polynomial quad({v.a() * v.a() - v.b() * v.b() * Rational(v.delta()), -2 * v.a(), 1});
    p = p * power(quad, e.mult);
  }
  return p;
}

std::vector<double> ClosedSpectrum::numeric() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.insert(out.end(), e.mult, e.value.to_double());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace specdet
