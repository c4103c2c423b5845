#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specdet/exact.hpp"
#include "specdet/graph.hpp"
#include "specdet/polynomial.hpp"

namespace specdet {

enum class MatrixKind { A, L, Q, NL, cA, cL, cQ, cNL };

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::A,  MatrixKind::L,  MatrixKind::Q,  MatrixKind::NL,
                                           MatrixKind::cA, MatrixKind::cL, MatrixKind::cQ, MatrixKind::cNL};

std::string kind_name(MatrixKind k);
MatrixKind parse_kind(std::string_view name);
std::vector<MatrixKind> parse_kinds(std::string_view csv);  // "A,L,Q" -> sorted, unique
std::vector<MatrixKind> all_kinds();
bool is_complement_kind(MatrixKind k);
MatrixKind base_kind(MatrixKind k);  // cA -> A etc.

// A, L, Q as integer matrices; NL as the similar matrix D^+(D - A).
// Complement kinds are built on the complement graph.
RationalMatrix matrix_of(const Graph& g, MatrixKind kind);
IntMatrix integer_matrix(const Graph& g, MatrixKind kind);  // A, L, Q and their complements

struct Incidence {
  IntMatrix unoriented;  // B, n x m
  IntMatrix oriented;    // N, n x m, +1 at the smaller endpoint unless flipped
};
// flip[j] reverses the orientation of edge j (edges in Graph::edges() order).
Incidence incidence_matrices(const Graph& g, const std::vector<bool>& flip = {});

// Faddeev-LeVerrier over any exact scalar with exact division by k.
// Returns c_0..c_n ascending with c_n = 1.
template <class Scalar>
std::vector<Scalar> faddeev_leverrier(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix<Scalar> next = a * m;
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Matrix<Scalar> am = a * m;
    Scalar tr = am.trace();
    c[n - k] = Scalar(-tr / Scalar(k));
  }
  return c;
}

// Integer matrices: checked 64-bit Faddeev-LeVerrier, multimodular fallback.
Polynomial char_poly(const IntMatrix& m);
Polynomial char_poly(const RationalMatrix& m);
CharPoly char_poly(const Graph& g, MatrixKind kind);

// Reference determinant of xI - M by cofactor expansion (small n only).
Polynomial char_poly_by_cofactors(const RationalMatrix& m);

using SpectralFingerprint = std::map<MatrixKind, CharPoly>;

SpectralFingerprint fingerprint(const Graph& g, const std::vector<MatrixKind>& kinds);
bool are_cospectral(const Graph& g, const Graph& h, const std::vector<MatrixKind>& kinds);
// First kind on which the two graphs differ.
std::optional<MatrixKind> first_difference(const Graph& g, const Graph& h,
                                           const std::vector<MatrixKind>& kinds);
std::string fingerprint_key(const SpectralFingerprint& fp);

std::vector<double> numeric_spectrum(const Graph& g, MatrixKind kind);

}  // namespace specdet
