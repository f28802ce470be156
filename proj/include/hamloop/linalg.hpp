#pragma once

#include <optional>
#include <vector>

#include "hamloop/rational.hpp"

namespace hamloop {

using QMat = std::vector<QVec>;
using IMat = std::vector<IVec>;

Rational dot(const QVec& a, const QVec& b);
Rational dot(const IVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rational& s);

/// Solves A x = b exactly; empty when A is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

/// Row rank over the rationals.
std::size_t rank(QMat m);

/// Affine rank of a point set (dimension of its affine hull).
std::size_t affine_rank(const std::vector<QVec>& points);

/// One-dimensional kernel of (n-1) independent integer rows in n variables,
/// returned as a primitive integer vector; empty if the kernel is not a line.
std::optional<IVec> line_kernel(const IMat& rows, std::size_t n);

/// Divides by the gcd of the entries; the zero vector is rejected.
IVec primitive(IVec v);

Int gcd_of(const IVec& v);

Int det(IMat m);

/// Inverse of a matrix with determinant +-1; empty when |det| != 1.
std::optional<IMat> inverse_unimodular(const IMat& u);

IVec matvec(const IMat& m, const IVec& v);
QVec matvec(const IMat& m, const QVec& v);
IMat transpose(const IMat& m);

/// Extended gcd: returns g = gcd(a, b) >= 0 and (x, y) with a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

}  // namespace hamloop
