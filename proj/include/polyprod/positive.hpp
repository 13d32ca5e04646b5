#ifndef POLYPROD_POSITIVE_HPP
#define POLYPROD_POSITIVE_HPP

#include "polyprod/matrix.hpp"

#include <span>

namespace polyprod {

enum class CertificateKind { spanning, dependence, none };

// Coefficients are present whenever kind != none; they are strictly
// positive and weight the input vectors to an exact zero sum.
struct PositiveCertificate {
  CertificateKind kind = CertificateKind::none;
  QVector coefficients;

  explicit operator bool() const { return kind != CertificateKind::none; }
};

// Strictly positive λ with Σ λ_i v_i = 0, found as a feasible point of
// { λ_i >= 1 } by the exact phase-1 simplex.
PositiveCertificate positive_dependence(std::span<const QVector> vectors, std::size_t dim);

// kind == spanning iff the vectors span R^dim and are positively dependent.
// dim == 0 is vacuously spanning (empty coefficient list if no vectors).
PositiveCertificate positively_spans(std::span<const QVector> vectors, std::size_t dim);

// Exact check of a claimed dependence certificate: all coefficients > 0
// and the weighted sum vanishes.
bool verify_dependence(std::span<const QVector> vectors, std::span<const Rational> coefficients);

}  // namespace polyprod

#endif  // POLYPROD_POSITIVE_HPP
