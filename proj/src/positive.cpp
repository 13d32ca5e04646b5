#include "polyprod/positive.hpp"

#include "polyprod/simplex.hpp"

#include <stdexcept>

namespace polyprod {

namespace {

QMatrix as_columns(std::span<const QVector> vectors, std::size_t dim) {
  QMatrix a(dim, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) throw std::invalid_argument("vector length differs from dim");
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = vectors[j][i];
  }
  return a;
}

}  // namespace

PositiveCertificate positive_dependence(std::span<const QVector> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const QMatrix a = as_columns(vectors, dim);
  // λ = 1 + μ, μ >= 0:  A μ = -A 1
  QVector rhs(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) rhs[i] -= a(i, j);
  auto mu = find_nonnegative_solution(a, rhs);
  if (!mu) return {};
  PositiveCertificate cert{CertificateKind::dependence, std::move(*mu)};
  for (auto& c : cert.coefficients) c += 1;
  return cert;
}

PositiveCertificate positively_spans(std::span<const QVector> vectors, std::size_t dim) {
  if (dim == 0) {
    return {CertificateKind::spanning, QVector(vectors.size(), Rational(1))};
  }
  if (vectors.empty()) return {};
  if (rank(QMatrix::from_rows(vectors, dim)) != dim) return {};
  auto cert = positive_dependence(vectors, dim);
  if (cert) cert.kind = CertificateKind::spanning;
  return cert;
}

bool verify_dependence(std::span<const QVector> vectors, std::span<const Rational> coefficients) {
  if (vectors.size() != coefficients.size() || vectors.empty()) return false;
  const std::size_t dim = vectors.front().size();
  QVector sum(dim);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (coefficients[j] <= 0 || vectors[j].size() != dim) return false;
    for (std::size_t i = 0; i < dim; ++i) sum[i] += coefficients[j] * vectors[j][i];
  }
  for (const auto& s : sum)
    if (s != 0) return false;
  return true;
}

}  // namespace polyprod
