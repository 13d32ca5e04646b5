#ifndef POLYPROD_SIMPLEX_HPP
#define POLYPROD_SIMPLEX_HPP

#include "polyprod/matrix.hpp"

#include <optional>

namespace polyprod {

// Phase-1 exact simplex for { x : A x = b, x >= 0 }.
// Bland's rule (lowest index enters, lowest basic index leaves on ties),
// so the result is deterministic. Returns a basic feasible solution or
// nullopt when the system is infeasible.
std::optional<QVector> find_nonnegative_solution(const QMatrix& a, std::span<const Rational> b);

}  // namespace polyprod

#endif  // POLYPROD_SIMPLEX_HPP
