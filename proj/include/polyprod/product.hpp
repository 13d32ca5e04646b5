#ifndef POLYPROD_PRODUCT_HPP
#define POLYPROD_PRODUCT_HPP

#include "polyprod/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyprod {

// Canonical model of (C_n)^r: vertex t = (t_1..t_r) in (Z_n)^r lies on
// facet (k, i) iff t_k ∈ {i, i+1 mod n}.
struct ProductLabeling {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> tuples;      // per vertex
  std::vector<std::size_t> vertex_of_code;   // mixed-radix tuple code -> vertex

  std::size_t code(const std::vector<int>& tuple) const;
};

struct ProductCheck {
  std::optional<ProductLabeling> labeling;
  std::string failure;  // empty on success
};

// Throws std::invalid_argument when `labels` is empty or of the wrong size.
ProductCheck check_product(const VPolytope& v, std::span<const RowLabel> labels, int n, int r);

bool product_isomorphic(const VPolytope& v, std::span<const RowLabel> labels, int n, int r);

}  // namespace polyprod

#endif  // POLYPROD_PRODUCT_HPP
