#include "polyprod/product.hpp"

#include <stdexcept>

namespace polyprod {

std::size_t ProductLabeling::code(const std::vector<int>& tuple) const {
  std::size_t c = 0;
  for (int t : tuple) c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(t);
  return c;
}

ProductCheck check_product(const VPolytope& v, std::span<const RowLabel> labels, int n, int r) {
  if (labels.empty()) throw std::invalid_argument("product check needs labeled rows");
  if (labels.size() != v.num_rows) throw std::invalid_argument("label count differs from row count");
  if (n < 3 || r < 1) throw std::invalid_argument("product check: invalid (n, r)");

  std::size_t expected = 1;
  for (int k = 0; k < r; ++k) expected *= static_cast<std::size_t>(n);
  if (v.size() != expected)
    return {std::nullopt, "vertex count " + std::to_string(v.size()) + " != n^r = " + std::to_string(expected)};

  ProductLabeling lab;
  lab.n = n;
  lab.r = r;
  lab.vertex_of_code.assign(expected, expected);
  lab.tuples.reserve(v.size());
  for (std::size_t vi = 0; vi < v.size(); ++vi) {
    std::vector<std::vector<int>> per_block(static_cast<std::size_t>(r));
    for (auto row : v.incidence[vi].indices()) {
      const RowLabel& l = labels[row];
      if (l.block < 1 || l.block > r || l.index < 0 || l.index >= n)
        return {std::nullopt, "row label out of range"};
      per_block[static_cast<std::size_t>(l.block - 1)].push_back(l.index);
    }
    std::vector<int> tuple(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
      const auto& rows = per_block[static_cast<std::size_t>(k)];
      if (rows.size() != 2)
        return {std::nullopt, "vertex " + std::to_string(vi) + " is tight on " + std::to_string(rows.size()) +
                                  " rows of block " + std::to_string(k + 1)};
      const int a = rows[0], b = rows[1];
      int start;
      if ((a + 1) % n == b) start = a;
      else if ((b + 1) % n == a) start = b;
      else
        return {std::nullopt, "vertex " + std::to_string(vi) + " rows of block " + std::to_string(k + 1) +
                                  " are not cyclically adjacent"};
      tuple[static_cast<std::size_t>(k)] = start;
    }
    const std::size_t c = lab.code(tuple);
    if (lab.vertex_of_code[c] != expected) return {std::nullopt, "two vertices share a product label"};
    lab.vertex_of_code[c] = vi;
    lab.tuples.push_back(std::move(tuple));
  }
  return {std::move(lab), {}};
}

bool product_isomorphic(const VPolytope& v, std::span<const RowLabel> labels, int n, int r) {
  return check_product(v, labels, n, r).labeling.has_value();
}

}  // namespace polyprod
