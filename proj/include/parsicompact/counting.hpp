#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parsicompact {

using BigInt = boost::multiprecision::cpp_int;

// T(n, m): unrooted trees on n labelled nodes plus m unlabelled nodes, where
// every leaf is labelled and every unlabelled node has degree at least 3.
class TreeCountTable {
 public:
  explicit TreeCountTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size() - 1; }
  // Zero outside 0 <= m <= n-2 (and T(1,0) = 1).
  BigInt at(std::size_t n, std::size_t m) const;
  // Sum over m of T(n, m).
  BigInt total(std::size_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt count_mixed(std::size_t n, std::size_t m);
BigInt count_total_mixed(std::size_t n);

// Asymptotic estimate of count_total_mixed(n), defined for n >= 2.
double closed_form_estimate(std::size_t n);

// Unrooted cubic trees with n labelled leaves: (2n-5)!! for n >= 3, 1 below.
BigInt count_cubic(std::size_t n);

}  // namespace parsicompact
