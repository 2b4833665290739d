#include "parsicompact/counting.hpp"

#include <algorithm>
#include <cmath>

#include "parsicompact/error.hpp"

namespace parsicompact {

TreeCountTable::TreeCountTable(std::size_t max_n) : rows_(std::max<std::size_t>(max_n, 1) + 1) {
  // Row n holds m = 0..n-1 so that T(n-1, m+1) is always addressable.
  for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n].assign(n + 1, BigInt{0});
  rows_[1][0] = 1;
  for (std::size_t n = 2; n < rows_.size(); ++n) {
    for (std::size_t m = 0; m + 2 <= n; ++m) {
      BigInt value = 0;
      if (m > 0) value += BigInt(m + n - 3) * rows_[n - 1][m - 1];
      value += BigInt(2 * n + 2 * m - 3) * rows_[n - 1][m];
      if (n > m + 2) value += BigInt(m + 1) * rows_[n - 1][m + 1];
      rows_[n][m] = value;
    }
  }
}

BigInt TreeCountTable::at(std::size_t n, std::size_t m) const {
  if (n >= rows_.size()) throw Error(ErrorCode::kInvalidArgument, "n beyond table size");
  if (m >= rows_[n].size()) return 0;
  return rows_[n][m];
}

BigInt TreeCountTable::total(std::size_t n) const {
  BigInt sum = 0;
  for (std::size_t m = 0; m <= n; ++m) sum += at(n, m);
  return sum;
}

BigInt count_mixed(std::size_t n, std::size_t m) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  return TreeCountTable(n).at(n, m);
}

BigInt count_total_mixed(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  return TreeCountTable(n).total(n);
}

double closed_form_estimate(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "estimate needs n >= 2");
  const double x = static_cast<double>(n);
  const double log_value = (x - 2.0) * std::log(x) - 0.5 * std::log(2.0) - x / 2.0 -
                           (x - 1.5) * std::log(2.0 - std::exp(0.5));
  return std::exp(log_value);
}

BigInt count_cubic(std::size_t n) {
  BigInt value = 1;
  for (std::size_t k = 3; k <= n; ++k) value *= 2 * k - 5;
  return value;
}

}  // namespace parsicompact
