#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bgpc/binary_matrix.hpp"
#include "bgpc/graph.hpp"
#include "bgpc/rational.hpp"

namespace bgpc {

/// Small dense integer matrix. A SignedMatrix is an IntMatrix with every entry
/// in {-1,0,1}; star-mesh outputs may leave that range for non-TU inputs.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_signed() const;
  bool row_is_zero(std::size_t i) const;
  IntMatrix transposed() const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Entrywise absolute value mod 2.
  BinaryMatrix support() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

using SignedMatrix = IntMatrix;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Matrix file contents: `rows=<r> cols=<n>`, integer rows, optional labels.
struct LabeledMatrix {
  IntMatrix matrix;
  std::vector<std::string> labels;
};
LabeledMatrix parse_int_matrix(std::string_view text);
std::string format_int_matrix(const IntMatrix& a, const std::vector<std::string>& labels = {});

RationalMatrix to_rational(const IntMatrix& a);

/// Oriented incidence matrix (+1 at the lower endpoint, -1 at the higher) with
/// the last vertex row removed. Loops give zero columns.
IntMatrix signed_incidence(const Graph& g);

}  // namespace bgpc
