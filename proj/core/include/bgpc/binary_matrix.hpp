#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bgpc/element_set.hpp"

namespace bgpc {

class Graph;

/// Dense matrix over GF(2) with at most 64 columns; row i is a bitmask over columns.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// Rows given as strings of '0'/'1' (spaces ignored), all of equal length.
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool value);
  std::uint64_t row_bits(std::size_t i) const { return rows_[i]; }
  ElementSet support(std::size_t i) const { return ElementSet(rows_[i]); }

  /// Column j as a bitmask over rows (requires rows() <= 64).
  std::uint64_t column_bits(std::size_t j) const;

  std::size_t rank() const;
  /// Rank of the submatrix formed by the given columns.
  std::size_t column_rank(ElementSet cols) const;

  /// Row-echelon equivalent with zero rows dropped (same column matroid).
  BinaryMatrix row_reduced() const;
  /// Columns selected in order (ground positions in `cols`).
  BinaryMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Appends a column given as a bitmask over rows.
  BinaryMatrix with_column(std::uint64_t column) const;
  void swap_rows(std::size_t a, std::size_t b);

  std::string row_string(std::size_t i) const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Rank over GF(2) of a list of bit vectors.
std::size_t gf2_rank(std::vector<std::uint64_t> vectors);

/// Vertex-edge incidence over GF(2) with the last vertex row dropped; loops give
/// zero columns. For a connected graph this represents M(G) with full row rank.
BinaryMatrix graph_binary_rep(const Graph& g);

}  // namespace bgpc
