#include "bgpc/binary_matrix.hpp"

#include <utility>

#include "bgpc/error.hpp"
#include "bgpc/graph.hpp"

namespace bgpc {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, 0) {
  if (cols > kMaxGround) throw Error(ErrorKind::GroundTooLarge, "binary matrix limited to 64 columns");
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<std::string> cleaned;
  for (const auto& r : rows) {
    std::string s;
    for (char c : r) {
      if (c == '0' || c == '1') {
        s.push_back(c);
      } else if (c != ' ' && c != '\t') {
        throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, c) + "' in binary row");
      }
    }
    cleaned.push_back(std::move(s));
  }
  const std::size_t cols = cleaned.empty() ? 0 : cleaned.front().size();
  BinaryMatrix m(cleaned.size(), cols);
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (cleaned[i].size() != cols) throw Error(ErrorKind::Parse, "binary rows have unequal length");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, cleaned[i][j] == '1');
  }
  return m;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t BinaryMatrix::column_bits(std::size_t j) const {
  std::uint64_t col = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (get(i, j)) col |= std::uint64_t{1} << i;
  }
  return col;
}

std::size_t gf2_rank(std::vector<std::uint64_t> vectors) {
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < 64 && rank < vectors.size(); ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    std::size_t pivot = rank;
    while (pivot < vectors.size() && !(vectors[pivot] & mask)) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (k != rank && (vectors[k] & mask)) vectors[k] ^= vectors[rank];
    }
    ++rank;
  }
  return rank;
}

std::size_t BinaryMatrix::rank() const { return gf2_rank(rows_); }

std::size_t BinaryMatrix::column_rank(ElementSet cols) const {
  std::vector<std::uint64_t> masked;
  masked.reserve(rows_.size());
  for (auto r : rows_) masked.push_back(r & cols.bits());
  return gf2_rank(std::move(masked));
}

BinaryMatrix BinaryMatrix::row_reduced() const {
  std::vector<std::uint64_t> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < cols_ && rank < rows.size(); ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != rank && (rows[k] & mask)) rows[k] ^= rows[rank];
    }
    ++rank;
  }
  BinaryMatrix out(rank, cols_);
  for (std::size_t i = 0; i < rank; ++i) out.rows_[i] = rows[i];
  return out;
}

BinaryMatrix BinaryMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BinaryMatrix out(rows_.size(), cols.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) out.set(i, k, get(i, cols[k]));
  }
  return out;
}

BinaryMatrix BinaryMatrix::with_column(std::uint64_t column) const {
  BinaryMatrix out(rows_.size(), cols_ + 1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out.rows_[i] = rows_[i];
    out.set(i, cols_, (column >> i) & 1u);
  }
  return out;
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

std::string BinaryMatrix::row_string(std::size_t i) const {
  std::string s;
  s.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) s.push_back(get(i, j) ? '1' : '0');
  return s;
}

BinaryMatrix graph_binary_rep(const Graph& g) {
  const int rows = g.vertex_count() > 0 ? g.vertex_count() - 1 : 0;
  BinaryMatrix m(static_cast<std::size_t>(rows), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edges()[j];
    if (e.u == e.v) continue;
    if (e.u < rows) m.set(static_cast<std::size_t>(e.u), j, true);
    if (e.v < rows) m.set(static_cast<std::size_t>(e.v), j, true);
  }
  return m;
}

}  // namespace bgpc
