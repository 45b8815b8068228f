#include "bgpc/int_matrix.hpp"

#include <sstream>

#include "bgpc/error.hpp"
#include "bgpc/text.hpp"

namespace bgpc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidMatroid, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

bool IntMatrix::is_signed() const {
  for (int v : data_) {
    if (v < -1 || v > 1) return false;
  }
  return true;
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(i, j) != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  }
  return s;
}

BinaryMatrix IntMatrix::support() const {
  BinaryMatrix b(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) b.set(i, j, (*this)(i, j) % 2 != 0);
  }
  return b;
}

LabeledMatrix parse_int_matrix(std::string_view input) {
  const auto lines = text::content_lines(input);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty matrix file");
  const auto header = text::split_ws(lines[0].text);
  auto r_s = text::keyed(header, "rows");
  auto c_s = text::keyed(header, "cols");
  if (!r_s || !c_s) text::fail(lines[0].number, "expected 'rows=<r> cols=<n>'");
  const auto r = static_cast<std::size_t>(text::parse_int(*r_s, lines[0].number));
  const auto c = static_cast<std::size_t>(text::parse_int(*c_s, lines[0].number));
  if (lines.size() < 1 + r) text::fail(lines.back().number, "expected " + std::to_string(r) + " rows");
  LabeledMatrix out{IntMatrix(r, c), {}};
  for (std::size_t i = 0; i < r; ++i) {
    const auto& line = lines[1 + i];
    auto tok = text::split_ws(line.text);
    if (tok.size() != c) text::fail(line.number, "expected " + std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j) out.matrix(i, j) = static_cast<int>(text::parse_int(tok[j], line.number));
  }
  if (lines.size() > 1 + r) {
    const auto& line = lines[1 + r];
    out.labels = text::split_ws(line.text);
    if (out.labels.size() != c) text::fail(line.number, "expected " + std::to_string(c) + " column labels");
    if (lines.size() > 2 + r) text::fail(lines[2 + r].number, "trailing content");
  }
  return out;
}

std::string format_int_matrix(const IntMatrix& a, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "rows=" << a.rows() << " cols=" << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? " " : "") << labels[j] << (j + 1 == labels.size() ? "\n" : "");
  return out.str();
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  }
  return m;
}

IntMatrix signed_incidence(const Graph& g) {
  const int rows = g.vertex_count() > 0 ? g.vertex_count() - 1 : 0;
  IntMatrix a(static_cast<std::size_t>(rows), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edges()[j];
    if (e.u == e.v) continue;
    const int lo = std::min(e.u, e.v);
    const int hi = std::max(e.u, e.v);
    if (lo < rows) a(static_cast<std::size_t>(lo), j) = 1;
    if (hi < rows) a(static_cast<std::size_t>(hi), j) = -1;
  }
  return a;
}

}  // namespace bgpc
