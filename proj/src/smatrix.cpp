#include "lamina/smatrix.hpp"

#include <sstream>

namespace lamina {

SeriesMatrix SeriesMatrix::identity(int n) {
  SeriesMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentSeries::from_int(1);
  return m;
}

std::vector<LaurentSeries> SeriesMatrix::col(int c) const {
  std::vector<LaurentSeries> v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
  return v;
}

void SeriesMatrix::set_col(int c, const std::vector<LaurentSeries>& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[static_cast<std::size_t>(r)];
}

void SeriesMatrix::scale_col(int c, const LaurentSeries& s) {
  for (int r = 0; r < rows_; ++r) at(r, c) = at(r, c) * s;
}

void SeriesMatrix::scale(const LaurentSeries& s) {
  for (auto& e : a_) e = e * s;
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols() != b.rows()) throw Unsupported("matrix shape mismatch in product");
  SeriesMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      LaurentSeries s;
      for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

namespace {

LaurentSeries det_rec(const SeriesMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  if (n == 2)
    return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) -
           m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
  LaurentSeries acc;
  const int c0 = cols[0];
  std::vector<int> sub_cols(cols.begin() + 1, cols.end());
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentSeries& piv = m.at(rows[i], c0);
    if (piv.is_exact_zero()) continue;
    std::vector<int> sub_rows;
    sub_rows.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) sub_rows.push_back(rows[k]);
    LaurentSeries minor = det_rec(m, sub_rows, sub_cols);
    LaurentSeries term = piv * minor;
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

LaurentSeries det(const SeriesMatrix& m) {
  if (m.rows() != m.cols()) throw Unsupported("determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentSeries::from_int(1);
  std::vector<int> rows(static_cast<std::size_t>(m.rows()));
  std::vector<int> cols(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) rows[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < m.cols(); ++i) cols[static_cast<std::size_t>(i)] = i;
  return det_rec(m, rows, cols);
}

SeriesMatrix adjugate(const SeriesMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw Unsupported("adjugate of a non-square matrix");
  SeriesMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = LaurentSeries::from_int(1);
    return adj;
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<int> rows, cols;
      for (int i = 0; i < n; ++i)
        if (i != r) rows.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != c) cols.push_back(j);
      LaurentSeries minor = det_rec(m, rows, cols);
      adj.at(c, r) = ((r + c) % 2 == 0) ? minor : -minor;
    }
  }
  return adj;
}

SeriesMatrix inverse(const SeriesMatrix& m) {
  const LaurentSeries d = det(m);
  if (d.is_exact_zero()) throw DegenerateSystem("inverse of a singular matrix");
  SeriesMatrix adj = adjugate(m);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) adj.at(r, c) = adj.at(r, c) / d;
  return adj;
}

SeriesMatrix from_column_blocks(const std::vector<const SeriesMatrix*>& sources,
                                const std::vector<int>& counts) {
  std::vector<std::vector<int>> idx(sources.size());
  for (std::size_t s = 0; s < sources.size(); ++s)
    for (int k = 0; k < counts[s]; ++k) idx[s].push_back(k);
  return from_column_subsets(sources, idx);
}

SeriesMatrix from_column_subsets(const std::vector<const SeriesMatrix*>& sources,
                                 const std::vector<std::vector<int>>& column_indices) {
  int total = 0;
  for (const auto& v : column_indices) total += static_cast<int>(v.size());
  const int rows = sources.empty() ? 0 : sources.front()->rows();
  if (total != rows) throw Unsupported("column blocks do not assemble a square matrix");
  SeriesMatrix m(rows, total);
  int c = 0;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (int src_col : column_indices[s]) {
      for (int r = 0; r < rows; ++r) m.at(r, c) = sources[s]->at(r, src_col);
      ++c;
    }
  }
  return m;
}

bool agrees(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!agrees(a.at(r, c), b.at(r, c))) return false;
  return true;
}

std::string to_string(const SeriesMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << "[ ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << " | ";
      out << to_string(m.at(r, c));
    }
    out << " ]\n";
  }
  return out.str();
}

}  // namespace lamina
