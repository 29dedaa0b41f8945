#pragma once

#include <vector>

#include "lamina/laurent.hpp"

namespace lamina {

/// Dense matrix over the Laurent-series field. Sizes stay tiny (m <= 6), so
/// determinants go through exact cofactor expansion and inverses through the
/// adjugate; both preserve exactness of exact inputs.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

  static SeriesMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentSeries& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const LaurentSeries& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r * cols_ + c)];
  }

  std::vector<LaurentSeries> col(int c) const;
  void set_col(int c, const std::vector<LaurentSeries>& v);
  void scale_col(int c, const LaurentSeries& s);
  void scale(const LaurentSeries& s);

  SeriesMatrix transpose() const;

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  bool operator==(const SeriesMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentSeries> a_;
};

LaurentSeries det(const SeriesMatrix& m);
SeriesMatrix adjugate(const SeriesMatrix& m);
SeriesMatrix inverse(const SeriesMatrix& m);

/// Square matrix assembled from column blocks: the first `counts[k]` columns
/// of each source matrix, in order.
SeriesMatrix from_column_blocks(const std::vector<const SeriesMatrix*>& sources,
                                const std::vector<int>& counts);

/// Square matrix assembled from explicitly chosen columns of the sources.
SeriesMatrix from_column_subsets(const std::vector<const SeriesMatrix*>& sources,
                                 const std::vector<std::vector<int>>& column_indices);

/// Entrywise agreement up to the common truncation windows.
bool agrees(const SeriesMatrix& a, const SeriesMatrix& b);

std::string to_string(const SeriesMatrix& m);

}  // namespace lamina
