#pragma once

#include <string>
#include <vector>

#include "unbendable/rational_function.hpp"

namespace unbendable {

/// Dense matrix over Q or Q(params).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<F>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<F> row(std::size_t i) const;
  std::vector<F> column(std::size_t j) const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<F> apply(const std::vector<F>& v) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<F>> kernel;
};

/// Reduced row echelon form, rank, pivot columns and a kernel basis (one
/// vector per free column, with 1 in that column).
template <class F>
RrefResult<F> rref_rank_kernel(const Matrix<F>& m);

/// Rank only, by fraction-free elimination.
template <class F>
std::size_t rank_of(const Matrix<F>& m);

/// Pivot columns of the fraction-free echelon form, i.e. the first maximal
/// independent subset of columns in order.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m);

template <class F>
F determinant(const Matrix<F>& m);

enum class SolveKind { Unique, Parametrized, Inconsistent };
const char* to_string(SolveKind k);

template <class F>
struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  std::vector<F> particular;
  std::vector<std::vector<F>> kernel;
};

template <class F>
SolveResult<F> solve_affine_system(const Matrix<F>& m, const std::vector<F>& rhs);

/// Evaluates every entry at the given parameter values.
Matrix<Rational> specialize(const Matrix<RationalFunction>& m, const std::vector<Rational>& values);

extern template class Matrix<Rational>;
extern template class Matrix<RationalFunction>;

}  // namespace unbendable
