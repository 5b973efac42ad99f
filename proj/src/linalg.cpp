#include "unbendable/linalg.hpp"

#include "unbendable/poly_gcd.hpp"

namespace unbendable {

namespace {

// Division known to be exact in the fraction-free elimination.
Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial() && a.denominator().is_one() && b.denominator().is_one())
    return RationalFunction(divide_exact(a.numerator(), b.numerator()));
  return a / b;
}

std::size_t print_size(const Rational& a) { return a.to_string().size(); }
std::size_t print_size(const RationalFunction& a) { return a.print_size(); }

// Multiplier that turns the row into integers (Q) or polynomials (Q(s)).
Rational clearing_factor(const std::vector<Rational>& row) {
  mpz_class l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(l);
}

RationalFunction clearing_factor(const std::vector<RationalFunction>& row) {
  Poly l;
  bool any = false;
  for (const auto& x : row) {
    if (x.is_zero() || x.denominator().is_one()) continue;
    l = any ? poly_lcm(l, x.denominator()) : make_monic(x.denominator());
    any = true;
  }
  return any ? RationalFunction(l) : RationalFunction(1);
}

// Forward fraction-free elimination in place; returns pivot columns.
template <class F>
std::vector<std::size_t> bareiss(Matrix<F>& a, bool* swapped_odd = nullptr) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    F k = clearing_factor(a.row(i));
    if (!k.is_one())
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= k;
  }
  std::vector<std::size_t> pivots;
  F prev(1);
  std::size_t k = 0;
  bool odd = false;
  for (std::size_t col = 0; col < a.cols() && k < a.rows(); ++col) {
    std::size_t best = a.rows();
    std::size_t best_size = 0;
    for (std::size_t r = k; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      std::size_t sz = print_size(a(r, col));
      if (best == a.rows() || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best == a.rows()) continue;
    if (best != k) {
      a.swap_rows(best, k);
      odd = !odd;
    }
    for (std::size_t r = k + 1; r < a.rows(); ++r) {
      for (std::size_t c = col + 1; c < a.cols(); ++c) {
        F v = a(k, col) * a(r, c) - a(r, col) * a(k, c);
        a(r, c) = prev.is_one() ? v : exact_div(v, prev);
      }
      a(r, col) = F();
    }
    // Entries left of the pivot in row k are zero; entries of row k right of
    // the pivot are kept as they are (Bareiss keeps the pivot row).
    prev = a(k, col);
    pivots.push_back(col);
    ++k;
  }
  if (swapped_odd) *swapped_odd = odd;
  return pivots;
}

template <class F>
void verify_kernel(const Matrix<F>& m, const std::vector<std::vector<F>>& kernel) {
#ifdef UNBENDABLE_VERIFY_LINALG
  for (const auto& k : kernel)
    for (const auto& x : m.apply(k))
      if (!x.is_zero()) throw InternalError("kernel vector fails back-substitution");
#else
  (void)m;
  (void)kernel;
#endif
}

}  // namespace

template <class F>
Matrix<F> Matrix<F>::from_rows(const std::vector<std::vector<F>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
std::vector<F> Matrix<F>::row(std::size_t i) const {
  return std::vector<F>(data_.begin() + long(i * cols_), data_.begin() + long((i + 1) * cols_));
}

template <class F>
std::vector<F> Matrix<F>::column(std::size_t j) const {
  std::vector<F> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

template <class F>
void Matrix<F>::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shapes do not match");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

template <class F>
std::vector<F> Matrix<F>::apply(const std::vector<F>& v) const {
  if (v.size() != cols_) throw PreconditionError("vector length does not match matrix");
  std::vector<F> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

template <class F>
bool Matrix<F>::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
std::string Matrix<F>::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

template <class F>
RrefResult<F> rref_rank_kernel(const Matrix<F>& m) {
  RrefResult<F> res;
  Matrix<F> a = m;
  res.pivots = bareiss(a);
  res.rank = res.pivots.size();
  // Scale pivot rows to 1 and clear above, bottom up.
  for (std::size_t r = 0; r < res.rank; ++r) {
    F inv = F(1) / a(r, res.pivots[r]);
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) a(r, c) *= inv;
  }
  for (std::size_t r = res.rank; r-- > 0;) {
    std::size_t pc = res.pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      F f = a(above, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < a.cols(); ++c)
        if (!a(r, c).is_zero()) a(above, c) -= f * a(r, c);
    }
  }
  for (std::size_t r = res.rank; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = F();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> k(a.cols());
    k[f] = F(1);
    for (std::size_t r = 0; r < res.rank; ++r)
      if (!a(r, f).is_zero()) k[res.pivots[r]] = -a(r, f);
    res.kernel.push_back(std::move(k));
  }
  res.rref = std::move(a);
  verify_kernel(m, res.kernel);
  return res;
}

template <class F>
std::size_t rank_of(const Matrix<F>& m) {
  Matrix<F> a = m;
  return bareiss(a).size();
}

template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
  Matrix<F> a = m;
  return bareiss(a);
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return F(1);
  // Undo the row clearing afterwards: det(a) = prod(k_i) det(m).
  F scale(1);
  Matrix<F> a = m;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    F k = clearing_factor(a.row(i));
    scale *= k;
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= k;
  }
  bool odd = false;
  auto piv = bareiss(a, &odd);
  if (piv.size() < m.rows()) return F();
  F d = a(m.rows() - 1, m.cols() - 1) / scale;
  return odd ? -d : d;
}

const char* to_string(SolveKind k) {
  switch (k) {
    case SolveKind::Unique: return "unique";
    case SolveKind::Parametrized: return "parametrized";
    case SolveKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

template <class F>
SolveResult<F> solve_affine_system(const Matrix<F>& m, const std::vector<F>& rhs) {
  if (rhs.size() != m.rows()) throw PreconditionError("right-hand side length does not match rows");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto rr = rref_rank_kernel(aug);
  SolveResult<F> res;
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) {
    res.kind = SolveKind::Inconsistent;
    return res;
  }
  res.particular.assign(m.cols(), F());
  for (std::size_t r = 0; r < rr.rank; ++r) res.particular[rr.pivots[r]] = rr.rref(r, m.cols());
  for (auto& k : rr.kernel) {
    if (!k[m.cols()].is_zero()) continue;  // the free rhs column is not a solution direction
    k.pop_back();
    res.kernel.push_back(std::move(k));
  }
  res.kind = res.kernel.empty() ? SolveKind::Unique : SolveKind::Parametrized;
#ifdef UNBENDABLE_VERIFY_LINALG
  auto lhs = m.apply(res.particular);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == rhs[i])) throw InternalError("solution fails back-substitution");
  verify_kernel(m, res.kernel);
#endif
  return res;
}

Matrix<Rational> specialize(const Matrix<RationalFunction>& m, const std::vector<Rational>& values) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = specialize(m(i, j), values);
  return out;
}

template class Matrix<Rational>;
template class Matrix<RationalFunction>;

#define INSTANTIATE(F)                                                         \
  template RrefResult<F> rref_rank_kernel(const Matrix<F>&);                   \
  template std::size_t rank_of(const Matrix<F>&);                              \
  template std::vector<std::size_t> independent_columns(const Matrix<F>&);     \
  template F determinant(const Matrix<F>&);                                    \
  template SolveResult<F> solve_affine_system(const Matrix<F>&, const std::vector<F>&);

INSTANTIATE(Rational)
INSTANTIATE(RationalFunction)

}  // namespace unbendable
