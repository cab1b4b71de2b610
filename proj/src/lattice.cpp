#include "toric/lattice.hpp"

#include <cassert>
#include <utility>

namespace toric {

namespace {

struct ExtendedGcd {
  Integer g, x, y;  // x*a + y*b == g >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void axpy_row(IntVector& target, const Integer& c, const IntVector& source) {
  for (std::size_t k = 0; k < target.size(); ++k) target[k] += c * source[k];
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, IntVector(cols, Integer(0))) {}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::vector<IntVector> rows) {
  for (const auto& r : rows)
    if (r.size() != cols)
      throw RankMismatch("matrix row " + to_string(r) + " does not have " + std::to_string(cols) +
                         " entries");
  IntMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw RankMismatch("matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r][c] = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r][c];
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c][r] = data_[r][c];
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_)
    throw RankMismatch("vector " + to_string(v) + " has rank " + std::to_string(v.size()) +
                       ", expected " + std::to_string(cols_));
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(data_[r], v);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw RankMismatch("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (data_[r][k] == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.data_[r][c] += data_[r][k] * other.data_[k][c];
    }
  return out;
}

EchelonForm row_echelon(const IntMatrix& m) {
  std::vector<IntVector> h = m.row_vectors();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntVector> u = IntMatrix::identity(rows).row_vectors();
  std::vector<std::size_t> pivots;

  std::size_t p = 0;
  for (std::size_t col = 0; col < cols && p < rows; ++col) {
    for (std::size_t i = p + 1; i < rows; ++i) {
      if (h[i][col] == 0) continue;
      if (h[p][col] == 0) {
        std::swap(h[p], h[i]);
        std::swap(u[p], u[i]);
        continue;
      }
      if (h[i][col] % h[p][col] == 0) {
        Integer q = h[i][col] / h[p][col];
        axpy_row(h[i], -q, h[p]);
        axpy_row(u[i], -q, u[p]);
        continue;
      }
      const Integer a = h[p][col], b = h[i][col];
      auto [g, x, y] = extended_gcd(a, b);
      const Integer ag = a / g, bg = b / g;
      // [x y; -b/g a/g] has determinant 1.
      IntVector hp(cols), hi(cols), up(rows), ui(rows);
      for (std::size_t k = 0; k < cols; ++k) {
        hp[k] = x * h[p][k] + y * h[i][k];
        hi[k] = ag * h[i][k] - bg * h[p][k];
      }
      for (std::size_t k = 0; k < rows; ++k) {
        up[k] = x * u[p][k] + y * u[i][k];
        ui[k] = ag * u[i][k] - bg * u[p][k];
      }
      h[p] = std::move(hp);
      h[i] = std::move(hi);
      u[p] = std::move(up);
      u[i] = std::move(ui);
    }
    if (h[p][col] == 0) continue;
    if (h[p][col] < 0) {
      h[p] = negate(h[p]);
      u[p] = negate(u[p]);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(h[i][col], h[p][col]);
      if (q == 0) continue;
      axpy_row(h[i], -q, h[p]);
      axpy_row(u[i], -q, u[p]);
    }
    pivots.push_back(col);
    ++p;
  }
  return {IntMatrix::from_rows(cols, std::move(h)), IntMatrix::from_rows(rows, std::move(u)),
          std::move(pivots)};
}

std::size_t rank(const IntMatrix& m) {
  // Fraction-free elimination; no transform needed.
  std::vector<IntVector> h = m.row_vectors();
  std::size_t p = 0;
  for (std::size_t col = 0; col < m.cols() && p < h.size(); ++col) {
    std::size_t sel = p;
    while (sel < h.size() && h[sel][col] == 0) ++sel;
    if (sel == h.size()) continue;
    std::swap(h[p], h[sel]);
    for (std::size_t i = p + 1; i < h.size(); ++i) {
      if (h[i][col] == 0) continue;
      Integer a = h[p][col], b = h[i][col];
      for (std::size_t k = col; k < m.cols(); ++k) h[i][k] = a * h[i][k] - b * h[p][k];
      Integer g = content(h[i]);
      if (g > 1)
        for (auto& x : h[i]) x /= g;
    }
    ++p;
  }
  return p;
}

std::size_t rank(std::size_t cols, const std::vector<IntVector>& rows) {
  return rank(IntMatrix::from_rows(cols, rows));
}

std::vector<IntVector> hermite_basis(std::size_t cols, const std::vector<IntVector>& gens) {
  EchelonForm e = row_echelon(IntMatrix::from_rows(cols, gens));
  std::vector<IntVector> basis(e.echelon.row_vectors().begin(),
                               e.echelon.row_vectors().begin() +
                                   static_cast<std::ptrdiff_t>(e.pivot_columns.size()));
  return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  EchelonForm e = row_echelon(m.transpose());
  std::vector<IntVector> k;
  for (std::size_t r = e.pivot_columns.size(); r < m.cols(); ++r) k.push_back(e.transform.row(r));
  return hermite_basis(m.cols(), k);
}

std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<RatVector> m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    m[r] = a[r];
    m[r].push_back(b[r]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    std::size_t sel = p;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[p], m[sel]);
    Rational inv = 1 / m[p][c];
    for (auto& x : m[p]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == p || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k <= cols; ++k) m[r][k] -= f * m[p][k];
    }
    pivot_cols.push_back(c);
    ++p;
  }
  for (std::size_t r = p; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < p; ++r) x[pivot_cols[r]] = m[r][cols];
  return x;
}

// ---------------------------------------------------------------------------

Sublattice Sublattice::generated_by(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
  Sublattice l;
  l.ambient_rank_ = ambient_rank;
  l.basis_ = hermite_basis(ambient_rank, gens);
  return l;
}

Sublattice Sublattice::zero(std::size_t ambient_rank) { return generated_by(ambient_rank, {}); }

Sublattice Sublattice::full(std::size_t ambient_rank) {
  return generated_by(ambient_rank, IntMatrix::identity(ambient_rank).row_vectors());
}

bool Sublattice::contains(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw RankMismatch("vector rank differs from sublattice ambient rank");
  IntVector w = v;
  for (const auto& b : basis_) {
    std::size_t piv = 0;
    while (b[piv] == 0) ++piv;
    if (w[piv] % b[piv] != 0) return false;
    Integer q = w[piv] / b[piv];
    axpy_row(w, -q, b);
  }
  return is_zero(w);
}

bool Sublattice::spans(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw RankMismatch("vector rank differs from sublattice ambient rank");
  std::vector<IntVector> rows = basis_;
  rows.push_back(v);
  return toric::rank(ambient_rank_, rows) == basis_.size();
}

bool Sublattice::is_primitive() const { return saturate(*this) == *this; }

std::string Sublattice::to_string() const {
  std::string s = "span(";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ",";
    s += toric::to_string(basis_[i]);
  }
  return s + ")";
}

Sublattice saturate(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
  if (gens.empty()) return Sublattice::zero(ambient_rank);
  auto normals = integer_kernel(IntMatrix::from_rows(ambient_rank, gens));
  return Sublattice::generated_by(ambient_rank,
                                  integer_kernel(IntMatrix::from_rows(ambient_rank, normals)));
}

Sublattice saturate(const Sublattice& l) { return saturate(l.ambient_rank(), l.basis()); }

Sublattice saturated_sum(const Sublattice& l1, const Sublattice& l2) {
  if (l1.ambient_rank() != l2.ambient_rank()) throw RankMismatch("sublattices of different lattices");
  std::vector<IntVector> gens = l1.basis();
  gens.insert(gens.end(), l2.basis().begin(), l2.basis().end());
  return saturate(l1.ambient_rank(), gens);
}

Sublattice annihilator(const Sublattice& l) {
  return Sublattice::generated_by(l.ambient_rank(),
                                  integer_kernel(IntMatrix::from_rows(l.ambient_rank(), l.basis())));
}

// ---------------------------------------------------------------------------

LatticeMap::LatticeMap(IntMatrix matrix)
    : source_rank_(matrix.cols()), target_rank_(matrix.rows()), matrix_(std::move(matrix)) {}

LatticeMap LatticeMap::identity(std::size_t n) { return LatticeMap(IntMatrix::identity(n)); }

LatticeMap LatticeMap::zero(std::size_t source_rank, std::size_t target_rank) {
  return LatticeMap(IntMatrix(target_rank, source_rank));
}

IntVector LatticeMap::operator()(const IntVector& v) const { return matrix_.apply(v); }

bool LatticeMap::is_surjective() const {
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < source_rank_; ++c) cols.push_back(matrix_.column(c));
  return Sublattice::generated_by(target_rank_, cols) == Sublattice::full(target_rank_);
}

LatticeMap LatticeMap::right_inverse() const {
  if (!is_surjective()) throw std::invalid_argument("right inverse of a non-surjective lattice map");
  EchelonForm e = row_echelon(matrix_.transpose());
  IntMatrix g(source_rank_, target_rank_);
  for (std::size_t k = 0; k < target_rank_; ++k)
    for (std::size_t i = 0; i < source_rank_; ++i) g.at(i, k) = e.transform.at(k, i);
  LatticeMap inv(std::move(g));
  assert(compose(*this, inv) == identity(target_rank_));
  return inv;
}

std::string LatticeMap::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < target_rank_; ++r) {
    if (r) s += ",";
    s += toric::to_string(matrix_.row(r));
  }
  return s + "]";
}

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (f.source_rank() != g.target_rank())
    throw RankMismatch("cannot compose: source rank " + std::to_string(f.source_rank()) +
                       " != target rank " + std::to_string(g.target_rank()));
  return LatticeMap(f.matrix() * g.matrix());
}

Sublattice kernel(const LatticeMap& f) {
  return Sublattice::generated_by(f.source_rank(), integer_kernel(f.matrix()));
}

Sublattice preimage(const LatticeMap& f, const Sublattice& m) {
  if (m.ambient_rank() != f.target_rank()) throw RankMismatch("preimage: sublattice not in target");
  LatticeProjection q = quotient_projection(f.target_rank(), saturate(m));
  return kernel(compose(q.projection, f));
}

Sublattice image(const LatticeMap& f, const Sublattice& l) {
  if (l.ambient_rank() != f.source_rank()) throw RankMismatch("image: sublattice not in source");
  std::vector<IntVector> gens;
  for (const auto& b : l.basis()) gens.push_back(f(b));
  return Sublattice::generated_by(f.target_rank(), gens);
}

LatticeProjection LatticeProjection::from_map(const LatticeMap& f) {
  if (!f.is_surjective()) throw std::invalid_argument("projection " + f.to_string() + " is not surjective");
  return {toric::kernel(f), f};
}

LatticeProjection quotient_projection(std::size_t ambient_rank, const Sublattice& l) {
  if (l.ambient_rank() != ambient_rank) throw RankMismatch("quotient: sublattice of another lattice");
  if (!l.is_primitive()) throw NotPrimitive("sublattice " + l.to_string() + " is not primitive");
  Sublattice dual = annihilator(l);
  return {l, LatticeMap(IntMatrix::from_rows(ambient_rank, dual.basis()))};
}

LatticeMap change_of_quotient_basis(const LatticeProjection& a, const LatticeProjection& b) {
  if (a.kernel != b.kernel) throw std::invalid_argument("projections have different kernels");
  return compose(b.projection, a.projection.right_inverse());
}

}  // namespace toric
