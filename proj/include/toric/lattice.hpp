#pragma once

#include "toric/number.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class RankMismatch : public std::invalid_argument {
 public:
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class NotPrimitive : public std::invalid_argument {
 public:
  explicit NotPrimitive(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense integer matrix stored by rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws RankMismatch if a row has the wrong length.
  static IntMatrix from_rows(std::size_t cols, std::vector<IntVector> rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  const IntVector& row(std::size_t r) const { return data_[r]; }
  const std::vector<IntVector>& row_vectors() const { return data_; }
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<IntVector> data_;
};

/// Row echelon form computed with unimodular row operations:
/// transform * input == echelon, |det transform| == 1.
/// Pivots are positive and entries above a pivot lie in [0, pivot).
struct EchelonForm {
  IntMatrix echelon;
  IntMatrix transform;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm row_echelon(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);
std::size_t rank(std::size_t cols, const std::vector<IntVector>& rows);

/// Hermite normal form of the lattice spanned by `gens` in Z^cols
/// (nonzero rows only).
std::vector<IntVector> hermite_basis(std::size_t cols, const std::vector<IntVector>& gens);

/// Basis (Hermite form) of {x in Z^cols : m x = 0}. Always saturated.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Solves a x = b over Q for a square or overdetermined consistent system;
/// returns nullopt when inconsistent. Free variables are set to zero.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b);

/// A sublattice of Z^n, stored by its Hermite basis so that equal
/// sublattices compare equal structurally.
class Sublattice {
 public:
  Sublattice() = default;
  static Sublattice generated_by(std::size_t ambient_rank, const std::vector<IntVector>& gens);
  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  /// v lies in the rational span.
  bool spans(const IntVector& v) const;
  bool is_primitive() const;

  std::string to_string() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend bool operator<(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank_ != b.ambient_rank_) return a.ambient_rank_ < b.ambient_rank_;
    return a.basis_ < b.basis_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
};

/// Smallest primitive sublattice containing `gens`.
Sublattice saturate(std::size_t ambient_rank, const std::vector<IntVector>& gens);
Sublattice saturate(const Sublattice& l);

/// Saturation of l1 + l2.
Sublattice saturated_sum(const Sublattice& l1, const Sublattice& l2);

/// {u in Z^n : <u, v> = 0 for all v in l}.
Sublattice annihilator(const Sublattice& l);

/// Homomorphism Z^source_rank -> Z^target_rank, matrix of size target x source.
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(IntMatrix matrix);
  static LatticeMap identity(std::size_t n);
  static LatticeMap zero(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector operator()(const IntVector& v) const;
  bool is_surjective() const;
  /// Some G with F * G = id. Requires surjectivity.
  LatticeMap right_inverse() const;

  std::string to_string() const;

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  std::size_t source_rank_ = 0;
  std::size_t target_rank_ = 0;
  IntMatrix matrix_;
};

/// f after g.
LatticeMap compose(const LatticeMap& f, const LatticeMap& g);

Sublattice kernel(const LatticeMap& f);

/// Saturation of f^{-1}(span of m).
Sublattice preimage(const LatticeMap& f, const Sublattice& m);

Sublattice image(const LatticeMap& f, const Sublattice& l);

struct LatticeProjection {
  Sublattice kernel;
  LatticeMap projection;

  /// Wraps an explicit surjective map; throws std::invalid_argument otherwise.
  static LatticeProjection from_map(const LatticeMap& f);
};

/// Projection Z^n -> Z^n / L. The quotient basis is the Hermite basis of
/// the annihilator of L, so the result depends on L only.
LatticeProjection quotient_projection(std::size_t ambient_rank, const Sublattice& l);

/// The unimodular map A with b.projection == A * a.projection, for two
/// projections with the same kernel.
LatticeMap change_of_quotient_basis(const LatticeProjection& a, const LatticeProjection& b);

}  // namespace toric
