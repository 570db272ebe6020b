#pragma once

// Positive parts of Z^d: subsets X with X u (-X) = Z^d, X + X in X and
// X n (-X) a subgroup. Each one is Pos(phi_1, ..., phi_r) for a flag of
// linear forms, phi_i nonzero on the lattice kernel of the earlier forms,
// with lambda in X iff (phi_1(lambda), ..., phi_r(lambda)) is >= 0 in the
// lexicographic order.

#include <cstddef>
#include <span>
#include <vector>

#include "pospart/exactlin.hpp"

namespace pospart {

struct Stage {
  /// Ambient primitive integer form. Deterministic lift of `intrinsic`.
  Covector form;
  /// Primitive form on the Hermite basis of the previous kernel.
  Covector intrinsic;
  /// Saturated kernel of this and all earlier forms.
  Sublattice kernel_after;
};

enum class Ordering3 { LT, EQ, GT };

class PositivePart {
public:
  /// The whole lattice Z^d (the empty flag).
  explicit PositivePart(std::size_t ambient_rank = 0);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<Stage> &stages() const noexcept { return stages_; }
  std::size_t depth() const noexcept { return stages_.size(); }
  bool is_whole_lattice() const noexcept { return stages_.empty(); }

  /// X n (-X).
  const Sublattice &lineality() const;
  /// The ambient stage forms, in order.
  std::vector<Covector> forms() const;

  /// Lexicographic sign of (phi_1(lambda), ..., phi_r(lambda)).
  int lex_sign(const LatticePoint &lambda) const;

  friend bool operator==(const PositivePart &a, const PositivePart &b);

private:
  friend class FlagBuilder;

  std::size_t ambient_rank_ = 0;
  std::vector<Stage> stages_;
  Sublattice whole_;
};

/// Accumulates stage forms into canonical flag form.
class FlagBuilder {
public:
  explicit FlagBuilder(std::size_t ambient_rank);

  /// Appends the form unless it vanishes on the current kernel; returns
  /// whether it was appended.
  bool push(const Covector &form);
  const Sublattice &current_kernel() const;
  PositivePart build() &&;

private:
  PositivePart part_;
};

/// Validates and canonicalises a flag. A form that vanishes on the current
/// kernel is rejected with InvalidFlag.
PositivePart make_positive_part(std::span<const Covector> forms,
                                std::size_t ambient_rank);
PositivePart make_positive_part(std::initializer_list<Covector> forms,
                                std::size_t ambient_rank);

bool contains(const PositivePart &x, const LatticePoint &lambda);
/// Membership in X+ = X \ (-X).
bool strictly_contains(const PositivePart &x, const LatticePoint &lambda);
PositivePart negate(const PositivePart &x);
/// EQ iff mu - lambda is in the lineality, LT iff mu - lambda is in X+.
Ordering3 compare(const PositivePart &x, const LatticePoint &lambda,
                  const LatticePoint &mu);

Sublattice lineality(const PositivePart &x);
/// Leading form: the primitive phi with X in Pos(phi); zero for Z^d.
Covector pi(const PositivePart &x);
PositivePart pos_of_form(const Covector &phi);

/// X u Pos+(phi) for a positive part X of Ker(phi) n Z^d, the latter
/// given in coordinates of its Hermite basis.
PositivePart fiber_embed(const Covector &phi, const PositivePart &xk);
/// Y n Ker(pi(Y)), in coordinates of the kernel's Hermite basis.
PositivePart fiber_project(const PositivePart &y);

/// Integer matrix of a homomorphism Z^cols -> Z^rows, row-major.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose rows are the given points.
  static IntMatrix from_rows(std::span<const LatticePoint> rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Integer &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const std::vector<Integer> &data() const noexcept { return data_; }

  LatticePoint apply(const LatticePoint &p) const;
  /// phi o M, a form on Z^cols.
  Covector pull(const Covector &phi) const;
  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// sigma^{-1}(X) for sigma : Z^cols -> Z^rows. Compositions that vanish on
/// the current kernel are skipped.
PositivePart pullback(const IntMatrix &sigma, const PositivePart &x);

bool is_total_order(const PositivePart &x);
bool equals(const PositivePart &x, const PositivePart &y);
/// Z, Z>=0, Z<=0. Only rank 1 is accepted.
std::vector<PositivePart> enumerate_rank1(std::size_t ambient_rank = 1);

} // namespace pospart
