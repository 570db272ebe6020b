#pragma once

// Exact integer and rational linear algebra over Z^d: lattice points, linear
// forms, canonical (Hermite) sublattice bases and strict linear feasibility
// with integer certificates.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "pospart/error.hpp"

namespace pospart {

using Integer = mpz_class;
/// mpq_class keeps every value reduced with a positive denominator.
using Rational = mpq_class;

class LatticePoint {
public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords)
      : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);

  static LatticePoint zero(std::size_t rank);
  static LatticePoint unit(std::size_t rank, std::size_t axis);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Integer &operator[](std::size_t i) const { return coords_[i]; }
  Integer &operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer> &coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  /// gcd of the absolute values of the coordinates; 0 for the zero point.
  Integer content() const;

  LatticePoint operator-() const;
  LatticePoint &operator+=(const LatticePoint &other);
  LatticePoint &operator-=(const LatticePoint &other);
  LatticePoint &operator*=(const Integer &k);

  friend LatticePoint operator+(LatticePoint a, const LatticePoint &b) {
    return a += b;
  }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint &b) {
    return a -= b;
  }
  friend LatticePoint operator*(const Integer &k, LatticePoint a) {
    return a *= k;
  }

  friend bool operator==(const LatticePoint &a, const LatticePoint &b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticePoint &a, const LatticePoint &b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

private:
  std::vector<Integer> coords_;
};

/// A rational linear form on Q (x) Z^d, written in the dual basis.
class Covector {
public:
  Covector() = default;
  explicit Covector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto &q : coeffs_)
      q.canonicalize();
  }
  Covector(std::initializer_list<long> coeffs);

  static Covector zero(std::size_t rank);
  static Covector from_point(const LatticePoint &p);

  std::size_t rank() const noexcept { return coeffs_.size(); }
  const Rational &operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  Rational evaluate(const LatticePoint &p) const;
  /// Sign of evaluate(p), without materialising denominators when integral.
  int sign_at(const LatticePoint &p) const;

  bool is_zero() const;
  bool is_integral() const;
  /// The unique positive rescaling with coprime integer coefficients.
  /// The zero form is returned unchanged.
  Covector primitive() const;
  bool is_primitive() const;

  Covector operator-() const;
  Covector operator+(const Covector &o) const;
  Covector scaled(const Rational &k) const;

  friend bool operator==(const Covector &a, const Covector &b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const Covector &a, const Covector &b) {
    return a.coeffs_ < b.coeffs_;
  }

  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

/// Sublattice of Z^d stored by its row-style Hermite normal form: positive
/// pivots, rows ordered by pivot column, entries above each pivot reduced
/// into [0, pivot). The representation is unique, so equality is syntactic.
class Sublattice {
public:
  Sublattice() = default;

  static Sublattice full(std::size_t ambient_rank);
  static Sublattice zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<LatticePoint> &basis() const noexcept { return basis_; }
  /// Column index of the leading entry of each basis row.
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  bool contains(const LatticePoint &p) const;
  bool is_saturated() const;
  bool is_subset_of(const Sublattice &other) const;

  /// Coordinates of p in the Hermite basis, or nullopt when p is not in
  /// the sublattice.
  std::optional<std::vector<Integer>> coordinates(const LatticePoint &p) const;
  LatticePoint combine(std::span<const Integer> coords) const;

  friend bool operator==(const Sublattice &, const Sublattice &) = default;

  std::string to_string() const;

private:
  friend Sublattice hermite_basis(std::span<const LatticePoint>, std::size_t);

  std::size_t ambient_rank_ = 0;
  std::vector<LatticePoint> basis_;
  std::vector<std::size_t> pivots_;
};

Sublattice hermite_basis(std::span<const LatticePoint> rows,
                         std::size_t ambient_rank);
Sublattice hermite_basis(std::initializer_list<LatticePoint> rows,
                         std::size_t ambient_rank);

/// Smallest saturated sublattice containing s (same Q-span).
Sublattice saturate(const Sublattice &s);

/// Integer kernel {x in Z^n : M x = 0} of an m x n matrix given by rows.
/// Always saturated.
Sublattice integer_kernel(std::span<const LatticePoint> rows, std::size_t n);

/// Integer vectors orthogonal to every vector of s (a saturated lattice).
Sublattice orthogonal_lattice(const Sublattice &s);

/// {x in s : phi(x) = 0}.
Sublattice kernel_lattice(const Covector &phi, const Sublattice &s);

/// Values of phi on the Hermite basis of s, rescaled to a primitive integer
/// covector of length s.rank(). This is phi restricted to s, written in the
/// basis dual to the canonical basis, up to positive scaling.
Covector restrict_to(const Covector &phi, const Sublattice &s);

/// An ambient form psi with psi(b_j) = values[j] on the Hermite basis rows
/// b_j of s, supported on the pivot columns of s only.
Covector lift_from(const Sublattice &s, std::span<const Rational> values);

/// Some rational c with sum c_i gens[i] = target, or nullopt if target is
/// outside the Q-span of gens.
std::optional<std::vector<Rational>>
solve_in_span(std::span<const LatticePoint> gens, const LatticePoint &target,
              std::size_t ambient_rank);

struct Witness {
  Covector phi;
};

struct Certificate {
  std::vector<std::size_t> indices;
  std::vector<Integer> multipliers;
};

/// Exactly one of: a primitive integer form strictly positive on every
/// point, or a strictly positive integer combination of some points that
/// sums to zero.
struct FeasibilityVerdict {
  std::variant<Witness, Certificate> result;

  bool has_witness() const { return std::holds_alternative<Witness>(result); }
  const Witness &witness() const { return std::get<Witness>(result); }
  const Certificate &certificate() const {
    return std::get<Certificate>(result);
  }
};

bool verify_witness(std::span<const LatticePoint> points, const Covector &phi);
bool verify_certificate(std::span<const LatticePoint> points,
                        const Certificate &cert, std::size_t ambient_rank);

/// Fourier-Motzkin on the system phi(points[i]) >= 1.
FeasibilityVerdict strict_feasibility(std::span<const LatticePoint> points,
                                      std::size_t ambient_rank);

/// Strictly positive integers r with sum r_i points[i] = 0, when some real
/// strictly positive combination vanishes.
std::optional<std::vector<Integer>>
positive_rational_relation(std::span<const LatticePoint> points);

} // namespace pospart
