#pragma once

// Basic opens U(E) = {X : X n E = empty} and V(E) = {phi : phi(E) < 0} for
// finite E, decided exactly through the Gordan alternative.

#include <optional>
#include <span>
#include <vector>

#include "pospart/exactlin.hpp"
#include "pospart/positive.hpp"

namespace pospart {

/// Finite subset of Z^d: duplicates removed, first occurrence order kept.
class FinitePointSet {
public:
  explicit FinitePointSet(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}
  FinitePointSet(std::size_t ambient_rank, std::span<const LatticePoint> points);
  FinitePointSet(std::size_t ambient_rank,
                 std::initializer_list<LatticePoint> points);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<LatticePoint> &points() const noexcept { return points_; }
  const LatticePoint &operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Returns false when the point was already present.
  bool insert(const LatticePoint &p);
  FinitePointSet united(const FinitePointSet &other) const;
  FinitePointSet image(const IntMatrix &sigma) const;
  FinitePointSet negated() const;

private:
  std::size_t ambient_rank_;
  std::vector<LatticePoint> points_;
};

bool in_U(const PositivePart &x, const FinitePointSet &e);

/// Either U(E) is empty, with a zero-sum positive integer combination of
/// points of E, or it contains the single-stage witness Pos(-phi) where
/// phi is positive on E.
struct UClassification {
  std::optional<Certificate> certificate;
  std::optional<PositivePart> witness;
  /// Form negative on all of E (present with the witness).
  std::optional<Covector> separating_form;

  bool empty() const { return certificate.has_value(); }
};

UClassification U_classify(const FinitePointSet &e);
std::optional<Covector> separating_form(const FinitePointSet &e);

/// Membership in the closure of U(E): -lambda in X for every lambda in E.
/// Only defined when U(E) is nonempty.
bool in_closure_U(const PositivePart &x, const FinitePointSet &e);

bool in_V(const Covector &phi, const FinitePointSet &e);

/// Whether X lies in every neighbourhood of Pos(phi), i.e. pi(X) = phi up
/// to positive scaling.
bool in_every_neighborhood_of_pos(const PositivePart &x, const Covector &phi);

} // namespace pospart
