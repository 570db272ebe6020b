#pragma once

// Central rational hyperplane arrangements in the space of positive parts:
// H_lambda = {X : lambda in X n (-X)}, sign vectors, facets, chambers and the
// closure order between facets.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pospart/exactlin.hpp"
#include "pospart/positive.hpp"
#include "pospart/topo.hpp"

namespace pospart {

/// H_lambda, stored by its primitive normal with first nonzero coordinate
/// positive, so H_lambda = H_{r lambda} = H_{-lambda} share one value.
class RationalHyperplane {
public:
  explicit RationalHyperplane(const LatticePoint &normal);

  const LatticePoint &normal() const noexcept { return normal_; }
  std::size_t ambient_rank() const noexcept { return normal_.rank(); }

  friend bool operator==(const RationalHyperplane &,
                         const RationalHyperplane &) = default;

private:
  LatticePoint normal_;
};

class Arrangement {
public:
  /// Duplicate hyperplanes collapse onto their first occurrence.
  Arrangement(std::size_t ambient_rank, std::span<const LatticePoint> normals);
  Arrangement(std::size_t ambient_rank,
              std::initializer_list<LatticePoint> normals);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t size() const noexcept { return hyperplanes_.size(); }
  const RationalHyperplane &operator[](std::size_t i) const {
    return hyperplanes_[i];
  }
  const std::vector<RationalHyperplane> &hyperplanes() const noexcept {
    return hyperplanes_;
  }
  /// The first n hyperplanes.
  Arrangement prefix(std::size_t n) const;

private:
  Arrangement() = default;

  std::size_t ambient_rank_ = 0;
  std::vector<RationalHyperplane> hyperplanes_;
};

/// Entries in {-1, 0, +1}, indexed like the arrangement.
using SignVector = std::vector<int>;

struct Facet {
  SignVector signs;
  /// Saturated span of the normals with sign 0.
  Sublattice support_lattice;
  std::size_t dim = 0;
  PositivePart witness;

  std::size_t codim() const { return witness.ambient_rank() - dim; }
  bool is_chamber() const;
};

struct FacePoset {
  std::vector<Facet> facets;
  /// leq[i][j] iff facets[i] lies in the closure of facets[j].
  std::vector<std::vector<bool>> leq;

  /// Covering pairs (i, j) of the strict order.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;
};

/// Maximum arrangement size accepted by the exhaustive enumerations.
inline constexpr std::size_t kMaxEnumeratedHyperplanes = 12;

/// +1 when lambda is in X+, 0 when lambda is in the lineality, -1 when
/// lambda is not in X.
int sign_of(const PositivePart &x, const LatticePoint &lambda);

/// X in L(E): every point of E lies in the lineality of X.
bool in_L(const PositivePart &x, const FinitePointSet &e);

SignVector facet_of(const PositivePart &x, const Arrangement &a);

/// The two point sets of a sign vector: normals with sign 0 (the facet lies
/// in their hyperplanes) and the points a member must avoid (-lambda for
/// sign +1, lambda for sign -1). The facet is L(zero) n U(excluded).
struct SignSplit {
  FinitePointSet zero_normals;
  FinitePointSet excluded;
};
SignSplit split_signs(const SignVector &s, const Arrangement &a);

/// Z^d / Lambda(E) with its canonical basis: the projection is surjective
/// with kernel exactly the saturated span of E.
struct QuotientMap {
  std::size_t rank = 0;
  IntMatrix projection{0, 0};
  Sublattice kernel;
};
QuotientMap quotient_lattice(const FinitePointSet &e);

std::optional<Facet> realizable(const SignVector &s, const Arrangement &a);

/// All facets, in ascending lexicographic order of sign vectors.
std::vector<Facet> enumerate_facets(const Arrangement &a);

/// Whether F(low) lies in the closure of F(high).
bool closure_leq(const SignVector &low, const SignVector &high,
                 const Arrangement &a);

FacePoset face_poset(const Arrangement &a);

} // namespace pospart
