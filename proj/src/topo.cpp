#include "pospart/topo.hpp"

#include <algorithm>
#include <stdexcept>

namespace pospart {

FinitePointSet::FinitePointSet(std::size_t ambient_rank,
                               std::span<const LatticePoint> points)
    : ambient_rank_(ambient_rank) {
  for (const auto &p : points)
    insert(p);
}

FinitePointSet::FinitePointSet(std::size_t ambient_rank,
                               std::initializer_list<LatticePoint> points)
    : FinitePointSet(ambient_rank,
                     std::span<const LatticePoint>(points.begin(), points.size())) {}

bool FinitePointSet::insert(const LatticePoint &p) {
  require_rank(ambient_rank_, p.rank(), "FinitePointSet");
  if (std::find(points_.begin(), points_.end(), p) != points_.end())
    return false;
  points_.push_back(p);
  return true;
}

FinitePointSet FinitePointSet::united(const FinitePointSet &other) const {
  require_rank(ambient_rank_, other.ambient_rank_, "FinitePointSet union");
  FinitePointSet out = *this;
  for (const auto &p : other.points_)
    out.insert(p);
  return out;
}

FinitePointSet FinitePointSet::image(const IntMatrix &sigma) const {
  require_rank(sigma.cols(), ambient_rank_, "FinitePointSet image");
  FinitePointSet out(sigma.rows());
  for (const auto &p : points_)
    out.insert(sigma.apply(p));
  return out;
}

FinitePointSet FinitePointSet::negated() const {
  FinitePointSet out(ambient_rank_);
  for (const auto &p : points_)
    out.insert(-p);
  return out;
}

bool in_U(const PositivePart &x, const FinitePointSet &e) {
  require_rank(x.ambient_rank(), e.ambient_rank(), "in_U");
  return std::none_of(e.begin(), e.end(),
                      [&](const LatticePoint &p) { return contains(x, p); });
}

UClassification U_classify(const FinitePointSet &e) {
  const auto verdict = strict_feasibility(e.points(), e.ambient_rank());
  UClassification out;
  if (!verdict.has_witness()) {
    out.certificate = verdict.certificate();
    return out;
  }
  Covector negative = -verdict.witness().phi;
  PositivePart witness = pos_of_form(negative);
  if (!in_U(witness, e))
    throw std::logic_error("U_classify: witness meets E");
  out.witness = std::move(witness);
  out.separating_form = std::move(negative);
  return out;
}

std::optional<Covector> separating_form(const FinitePointSet &e) {
  return U_classify(e).separating_form;
}

bool in_closure_U(const PositivePart &x, const FinitePointSet &e) {
  require_rank(x.ambient_rank(), e.ambient_rank(), "in_closure_U");
  if (U_classify(e).empty())
    throw_error(ErrorKind::PreconditionViolated,
                "in_closure_U: U(E) is empty, the closure formula does not apply");
  return std::all_of(e.begin(), e.end(),
                     [&](const LatticePoint &p) { return contains(x, -p); });
}

bool in_V(const Covector &phi, const FinitePointSet &e) {
  require_rank(phi.rank(), e.ambient_rank(), "in_V");
  return std::all_of(e.begin(), e.end(),
                     [&](const LatticePoint &p) { return phi.sign_at(p) < 0; });
}

bool in_every_neighborhood_of_pos(const PositivePart &x, const Covector &phi) {
  require_rank(x.ambient_rank(), phi.rank(), "in_every_neighborhood_of_pos");
  if (phi.is_zero())
    throw_error(ErrorKind::InvalidArgument,
                "in_every_neighborhood_of_pos: zero form");
  return pi(x) == phi.primitive();
}

} // namespace pospart
