#include "pospart/arrange.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pospart {
namespace {

LatticePoint normalize_normal(const LatticePoint &lambda) {
  if (lambda.is_zero())
    throw_error(ErrorKind::InvalidArgument, "hyperplane normal must be nonzero");
  LatticePoint out = lambda;
  const Integer g = lambda.content();
  for (std::size_t i = 0; i < out.rank(); ++i)
    out[i] /= g;
  for (const auto &x : out)
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        out = -out;
      break;
    }
  return out;
}

void check_signs(const SignVector &s, const Arrangement &a) {
  require_rank(a.size(), s.size(), "sign vector");
  for (int v : s)
    if (v < -1 || v > 1)
      throw_error(ErrorKind::InvalidArgument,
                  "sign vector entries must be -1, 0 or 1");
}

// Leq on sign vectors: each entry of `low` equals that of `high` or is 0.
bool sign_leq(const SignVector &low, const SignVector &high) {
  for (std::size_t i = 0; i < low.size(); ++i)
    if (low[i] != 0 && low[i] != high[i])
      return false;
  return true;
}

} // namespace

RationalHyperplane::RationalHyperplane(const LatticePoint &normal)
    : normal_(normalize_normal(normal)) {}

Arrangement::Arrangement(std::size_t ambient_rank,
                         std::span<const LatticePoint> normals)
    : ambient_rank_(ambient_rank) {
  for (const auto &n : normals) {
    require_rank(ambient_rank, n.rank(), "Arrangement");
    RationalHyperplane h(n);
    if (std::find(hyperplanes_.begin(), hyperplanes_.end(), h) ==
        hyperplanes_.end())
      hyperplanes_.push_back(std::move(h));
  }
}

Arrangement::Arrangement(std::size_t ambient_rank,
                         std::initializer_list<LatticePoint> normals)
    : Arrangement(ambient_rank,
                  std::span<const LatticePoint>(normals.begin(), normals.size())) {}

Arrangement Arrangement::prefix(std::size_t n) const {
  Arrangement out;
  out.ambient_rank_ = ambient_rank_;
  out.hyperplanes_.assign(hyperplanes_.begin(),
                          hyperplanes_.begin() +
                              static_cast<std::ptrdiff_t>(std::min(n, size())));
  return out;
}

bool Facet::is_chamber() const {
  return std::none_of(signs.begin(), signs.end(), [](int v) { return v == 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> FacePoset::cover_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = facets.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j])
        continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j])
          covered = false;
      if (covered)
        edges.emplace_back(i, j);
    }
  return edges;
}

int sign_of(const PositivePart &x, const LatticePoint &lambda) {
  if (lambda.is_zero())
    throw_error(ErrorKind::InvalidArgument, "sign_of: zero normal");
  return x.lex_sign(lambda);
}

bool in_L(const PositivePart &x, const FinitePointSet &e) {
  require_rank(x.ambient_rank(), e.ambient_rank(), "in_L");
  return std::all_of(e.begin(), e.end(),
                     [&](const LatticePoint &p) { return x.lex_sign(p) == 0; });
}

SignVector facet_of(const PositivePart &x, const Arrangement &a) {
  require_rank(a.ambient_rank(), x.ambient_rank(), "facet_of");
  SignVector s;
  s.reserve(a.size());
  for (const auto &h : a.hyperplanes())
    s.push_back(sign_of(x, h.normal()));
  return s;
}

SignSplit split_signs(const SignVector &s, const Arrangement &a) {
  check_signs(s, a);
  SignSplit out{FinitePointSet(a.ambient_rank()),
                FinitePointSet(a.ambient_rank())};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto &n = a[i].normal();
    if (s[i] == 0)
      out.zero_normals.insert(n);
    else if (s[i] > 0)
      out.excluded.insert(-n);
    else
      out.excluded.insert(n);
  }
  return out;
}

QuotientMap quotient_lattice(const FinitePointSet &e) {
  const std::size_t d = e.ambient_rank();
  QuotientMap q;
  q.kernel = saturate(hermite_basis(e.points(), d));
  const Sublattice dual = orthogonal_lattice(q.kernel);
  q.rank = dual.rank();
  q.projection = IntMatrix::from_rows(dual.basis(), d);
  return q;
}

std::optional<Facet> realizable(const SignVector &s, const Arrangement &a) {
  const SignSplit split = split_signs(s, a);
  const QuotientMap q = quotient_lattice(split.zero_normals);
  const UClassification verdict =
      U_classify(split.excluded.image(q.projection));
  if (verdict.empty())
    return std::nullopt;
  Facet f;
  f.signs = s;
  f.witness = pullback(q.projection, *verdict.witness);
  f.dim = a.ambient_rank() - q.kernel.rank();
  f.support_lattice = q.kernel;
  if (facet_of(f.witness, a) != s)
    throw std::logic_error("realizable: witness does not realise signs");
  return f;
}

std::vector<Facet> enumerate_facets(const Arrangement &a) {
  if (a.size() > kMaxEnumeratedHyperplanes)
    throw_error(ErrorKind::GuardExceeded,
                "enumerate_facets: " + std::to_string(a.size()) +
                    " hyperplanes exceeds the limit of " +
                    std::to_string(kMaxEnumeratedHyperplanes));
  std::vector<Arrangement> prefixes;
  for (std::size_t i = 0; i <= a.size(); ++i)
    prefixes.push_back(a.prefix(i));

  // Depth-first over prefixes: a sign vector that no positive part realises
  // on the first k hyperplanes has no realisable extension.
  std::vector<Facet> out;
  SignVector partial;
  auto recurse = [&](auto &self) -> void {
    const std::size_t k = partial.size();
    if (k == a.size()) {
      if (auto f = realizable(partial, a))
        out.push_back(std::move(*f));
      return;
    }
    for (int v : {-1, 0, 1}) {
      partial.push_back(v);
      if (k + 1 == a.size() || realizable(partial, prefixes[k + 1]))
        self(self);
      partial.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

bool closure_leq(const SignVector &low, const SignVector &high,
                 const Arrangement &a) {
  check_signs(low, a);
  check_signs(high, a);
  if (!realizable(low, a) || !realizable(high, a))
    throw_error(ErrorKind::PreconditionViolated,
                "closure_leq: sign vector is not realisable");
  return sign_leq(low, high);
}

FacePoset face_poset(const Arrangement &a) {
  FacePoset poset;
  poset.facets = enumerate_facets(a);
  const std::size_t n = poset.facets.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      poset.leq[i][j] = sign_leq(poset.facets[i].signs, poset.facets[j].signs);

  for (std::size_t i = 0; i < n; ++i) {
    if (!poset.leq[i][i])
      throw std::logic_error("face_poset: not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && poset.leq[i][j] && poset.leq[j][i])
        throw std::logic_error("face_poset: not antisymmetric");
      if (!poset.leq[i][j])
        continue;
      for (std::size_t k = 0; k < n; ++k)
        if (poset.leq[j][k] && !poset.leq[i][k])
          throw std::logic_error("face_poset: not transitive");
    }
  }
  return poset;
}

} // namespace pospart
