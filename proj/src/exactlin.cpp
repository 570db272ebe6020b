#include "pospart/exactlin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pospart {
namespace {

using Row = std::vector<Integer>;

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(Row &dst, const Integer &k, const Row &src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] -= k * src[i];
}

// Brings rows into Hermite form on the leading `ncols` columns. Row
// operations act on whole rows, so trailing columns record the unimodular
// transform when the caller appends an identity block. Returns the pivot
// columns; rows past pivots.size() vanish on the leading columns.
std::vector<std::size_t> echelonize(std::vector<Row> &rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    bool found = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0)
          continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))
          best = i;
      }
      if (best == rows.size())
        break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0)
          continue;
        axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
        if (sgn(rows[i][col]) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!found)
      continue;
    if (sgn(rows[r][col]) < 0)
      for (auto &x : rows[r])
        x = -x;
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(rows[i][col]) != 0)
        axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto &x : xs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Positive rescaling of a rational vector to coprime integers.
std::vector<Integer> primitive_integers(std::span<const Rational> xs) {
  const Integer l = lcm_of_denominators(xs);
  std::vector<Integer> out;
  out.reserve(xs.size());
  Integer g = 0;
  for (const auto &x : xs) {
    Integer v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto &v : out)
      v /= g;
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// LatticePoint

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords)
    coords_.emplace_back(c);
}

LatticePoint LatticePoint::zero(std::size_t rank) {
  return LatticePoint(std::vector<Integer>(rank, 0));
}

LatticePoint LatticePoint::unit(std::size_t rank, std::size_t axis) {
  auto p = zero(rank);
  p[axis] = 1;
  return p;
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Integer &x) { return sgn(x) == 0; });
}

Integer LatticePoint::content() const {
  Integer g = 0;
  for (const auto &x : coords_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint out = *this;
  for (auto &x : out.coords_)
    x = -x;
  return out;
}

LatticePoint &LatticePoint::operator+=(const LatticePoint &other) {
  require_rank(rank(), other.rank(), "LatticePoint +");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint &LatticePoint::operator-=(const LatticePoint &other) {
  require_rank(rank(), other.rank(), "LatticePoint -");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] -= other.coords_[i];
  return *this;
}

LatticePoint &LatticePoint::operator*=(const Integer &k) {
  for (auto &x : coords_)
    x *= k;
  return *this;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Covector

Covector::Covector(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs)
    coeffs_.emplace_back(c);
}

Covector Covector::zero(std::size_t rank) {
  return Covector(std::vector<Rational>(rank, 0));
}

Covector Covector::from_point(const LatticePoint &p) {
  std::vector<Rational> c;
  c.reserve(p.rank());
  for (const auto &x : p)
    c.emplace_back(x);
  return Covector(std::move(c));
}

Rational Covector::evaluate(const LatticePoint &p) const {
  require_rank(rank(), p.rank(), "Covector::evaluate");
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(p[i]) != 0)
      sum += coeffs_[i] * p[i];
  return sum;
}

int Covector::sign_at(const LatticePoint &p) const {
  require_rank(rank(), p.rank(), "Covector::sign_at");
  if (is_integral()) {
    Integer sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      sum += coeffs_[i].get_num() * p[i];
    return sgn(sum);
  }
  return sgn(evaluate(p));
}

bool Covector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &x) { return sgn(x) == 0; });
}

bool Covector::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &x) { return x.get_den() == 1; });
}

Covector Covector::primitive() const {
  if (is_zero())
    return *this;
  auto ints = primitive_integers(coeffs_);
  std::vector<Rational> out(ints.begin(), ints.end());
  return Covector(std::move(out));
}

bool Covector::is_primitive() const {
  return !is_zero() && primitive() == *this;
}

Covector Covector::operator-() const {
  Covector out = *this;
  for (auto &x : out.coeffs_)
    x = -x;
  return out;
}

Covector Covector::operator+(const Covector &o) const {
  require_rank(rank(), o.rank(), "Covector +");
  Covector out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] += o.coeffs_[i];
  return out;
}

Covector Covector::scaled(const Rational &k) const {
  Covector out = *this;
  for (auto &x : out.coeffs_)
    x *= k;
  return out;
}

std::string Covector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    os << (i ? "," : "") << coeffs_[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Sublattice

Sublattice Sublattice::full(std::size_t ambient_rank) {
  std::vector<LatticePoint> rows;
  for (std::size_t i = 0; i < ambient_rank; ++i)
    rows.push_back(LatticePoint::unit(ambient_rank, i));
  return hermite_basis(rows, ambient_rank);
}

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  return hermite_basis(std::span<const LatticePoint>{}, ambient_rank);
}

std::optional<std::vector<Integer>>
Sublattice::coordinates(const LatticePoint &p) const {
  require_rank(ambient_rank_, p.rank(), "Sublattice::coordinates");
  LatticePoint rest = p;
  std::vector<Integer> coords(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const Integer &piv = basis_[j][pivots_[j]];
    if (!mpz_divisible_p(rest[pivots_[j]].get_mpz_t(), piv.get_mpz_t()))
      return std::nullopt;
    coords[j] = rest[pivots_[j]] / piv;
    if (sgn(coords[j]) != 0)
      rest -= coords[j] * basis_[j];
  }
  if (!rest.is_zero())
    return std::nullopt;
  return coords;
}

bool Sublattice::contains(const LatticePoint &p) const {
  return coordinates(p).has_value();
}

LatticePoint Sublattice::combine(std::span<const Integer> coords) const {
  require_rank(basis_.size(), coords.size(), "Sublattice::combine");
  auto out = LatticePoint::zero(ambient_rank_);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (sgn(coords[j]) != 0)
      out += coords[j] * basis_[j];
  return out;
}

bool Sublattice::is_saturated() const { return saturate(*this) == *this; }

bool Sublattice::is_subset_of(const Sublattice &other) const {
  if (ambient_rank_ != other.ambient_rank_)
    return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const LatticePoint &b) { return other.contains(b); });
}

std::string Sublattice::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t j = 0; j < basis_.size(); ++j)
    os << (j ? "," : "") << basis_[j].to_string();
  os << "} in Z^" << ambient_rank_;
  return os.str();
}

Sublattice hermite_basis(std::span<const LatticePoint> rows,
                         std::size_t ambient_rank) {
  std::vector<Row> work;
  work.reserve(rows.size());
  for (const auto &r : rows) {
    require_rank(ambient_rank, r.rank(), "hermite_basis");
    work.push_back(r.coords());
  }
  auto pivots = echelonize(work, ambient_rank);
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  s.pivots_ = pivots;
  for (std::size_t j = 0; j < pivots.size(); ++j)
    s.basis_.emplace_back(std::move(work[j]));
  return s;
}

Sublattice hermite_basis(std::initializer_list<LatticePoint> rows,
                         std::size_t ambient_rank) {
  return hermite_basis(std::span<const LatticePoint>(rows.begin(), rows.size()),
                       ambient_rank);
}

Sublattice integer_kernel(std::span<const LatticePoint> rows, std::size_t n) {
  const std::size_t m = rows.size();
  for (const auto &r : rows)
    require_rank(n, r.rank(), "integer_kernel");
  // Row j of the transposed system carries column j of M followed by e_j.
  std::vector<Row> aug(n, Row(m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      aug[j][i] = rows[i][j];
    aug[j][m + j] = 1;
  }
  const std::size_t r = echelonize(aug, m).size();
  std::vector<LatticePoint> kernel;
  for (std::size_t j = r; j < n; ++j)
    kernel.emplace_back(Row(aug[j].begin() + static_cast<std::ptrdiff_t>(m),
                            aug[j].end()));
  return hermite_basis(kernel, n);
}

Sublattice orthogonal_lattice(const Sublattice &s) {
  return integer_kernel(s.basis(), s.ambient_rank());
}

Sublattice saturate(const Sublattice &s) {
  return integer_kernel(orthogonal_lattice(s).basis(), s.ambient_rank());
}

Sublattice kernel_lattice(const Covector &phi, const Sublattice &s) {
  require_rank(s.ambient_rank(), phi.rank(), "kernel_lattice");
  std::vector<Rational> values;
  values.reserve(s.rank());
  for (const auto &b : s.basis())
    values.push_back(phi.evaluate(b));
  if (std::all_of(values.begin(), values.end(),
                  [](const Rational &v) { return sgn(v) == 0; }))
    return s;
  const LatticePoint constraint(primitive_integers(values));
  const Sublattice coeffs =
      integer_kernel(std::span<const LatticePoint>(&constraint, 1), s.rank());
  std::vector<LatticePoint> rows;
  for (const auto &c : coeffs.basis())
    rows.push_back(s.combine(c.coords()));
  return hermite_basis(rows, s.ambient_rank());
}

Covector restrict_to(const Covector &phi, const Sublattice &s) {
  require_rank(s.ambient_rank(), phi.rank(), "restrict_to");
  std::vector<Rational> values;
  values.reserve(s.rank());
  for (const auto &b : s.basis())
    values.push_back(phi.evaluate(b));
  return Covector(std::move(values)).primitive();
}

Covector lift_from(const Sublattice &s, std::span<const Rational> values) {
  require_rank(s.rank(), values.size(), "lift_from");
  std::vector<Rational> psi(s.ambient_rank(), 0);
  const auto &basis = s.basis();
  const auto &piv = s.pivots();
  // Row j vanishes left of pivot j, so the pivot block is upper triangular.
  for (std::size_t j = s.rank(); j-- > 0;) {
    Rational rest = values[j];
    for (std::size_t l = j + 1; l < s.rank(); ++l)
      rest -= psi[piv[l]] * basis[j][piv[l]];
    psi[piv[j]] = rest / basis[j][piv[j]];
  }
  return Covector(std::move(psi));
}

std::optional<std::vector<Rational>>
solve_in_span(std::span<const LatticePoint> gens, const LatticePoint &target,
              std::size_t ambient_rank) {
  require_rank(ambient_rank, target.rank(), "solve_in_span");
  const std::size_t m = gens.size();
  std::vector<std::vector<Rational>> a(ambient_rank,
                                       std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      require_rank(ambient_rank, gens[j].rank(), "solve_in_span");
      a[i][j] = gens[j][i];
    }
    a[i][m] = target[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < ambient_rank; ++col) {
    std::size_t p = r;
    while (p < ambient_rank && sgn(a[p][col]) == 0)
      ++p;
    if (p == ambient_rank)
      continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][col];
    for (auto &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      if (i == r || sgn(a[i][col]) == 0)
        continue;
      const Rational f = a[i][col];
      for (std::size_t k = col; k <= m; ++k)
        a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < ambient_rank; ++i)
    if (sgn(a[i][m]) != 0)
      return std::nullopt;
  std::vector<Rational> x(m, 0);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_cols[i]] = a[i][m];
  return x;
}

// ---------------------------------------------------------------------------
// Feasibility

bool verify_witness(std::span<const LatticePoint> points, const Covector &phi) {
  return std::all_of(points.begin(), points.end(), [&](const LatticePoint &p) {
    return phi.sign_at(p) > 0;
  });
}

bool verify_certificate(std::span<const LatticePoint> points,
                        const Certificate &cert, std::size_t ambient_rank) {
  if (cert.indices.empty() || cert.indices.size() != cert.multipliers.size())
    return false;
  auto sum = LatticePoint::zero(ambient_rank);
  for (std::size_t k = 0; k < cert.indices.size(); ++k) {
    if (cert.indices[k] >= points.size() || cert.multipliers[k] < 1)
      return false;
    if (k > 0 && cert.indices[k] <= cert.indices[k - 1])
      return false;
    sum += cert.multipliers[k] * points[cert.indices[k]];
  }
  return sum.is_zero();
}

namespace {

// a . phi >= 1 with a = sum_i y_i points[i] and sum_i y_i = 1.
struct Inequality {
  std::vector<Rational> a;
  std::vector<Rational> y;
  std::size_t support = 0;
};

bool all_zero(const std::vector<Rational> &v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational &x) { return sgn(x) == 0; });
}

Certificate certificate_from(const Inequality &row) {
  Certificate cert;
  std::vector<Rational> ys;
  for (std::size_t i = 0; i < row.y.size(); ++i)
    if (sgn(row.y[i]) > 0) {
      cert.indices.push_back(i);
      ys.push_back(row.y[i]);
    }
  cert.multipliers = primitive_integers(ys);
  return cert;
}

// Value in [lower, upper] closest to zero, preferring integers.
Rational pick_value(const std::optional<Rational> &lower,
                    const std::optional<Rational> &upper) {
  auto ceil_of = [](const Rational &q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
  };
  auto floor_of = [](const Rational &q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
  };
  if (lower && upper) {
    if (sgn(*lower) <= 0 && sgn(*upper) >= 0)
      return 0;
    if (sgn(*lower) > 0) {
      Rational c = ceil_of(*lower);
      return c <= *upper ? c : (*lower + *upper) / 2;
    }
    Rational f = floor_of(*upper);
    return f >= *lower ? f : (*lower + *upper) / 2;
  }
  if (lower)
    return sgn(*lower) <= 0 ? Rational(0) : ceil_of(*lower);
  if (upper)
    return sgn(*upper) >= 0 ? Rational(0) : floor_of(*upper);
  return 0;
}

} // namespace

FeasibilityVerdict strict_feasibility(std::span<const LatticePoint> points,
                                      std::size_t ambient_rank) {
  const std::size_t n = points.size();
  const std::size_t d = ambient_rank;

  std::vector<Inequality> system;
  system.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_rank(d, points[i].rank(), "strict_feasibility");
    Inequality row;
    row.a.assign(points[i].begin(), points[i].end());
    row.y.assign(n, 0);
    row.y[i] = 1;
    row.support = 1;
    if (all_zero(row.a))
      return {certificate_from(row)};
    system.push_back(std::move(row));
  }

  std::vector<bool> eliminated(d, false);
  std::vector<std::size_t> order;
  std::vector<std::vector<Inequality>> history;

  for (std::size_t step = 0; step < d; ++step) {
    // Variable with the fewest generated pairs; ties go to the lowest index.
    std::size_t var = d;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < d; ++v) {
      if (eliminated[v])
        continue;
      std::size_t pos = 0, neg = 0;
      for (const auto &row : system) {
        const int s = sgn(row.a[v]);
        pos += s > 0;
        neg += s < 0;
      }
      const std::size_t cost = pos * neg;
      if (var == d || cost < best_cost) {
        var = v;
        best_cost = cost;
      }
    }
    eliminated[var] = true;
    order.push_back(var);

    std::vector<Inequality> next;
    std::map<std::vector<Rational>, std::size_t> seen;
    auto keep = [&](Inequality row) {
      if (seen.emplace(row.a, next.size()).second)
        next.push_back(std::move(row));
    };
    std::vector<const Inequality *> pos, neg;
    for (const auto &row : system) {
      const int s = sgn(row.a[var]);
      if (s > 0)
        pos.push_back(&row);
      else if (s < 0)
        neg.push_back(&row);
      else
        keep(row);
    }
    for (const auto *p : pos) {
      for (const auto *q : neg) {
        const Rational wp = -q->a[var];
        const Rational wq = p->a[var];
        Inequality row;
        row.a.resize(d);
        row.y.resize(n);
        const Rational rhs = wp + wq;
        for (std::size_t k = 0; k < d; ++k)
          row.a[k] = (wp * p->a[k] + wq * q->a[k]) / rhs;
        row.a[var] = 0;
        for (std::size_t k = 0; k < n; ++k) {
          row.y[k] = (wp * p->y[k] + wq * q->y[k]) / rhs;
          row.support += sgn(row.y[k]) > 0;
        }
        // Chernikov: after t eliminations a row built from more than t + 1
        // original inequalities is implied by the others.
        if (row.support > step + 2)
          continue;
        keep(std::move(row));
      }
    }
    for (const auto &row : next)
      if (all_zero(row.a)) {
        Certificate cert = certificate_from(row);
        if (!verify_certificate(points, cert, d))
          throw std::logic_error("strict_feasibility: bad certificate");
        return {std::move(cert)};
      }
    history.push_back(std::move(system));
    system = std::move(next);
  }

  std::vector<Rational> phi(d, 0);
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t var = order[k];
    std::optional<Rational> lower, upper;
    for (const auto &row : history[k]) {
      const int s = sgn(row.a[var]);
      if (s == 0)
        continue;
      Rational rest = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != var && sgn(row.a[j]) != 0)
          rest -= row.a[j] * phi[j];
      const Rational bound = rest / row.a[var];
      if (s > 0) {
        if (!lower || bound > *lower)
          lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    phi[var] = pick_value(lower, upper);
  }

  Covector witness = Covector(std::move(phi)).primitive();
  if (!verify_witness(points, witness))
    throw std::logic_error("strict_feasibility: bad witness");
  return {Witness{std::move(witness)}};
}

std::optional<std::vector<Integer>>
positive_rational_relation(std::span<const LatticePoint> points) {
  if (points.empty())
    throw_error(ErrorKind::InvalidArgument,
                "positive_rational_relation: empty point list");
  const std::size_t n = points.size();
  const std::size_t d = points[0].rank();
  for (const auto &p : points)
    require_rank(d, p.rank(), "positive_rational_relation");

  // `covered` holds indices already carried by a relation; `relation` is a
  // strictly positive integer relation on exactly those indices. Points of
  // the remaining set enter a relation iff their images in the quotient by
  // the span of the covered points do.
  std::vector<bool> covered(n, false);
  std::vector<Integer> relation(n, 0);
  for (;;) {
    std::vector<std::size_t> rest_idx, done_idx;
    std::vector<LatticePoint> done_pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (covered[i]) {
        done_idx.push_back(i);
        done_pts.push_back(points[i]);
      } else {
        rest_idx.push_back(i);
      }
    }
    if (rest_idx.empty())
      return relation;

    const Sublattice span = saturate(hermite_basis(done_pts, d));
    const Sublattice dual = orthogonal_lattice(span);
    std::vector<LatticePoint> projected;
    for (std::size_t i : rest_idx) {
      std::vector<Integer> img;
      for (const auto &row : dual.basis()) {
        Integer v = 0;
        for (std::size_t k = 0; k < d; ++k)
          v += row[k] * points[i][k];
        img.push_back(std::move(v));
      }
      projected.emplace_back(std::move(img));
    }
    const auto verdict = strict_feasibility(projected, dual.rank());
    if (verdict.has_witness())
      return std::nullopt;

    const auto &cert = verdict.certificate();
    auto w = LatticePoint::zero(d);
    for (std::size_t k = 0; k < cert.indices.size(); ++k)
      w += cert.multipliers[k] * points[rest_idx[cert.indices[k]]];
    std::vector<Rational> coeff(n, 0);
    for (std::size_t k = 0; k < cert.indices.size(); ++k)
      coeff[rest_idx[cert.indices[k]]] = cert.multipliers[k];
    if (!done_idx.empty()) {
      auto c = solve_in_span(done_pts, -w, d);
      if (!c)
        throw std::logic_error("positive_rational_relation: lost span");
      // Shift along the existing relation until every coefficient is > 0.
      Rational t = 0;
      for (std::size_t k = 0; k < done_idx.size(); ++k) {
        const Rational need = (1 - (*c)[k]) / relation[done_idx[k]];
        if (need > t)
          t = need;
      }
      for (std::size_t k = 0; k < done_idx.size(); ++k)
        coeff[done_idx[k]] = (*c)[k] + t * relation[done_idx[k]];
    } else if (!w.is_zero()) {
      throw std::logic_error("positive_rational_relation: nonzero sum");
    }
    relation = primitive_integers(coeff);
    for (std::size_t i = 0; i < n; ++i)
      covered[i] = sgn(relation[i]) > 0;

    auto sum = LatticePoint::zero(d);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(relation[i]) != 0)
        sum += relation[i] * points[i];
    if (!sum.is_zero())
      throw std::logic_error("positive_rational_relation: bad relation");
  }
}

} // namespace pospart
