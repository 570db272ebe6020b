#include "pospart/positive.hpp"

#include <stdexcept>

namespace pospart {

PositivePart::PositivePart(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), whole_(Sublattice::full(ambient_rank)) {}

const Sublattice &PositivePart::lineality() const {
  return stages_.empty() ? whole_ : stages_.back().kernel_after;
}

std::vector<Covector> PositivePart::forms() const {
  std::vector<Covector> out;
  out.reserve(stages_.size());
  for (const auto &s : stages_)
    out.push_back(s.form);
  return out;
}

int PositivePart::lex_sign(const LatticePoint &lambda) const {
  require_rank(ambient_rank_, lambda.rank(), "PositivePart");
  for (const auto &s : stages_)
    if (int sign = s.form.sign_at(lambda); sign != 0)
      return sign;
  return 0;
}

bool operator==(const PositivePart &a, const PositivePart &b) {
  if (a.ambient_rank_ != b.ambient_rank_ || a.depth() != b.depth())
    return false;
  for (std::size_t i = 0; i < a.depth(); ++i)
    if (a.stages_[i].intrinsic != b.stages_[i].intrinsic)
      return false;
  return true;
}

FlagBuilder::FlagBuilder(std::size_t ambient_rank) : part_(ambient_rank) {}

const Sublattice &FlagBuilder::current_kernel() const {
  return part_.lineality();
}

bool FlagBuilder::push(const Covector &form) {
  require_rank(part_.ambient_rank_, form.rank(), "flag form");
  const Sublattice &kernel = current_kernel();
  Covector intrinsic = restrict_to(form, kernel);
  if (intrinsic.is_zero())
    return false;
  Covector lifted = lift_from(kernel, intrinsic.coeffs()).primitive();
  Sublattice next = kernel_lattice(lifted, kernel);
  part_.stages_.push_back(
      Stage{std::move(lifted), std::move(intrinsic), std::move(next)});
  return true;
}

PositivePart FlagBuilder::build() && { return std::move(part_); }

PositivePart make_positive_part(std::span<const Covector> forms,
                                std::size_t ambient_rank) {
  FlagBuilder builder(ambient_rank);
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!builder.push(forms[i]))
      throw_error(ErrorKind::InvalidFlag,
                  "form " + std::to_string(i) + " " + forms[i].to_string() +
                      " vanishes on " + builder.current_kernel().to_string());
  return std::move(builder).build();
}

PositivePart make_positive_part(std::initializer_list<Covector> forms,
                                std::size_t ambient_rank) {
  return make_positive_part(std::span<const Covector>(forms.begin(), forms.size()),
                            ambient_rank);
}

bool contains(const PositivePart &x, const LatticePoint &lambda) {
  return x.lex_sign(lambda) >= 0;
}

bool strictly_contains(const PositivePart &x, const LatticePoint &lambda) {
  return x.lex_sign(lambda) > 0;
}

PositivePart negate(const PositivePart &x) {
  auto forms = x.forms();
  for (auto &f : forms)
    f = -f;
  return make_positive_part(forms, x.ambient_rank());
}

Ordering3 compare(const PositivePart &x, const LatticePoint &lambda,
                  const LatticePoint &mu) {
  switch (x.lex_sign(mu - lambda)) {
  case 0:
    return Ordering3::EQ;
  case 1:
    return Ordering3::LT;
  default:
    return Ordering3::GT;
  }
}

Sublattice lineality(const PositivePart &x) { return x.lineality(); }

Covector pi(const PositivePart &x) {
  if (x.is_whole_lattice())
    return Covector::zero(x.ambient_rank());
  return x.stages().front().form;
}

PositivePart pos_of_form(const Covector &phi) {
  if (phi.is_zero())
    return PositivePart(phi.rank());
  return make_positive_part({phi}, phi.rank());
}

PositivePart fiber_embed(const Covector &phi, const PositivePart &xk) {
  if (phi.is_zero())
    throw_error(ErrorKind::InvalidArgument, "fiber_embed: zero form");
  const std::size_t d = phi.rank();
  const Sublattice kernel = kernel_lattice(phi, Sublattice::full(d));
  require_rank(kernel.rank(), xk.ambient_rank(), "fiber_embed kernel part");
  std::vector<Covector> forms{phi};
  for (const auto &stage : xk.stages())
    forms.push_back(lift_from(kernel, stage.form.coeffs()));
  return make_positive_part(forms, d);
}

PositivePart fiber_project(const PositivePart &y) {
  if (y.is_whole_lattice())
    throw_error(ErrorKind::InvalidArgument,
                "fiber_project: the whole lattice has no fiber");
  const Sublattice &kernel = y.stages().front().kernel_after;
  std::vector<Covector> forms;
  for (std::size_t i = 1; i < y.depth(); ++i) {
    std::vector<Rational> values;
    for (const auto &b : kernel.basis())
      values.push_back(y.stages()[i].form.evaluate(b));
    forms.emplace_back(std::move(values));
  }
  return make_positive_part(forms, kernel.rank());
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw_error(ErrorKind::DimensionMismatch,
                "IntMatrix: data length does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticePoint> rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_rank(cols, rows[i].rank(), "IntMatrix::from_rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

LatticePoint IntMatrix::apply(const LatticePoint &p) const {
  require_rank(cols_, p.rank(), "IntMatrix::apply");
  std::vector<Integer> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] += (*this)(i, j) * p[j];
  return LatticePoint(std::move(out));
}

Covector IntMatrix::pull(const Covector &phi) const {
  require_rank(rows_, phi.rank(), "IntMatrix::pull");
  std::vector<Rational> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    if (sgn(phi[i]) != 0)
      for (std::size_t j = 0; j < cols_; ++j)
        out[j] += phi[i] * (*this)(i, j);
  return Covector(std::move(out));
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw_error(ErrorKind::DimensionMismatch, "IntMatrix product shapes");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0)
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += a(i, k) * b(k, j);
  return c;
}

PositivePart pullback(const IntMatrix &sigma, const PositivePart &x) {
  require_rank(sigma.rows(), x.ambient_rank(), "pullback");
  FlagBuilder builder(sigma.cols());
  for (const auto &stage : x.stages())
    builder.push(sigma.pull(stage.form));
  return std::move(builder).build();
}

bool is_total_order(const PositivePart &x) { return x.lineality().rank() == 0; }

bool equals(const PositivePart &x, const PositivePart &y) { return x == y; }

std::vector<PositivePart> enumerate_rank1(std::size_t ambient_rank) {
  if (ambient_rank != 1)
    throw_error(ErrorKind::InvalidArgument,
                "enumerate_rank1: only defined for rank 1");
  return {PositivePart(1), make_positive_part({Covector{1}}, 1),
          make_positive_part({Covector{-1}}, 1)};
}

} // namespace pospart
