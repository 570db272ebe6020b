#include "pospart/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace pospart::oracle {
namespace {

std::vector<std::vector<long>> to_machine(const FinitePointSet &e) {
  constexpr long kLimit = 1L << 20;
  std::vector<std::vector<long>> out;
  for (const auto &p : e) {
    std::vector<long> row;
    for (const auto &x : p) {
      if (!x.fits_slong_p() || abs(x) > kLimit)
        throw_error(ErrorKind::InvalidArgument,
                    "gordan_bruteforce: coordinate out of range");
      row.push_back(x.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

std::optional<Certificate> gordan_bruteforce(const FinitePointSet &e,
                                             long bound) {
  if (e.size() > kMaxBruteforcePoints || bound > kMaxBruteforceBound)
    throw_error(ErrorKind::GuardExceeded,
                "gordan_bruteforce: at most 8 points and bound 12");
  if (bound < 1)
    throw_error(ErrorKind::InvalidArgument, "gordan_bruteforce: bound < 1");
  const auto pts = to_machine(e);
  const std::size_t n = pts.size();
  const std::size_t d = e.ambient_rank();

  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m)
    masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });

  for (unsigned mask : masks) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        idx.push_back(i);
    const std::size_t k = idx.size();
    // Multipliers for all but the last chosen point; the last one is then
    // forced coordinate by coordinate.
    std::vector<long> mult(k, 1);
    for (;;) {
      std::vector<long> sum(d, 0);
      for (std::size_t t = 0; t + 1 < k; ++t)
        for (std::size_t c = 0; c < d; ++c)
          sum[c] += mult[t] * pts[idx[t]][c];
      const auto &last = pts[idx[k - 1]];
      std::optional<long> forced;
      bool ok = true;
      for (std::size_t c = 0; c < d && ok; ++c) {
        if (last[c] == 0) {
          ok = sum[c] == 0;
          continue;
        }
        if ((-sum[c]) % last[c] != 0) {
          ok = false;
          continue;
        }
        const long r = -sum[c] / last[c];
        if (!forced)
          forced = r;
        else if (*forced != r)
          ok = false;
      }
      // A zero last point accepts any multiplier; take 1.
      if (ok && !forced)
        forced = 1;
      if (ok && *forced >= 1 && *forced <= bound) {
        Certificate cert;
        cert.indices = idx;
        for (std::size_t t = 0; t + 1 < k; ++t)
          cert.multipliers.emplace_back(mult[t]);
        cert.multipliers.emplace_back(*forced);
        return cert;
      }
      // Next tuple of the first k - 1 multipliers.
      std::size_t pos = 0;
      while (pos + 1 < k && mult[pos] == bound) {
        mult[pos] = 1;
        ++pos;
      }
      if (pos + 1 >= k)
        break;
      ++mult[pos];
    }
  }
  return std::nullopt;
}

bool membership_oracle(std::span<const Covector> forms,
                       const LatticePoint &lambda) {
  for (const auto &f : forms) {
    Rational v = 0;
    for (std::size_t i = 0; i < f.rank(); ++i)
      v += f[i] * lambda[i];
    if (sgn(v) != 0)
      return sgn(v) > 0;
  }
  return true;
}

long Sampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

LatticePoint Sampler::point(std::size_t d, long box) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < d; ++i)
    c.emplace_back(integer(-box, box));
  return LatticePoint(std::move(c));
}

LatticePoint Sampler::nonzero_point(std::size_t d, long box) {
  for (;;)
    if (auto p = point(d, box); !p.is_zero())
      return p;
}

Covector Sampler::form(std::size_t d, long box) {
  return Covector::from_point(point(d, box));
}

Covector Sampler::nonzero_form(std::size_t d, long box) {
  return Covector::from_point(nonzero_point(d, box));
}

IntMatrix Sampler::matrix(std::size_t rows, std::size_t cols, long box) {
  std::vector<Integer> data;
  for (std::size_t i = 0; i < rows * cols; ++i)
    data.emplace_back(integer(-box, box));
  return IntMatrix(rows, cols, std::move(data));
}

PositivePart Sampler::positive_part(std::size_t d, std::size_t max_stages) {
  const auto r =
      static_cast<std::size_t>(integer(0, static_cast<long>(std::min(max_stages, d))));
  FlagBuilder builder(d);
  for (std::size_t i = 0; i < r; ++i)
    while (!builder.push(form(d, 3))) {
    }
  return std::move(builder).build();
}

FinitePointSet Sampler::point_set(std::size_t d, std::size_t max_size,
                                  long box) {
  const auto n = static_cast<std::size_t>(integer(0, static_cast<long>(max_size)));
  FinitePointSet e(d);
  for (std::size_t i = 0; i < n; ++i)
    e.insert(point(d, box));
  return e;
}

PositivePart random_positive_part(std::uint64_t seed, std::size_t d,
                                  std::size_t max_stages) {
  return Sampler(seed).positive_part(d, max_stages);
}

LatticePoint random_point(std::uint64_t seed, std::size_t d, long box) {
  return Sampler(seed).point(d, box);
}

} // namespace pospart::oracle
