#pragma once

// Test-only helpers: fixture loading and brute-force oracles written with
// machine integers, independent of the library's canonicalisation and
// elimination code.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "pospart/arrange.hpp"
#include "pospart/exactlin.hpp"

namespace pospart::testing {

using Vec = std::vector<long>;

inline std::filesystem::path fixture_dir() { return POSPART_FIXTURE_DIR; }

struct Fixture {
  std::string name;
  std::string text;
  nlohmann::json doc;
};

inline std::vector<Fixture> load_fixtures(const std::string &prefix = "") {
  std::vector<Fixture> out;
  for (const auto &entry : std::filesystem::directory_iterator(fixture_dir())) {
    if (entry.path().extension() != ".json")
      continue;
    const auto name = entry.path().stem().string();
    if (name.rfind(prefix, 0) != 0)
      continue;
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    auto doc = nlohmann::json::parse(text);
    out.push_back({name, std::move(text), std::move(doc)});
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture &a, const Fixture &b) { return a.name < b.name; });
  return out;
}

inline Vec to_vec(const LatticePoint &p) {
  Vec v;
  for (const auto &x : p)
    v.push_back(x.get_si());
  return v;
}

inline LatticePoint to_point(const Vec &v) {
  std::vector<Integer> c(v.begin(), v.end());
  return LatticePoint(std::move(c));
}

inline long dot(const Vec &a, const Vec &b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

/// Lexicographic sign of raw forms (any sequence, flag or not) at p.
inline int raw_lex_sign(const std::vector<Vec> &forms, const Vec &p) {
  for (const auto &f : forms)
    if (long v = dot(f, p); v != 0)
      return v > 0 ? 1 : -1;
  return 0;
}

/// Rank of a small integer matrix by fraction-free elimination.
inline std::size_t matrix_rank(std::vector<Vec> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const long a = rows[rank][c], b = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[i][k] = a * rows[i][k] - b * rows[rank][k];
      const long g = std::accumulate(rows[i].begin(), rows[i].end(), 0L,
                                     [](long acc, long x) { return std::gcd(acc, x); });
      if (g > 1)
        for (auto &x : rows[i])
          x /= g;
    }
    ++rank;
  }
  return rank;
}

/// Every form in [-box, box]^d.
inline std::vector<Vec> all_forms(std::size_t d, long box) {
  std::vector<Vec> out{Vec(d, -box)};
  for (;;) {
    Vec next = out.back();
    std::size_t i = 0;
    while (i < d && next[i] == box)
      next[i++] = -box;
    if (i == d)
      break;
    ++next[i];
    out.push_back(next);
  }
  return out;
}

/// Sign vectors of Pos(f_1, ..., f_r) for every sequence of r <= d forms
/// from [-box, box]^d, mapped to their dimension d - rank(zero normals).
inline std::map<SignVector, std::size_t>
sampled_facets(std::size_t d, const std::vector<Vec> &normals, long box) {
  const auto forms = all_forms(d, box);
  std::map<SignVector, std::size_t> out;
  std::vector<Vec> seq;
  auto record = [&] {
    SignVector s;
    for (const auto &n : normals)
      s.push_back(raw_lex_sign(seq, n));
    if (out.count(s))
      return;
    std::vector<Vec> zero;
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (s[i] == 0)
        zero.push_back(normals[i]);
    out[s] = d - matrix_rank(zero);
  };
  auto rec = [&](auto &self, std::size_t depth) -> void {
    record();
    if (depth == d)
      return;
    for (const auto &f : forms) {
      seq.push_back(f);
      self(self, depth + 1);
      seq.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace pospart::testing
