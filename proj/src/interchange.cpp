#include "pospart/interchange.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "pospart/oracle.hpp"
#include "pospart/topo.hpp"

namespace pospart::interchange {
namespace {

[[noreturn]] void malformed(const std::string &what) {
  throw MalformedInput(what);
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-')
    s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer integer_from_text(std::string_view s) {
  if (!is_integer_text(s))
    malformed("not an integer: \"" + std::string(s) + "\"");
  return Integer(std::string(s), 10);
}

// Field kinds of the request schemas.
enum class Kind { Part, Point, Points, Form, Matrix, Rank, Signs };

struct FieldSpec {
  const char *key;
  Kind kind;
  bool required;
};

const std::map<std::string, std::vector<FieldSpec>, std::less<>> &schemas() {
  static const std::map<std::string, std::vector<FieldSpec>, std::less<>> s{
      {"gordan", {{"points", Kind::Points, true}, {"rank", Kind::Rank, false}}},
      {"member", {{"part", Kind::Part, true}, {"point", Kind::Point, true}}},
      {"compare",
       {{"part", Kind::Part, true},
        {"lambda", Kind::Point, true},
        {"mu", Kind::Point, true}}},
      {"pi", {{"part", Kind::Part, true}}},
      {"pos", {{"form", Kind::Form, true}}},
      {"fiber-embed", {{"form", Kind::Form, true}, {"part", Kind::Part, true}}},
      {"fiber-project", {{"part", Kind::Part, true}}},
      {"pullback", {{"matrix", Kind::Matrix, true}, {"part", Kind::Part, true}}},
      {"closure-u", {{"part", Kind::Part, true}, {"points", Kind::Points, true}}},
      {"in-u", {{"part", Kind::Part, true}, {"points", Kind::Points, true}}},
      {"in-v", {{"form", Kind::Form, true}, {"points", Kind::Points, true}}},
      {"facets", {{"normals", Kind::Points, true}, {"rank", Kind::Rank, false}}},
      {"poset", {{"normals", Kind::Points, true}, {"rank", Kind::Rank, false}}},
      {"realizable",
       {{"normals", Kind::Points, true},
        {"rank", Kind::Rank, false},
        {"signs", Kind::Signs, true}}},
      {"rank1-enum", {}},
      {"total-order?", {{"part", Kind::Part, true}}},
      {"equals", {{"other", Kind::Part, true}, {"part", Kind::Part, true}}},
  };
  return s;
}

const std::vector<FieldSpec> &schema_of(std::string_view command) {
  const auto &s = schemas();
  auto it = s.find(command);
  if (it == s.end())
    malformed("unknown command: " + std::string(command));
  return it->second;
}

void check_object(const json &input, const std::vector<FieldSpec> &fields) {
  if (!input.is_object())
    malformed("input must be a JSON object");
  for (const auto &[key, value] : input.items()) {
    (void)value;
    if (std::none_of(fields.begin(), fields.end(),
                     [&](const FieldSpec &f) { return key == f.key; }))
      malformed("unknown field: " + key);
  }
  for (const auto &f : fields)
    if (f.required && !input.contains(f.key))
      malformed(std::string("missing field: ") + f.key);
}

std::size_t parse_rank(const json &j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    malformed("rank must be a non-negative integer");
  return j.get<std::size_t>();
}

// Rank of a point list: explicit "rank" first, then the fallback, then the
// first point.
std::size_t list_rank(const json &input, const char *key,
                      std::optional<std::size_t> fallback) {
  if (input.contains("rank"))
    return parse_rank(input.at("rank"));
  if (fallback)
    return *fallback;
  const json &pts = input.at(key);
  if (pts.is_array() && !pts.empty() && pts.front().is_array())
    return pts.front().size();
  malformed(std::string("cannot infer the rank of an empty \"") + key +
            "\" list; give \"rank\"");
}

FinitePointSet point_set(const json &input, const char *key,
                         std::optional<std::size_t> fallback = {}) {
  const std::size_t d = list_rank(input, key, fallback);
  const auto pts = parse_points(input.at(key), d);
  return FinitePointSet(d, pts);
}

Arrangement arrangement(const json &input) {
  const std::size_t d = list_rank(input, "normals", std::nullopt);
  const auto normals = parse_points(input.at("normals"), d);
  for (const auto &n : normals)
    if (n.is_zero())
      malformed("arrangement normals must be nonzero");
  return Arrangement(d, normals);
}

json emit_bool(const char *key, bool v) { return json{{key, v}}; }

json facets_json(const Arrangement &a, const std::vector<Facet> &facets) {
  json list = json::array();
  std::size_t chambers = 0;
  for (const auto &f : facets) {
    list.push_back(emit_facet(f));
    chambers += f.is_chamber();
  }
  return json{{"chambers", chambers},
              {"count", facets.size()},
              {"facets", std::move(list)},
              {"rank", a.ambient_rank()},
              {"normals", [&] {
                 json n = json::array();
                 for (const auto &h : a.hyperplanes())
                   n.push_back(emit_point(h.normal()));
                 return n;
               }()}};
}

using Handler = std::function<json(const json &)>;

const std::map<std::string, Handler, std::less<>> &handlers() {
  static const std::map<std::string, Handler, std::less<>> h{
      {"gordan",
       [](const json &in) {
         const std::size_t d = list_rank(in, "points", std::nullopt);
         const auto raw = parse_points(in.at("points"), d);
         const FinitePointSet e(d, raw);
         const auto verdict = U_classify(e);
         if (verdict.empty()) {
           // Report indices into the input list (first occurrences).
           json idx = json::array(), mult = json::array();
           const auto &cert = *verdict.certificate;
           for (std::size_t k = 0; k < cert.indices.size(); ++k) {
             const auto &p = e[cert.indices[k]];
             idx.push_back(static_cast<std::size_t>(
                 std::find(raw.begin(), raw.end(), p) - raw.begin()));
             mult.push_back(emit_integer(cert.multipliers[k]));
           }
           return json{{"certificate", {{"indices", idx}, {"multipliers", mult}}},
                       {"empty", true}};
         }
         return json{{"empty", false},
                     {"separating_form", emit_covector(*verdict.separating_form)},
                     {"witness", emit_part(*verdict.witness)}};
       }},
      {"member",
       [](const json &in) {
         const auto x = parse_part(in.at("part")).load();
         const auto p = parse_point(in.at("point"), x.ambient_rank());
         return json{{"member", contains(x, p)},
                     {"strict", strictly_contains(x, p)}};
       }},
      {"compare",
       [](const json &in) {
         const auto x = parse_part(in.at("part")).load();
         const auto l = parse_point(in.at("lambda"), x.ambient_rank());
         const auto m = parse_point(in.at("mu"), x.ambient_rank());
         static constexpr const char *names[] = {"LT", "EQ", "GT"};
         return json{{"order", names[static_cast<int>(compare(x, l, m))]}};
       }},
      {"pi",
       [](const json &in) {
         auto form = emit_covector(pi(parse_part(in.at("part")).load()));
         return json{{"pi", std::move(form)}};
       }},
      {"pos",
       [](const json &in) {
         auto part = emit_part(pos_of_form(parse_covector(in.at("form"))));
         return json{{"part", std::move(part)}};
       }},
      {"fiber-embed",
       [](const json &in) {
         const auto phi = parse_covector(in.at("form"));
         const auto xk = parse_part(in.at("part")).load();
         auto part = emit_part(fiber_embed(phi, xk));
         return json{{"part", std::move(part)}};
       }},
      {"fiber-project",
       [](const json &in) {
         const auto y = parse_part(in.at("part")).load();
         const auto xk = fiber_project(y);
         return json{{"form", emit_covector(pi(y))},
                     {"kernel", emit_sublattice(y.stages().front().kernel_after)},
                     {"part", emit_part(xk)}};
       }},
      {"pullback",
       [](const json &in) {
         const auto sigma = parse_matrix(in.at("matrix"));
         const auto x = parse_part(in.at("part")).load();
         auto part = emit_part(pullback(sigma, x));
         return json{{"part", std::move(part)}};
       }},
      {"closure-u",
       [](const json &in) {
         const auto x = parse_part(in.at("part")).load();
         return emit_bool("in_closure",
                          in_closure_U(x, point_set(in, "points", x.ambient_rank())));
       }},
      {"in-u",
       [](const json &in) {
         const auto x = parse_part(in.at("part")).load();
         return emit_bool("in_u", in_U(x, point_set(in, "points", x.ambient_rank())));
       }},
      {"in-v",
       [](const json &in) {
         const auto phi = parse_covector(in.at("form"));
         return emit_bool("in_v", in_V(phi, point_set(in, "points", phi.rank())));
       }},
      {"facets",
       [](const json &in) {
         const auto a = arrangement(in);
         return facets_json(a, enumerate_facets(a));
       }},
      {"poset",
       [](const json &in) {
         const auto a = arrangement(in);
         const auto poset = face_poset(a);
         json out = facets_json(a, poset.facets);
         json edges = json::array();
         for (const auto &[i, j] : poset.cover_edges())
           edges.push_back(json::array({i, j}));
         out["edges"] = std::move(edges);
         return out;
       }},
      {"realizable",
       [](const json &in) {
         const auto a = arrangement(in);
         const auto s = parse_signs(in.at("signs"));
         const auto f = realizable(s, a);
         return json{{"facet", f ? emit_facet(*f) : json(nullptr)}};
       }},
      {"rank1-enum",
       [](const json &) {
         json parts = json::array();
         for (const auto &x : enumerate_rank1())
           parts.push_back(emit_part(x));
         return json{{"parts", std::move(parts)}};
       }},
      {"total-order?",
       [](const json &in) {
         return emit_bool("total", is_total_order(parse_part(in.at("part")).load()));
       }},
      {"equals",
       [](const json &in) {
         const auto x = parse_part(in.at("part")).load();
         const auto y = parse_part(in.at("other")).load();
         return emit_bool("equal", equals(x, y));
       }},
  };
  return h;
}

} // namespace

// ---------------------------------------------------------------------------
// Scalars

json emit_integer(const Integer &x) {
  if (x.fits_slong_p())
    return json(x.get_si());
  return json(x.get_str());
}

Integer parse_integer(const json &j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return integer_from_text(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()), 10);
  }
  if (j.is_string())
    return integer_from_text(j.get<std::string>());
  malformed("expected an integer, got " + j.dump());
}

json emit_rational(const Rational &q) {
  if (q.get_den() == 1)
    return emit_integer(q.get_num());
  return json(q.get_str());
}

Rational parse_rational(const json &j) {
  if (j.is_number_integer())
    return Rational(parse_integer(j));
  if (!j.is_string())
    malformed("expected a rational, got " + j.dump());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(integer_from_text(s));
  const Integer num = integer_from_text(std::string_view(s).substr(0, slash));
  const auto den_text = std::string_view(s).substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-')
    malformed("bad denominator in \"" + s + "\"");
  const Integer den = integer_from_text(den_text);
  if (sgn(den) == 0)
    malformed("zero denominator in \"" + s + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Composite values

json emit_point(const LatticePoint &p) {
  json out = json::array();
  for (const auto &x : p)
    out.push_back(emit_integer(x));
  return out;
}

LatticePoint parse_point(const json &j, std::optional<std::size_t> rank) {
  if (!j.is_array())
    malformed("expected a point (array of integers), got " + j.dump());
  if (rank && j.size() != *rank)
    malformed("point " + j.dump() + " does not have length " +
              std::to_string(*rank));
  std::vector<Integer> c;
  for (const auto &x : j)
    c.push_back(parse_integer(x));
  return LatticePoint(std::move(c));
}

json emit_points(const std::vector<LatticePoint> &ps) {
  json out = json::array();
  for (const auto &p : ps)
    out.push_back(emit_point(p));
  return out;
}

std::vector<LatticePoint> parse_points(const json &j,
                                       std::optional<std::size_t> rank) {
  if (!j.is_array())
    malformed("expected a list of points, got " + j.dump());
  std::vector<LatticePoint> out;
  for (const auto &p : j) {
    out.push_back(parse_point(p, rank));
    if (!rank)
      rank = out.back().rank();
  }
  return out;
}

json emit_covector(const Covector &c) {
  json out = json::array();
  for (const auto &x : c.coeffs())
    out.push_back(emit_rational(x));
  return out;
}

Covector parse_covector(const json &j, std::optional<std::size_t> rank) {
  if (!j.is_array())
    malformed("expected a covector (array of rationals), got " + j.dump());
  if (rank && j.size() != *rank)
    malformed("covector " + j.dump() + " does not have length " +
              std::to_string(*rank));
  std::vector<Rational> c;
  for (const auto &x : j)
    c.push_back(parse_rational(x));
  return Covector(std::move(c));
}

json emit_part(const PartSpec &p) {
  json forms = json::array();
  for (const auto &f : p.forms)
    forms.push_back(emit_covector(f));
  return json{{"forms", std::move(forms)}, {"rank", p.rank}};
}

json emit_part(const PositivePart &x) {
  return emit_part(PartSpec{x.ambient_rank(), x.forms()});
}

PartSpec parse_part(const json &j) {
  if (!j.is_object())
    malformed("expected a positive part object, got " + j.dump());
  for (const auto &[key, value] : j.items()) {
    (void)value;
    if (key != "rank" && key != "forms")
      malformed("unknown field in positive part: " + key);
  }
  if (!j.contains("rank") || !j.contains("forms"))
    malformed("positive part needs \"rank\" and \"forms\"");
  PartSpec p;
  p.rank = parse_rank(j.at("rank"));
  if (!j.at("forms").is_array())
    malformed("\"forms\" must be a list");
  for (const auto &f : j.at("forms"))
    p.forms.push_back(parse_covector(f, p.rank));
  return p;
}

json emit_matrix(const IntMatrix &m) {
  json data = json::array();
  for (const auto &x : m.data())
    data.push_back(emit_integer(x));
  return json{{"data", std::move(data)},
              {"shape", json::array({m.rows(), m.cols()})}};
}

IntMatrix parse_matrix(const json &j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("data") ||
      j.size() != 2)
    malformed("matrix must be {\"data\":[...],\"shape\":[rows,cols]}");
  const json &shape = j.at("shape");
  if (!shape.is_array() || shape.size() != 2)
    malformed("matrix shape must be [rows, cols]");
  const std::size_t rows = parse_rank(shape[0]);
  const std::size_t cols = parse_rank(shape[1]);
  const json &data = j.at("data");
  if (!data.is_array() || data.size() != rows * cols)
    malformed("matrix data length does not match its shape");
  std::vector<Integer> values;
  for (const auto &x : data)
    values.push_back(parse_integer(x));
  return IntMatrix(rows, cols, std::move(values));
}

json emit_signs(const SignVector &s) { return json(s); }

SignVector parse_signs(const json &j) {
  if (!j.is_array())
    malformed("expected a sign vector");
  SignVector s;
  for (const auto &x : j) {
    if (!x.is_number_integer() || x.get<long long>() < -1 || x.get<long long>() > 1)
      malformed("sign entries must be -1, 0 or 1");
    s.push_back(x.get<int>());
  }
  return s;
}

json emit_sublattice(const Sublattice &s) { return emit_points(s.basis()); }

json emit_facet(const Facet &f) {
  return json{{"dim", f.dim},
              {"signs", emit_signs(f.signs)},
              {"support", emit_sublattice(f.support_lattice)},
              {"witness", emit_part(f.witness)}};
}

// ---------------------------------------------------------------------------
// Dispatch

const std::vector<std::string> &commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, fields] : schemas()) {
      (void)fields;
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

json run(std::string_view command, const json &input) {
  const auto &fields = schema_of(command);
  const json empty = json::object();
  const json &in = input.is_null() && fields.empty() ? empty : input;
  check_object(in, fields);
  return handlers().find(command)->second(in);
}

json normalize_input(std::string_view command, const json &input, bool canon) {
  const auto &fields = schema_of(command);
  const json empty = json::object();
  const json &in = input.is_null() && fields.empty() ? empty : input;
  check_object(in, fields);
  json out = json::object();
  for (const auto &f : fields) {
    if (!in.contains(f.key))
      continue;
    const json &v = in.at(f.key);
    switch (f.kind) {
    case Kind::Part: {
      const auto spec = parse_part(v);
      out[f.key] = canon ? emit_part(spec.load()) : emit_part(spec);
      break;
    }
    case Kind::Point:
      out[f.key] = emit_point(parse_point(v));
      break;
    case Kind::Points:
      out[f.key] = emit_points(parse_points(v));
      break;
    case Kind::Form:
      out[f.key] = emit_covector(parse_covector(v));
      break;
    case Kind::Matrix:
      out[f.key] = emit_matrix(parse_matrix(v));
      break;
    case Kind::Rank:
      out[f.key] = parse_rank(v);
      break;
    case Kind::Signs:
      out[f.key] = emit_signs(parse_signs(v));
      break;
    }
  }
  return out;
}

int run_text(std::string_view command, std::string_view text, bool canon,
             std::ostream &out) {
  auto error = [&](std::string_view kind, const std::string &message, int code) {
    out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return code;
  };
  try {
    json input = text.find_first_not_of(" \t\r\n") == std::string_view::npos
                     ? json()
                     : json::parse(text);
    json result = run(command, input);
    if (canon)
      result["canonical_input"] = normalize_input(command, input, true);
    out << result.dump() << '\n';
    return kSuccess;
  } catch (const json::exception &e) {
    return error("MalformedInput", e.what(), kMalformed);
  } catch (const MalformedInput &e) {
    return error("MalformedInput", e.what(), kMalformed);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::DimensionMismatch)
      return error(to_string(e.kind()), e.what(), kMalformed);
    return error(to_string(e.kind()), e.what(), kDomainError);
  }
}

} // namespace pospart::interchange
