#pragma once

// JSON interchange for every query. Objects are emitted with sorted keys and
// no whitespace, so output is byte-stable for a fixed input. Rationals are
// written as "p/q" strings (integers as plain JSON integers); positive parts
// as {"forms":[...],"rank":d}, canonicalised when loaded.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pospart/arrange.hpp"
#include "pospart/exactlin.hpp"
#include "pospart/positive.hpp"

namespace pospart::interchange {

using nlohmann::json;

/// Input that does not match the schema (exit status 2).
class MalformedInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kMalformed = 2 };

/// A positive part as written: the raw form list, before canonicalisation.
struct PartSpec {
  std::size_t rank = 0;
  std::vector<Covector> forms;

  PositivePart load() const { return make_positive_part(forms, rank); }
};

json emit_integer(const Integer &x);
Integer parse_integer(const json &j);
json emit_rational(const Rational &q);
Rational parse_rational(const json &j);

json emit_point(const LatticePoint &p);
LatticePoint parse_point(const json &j, std::optional<std::size_t> rank = {});
json emit_points(const std::vector<LatticePoint> &ps);
std::vector<LatticePoint> parse_points(const json &j,
                                       std::optional<std::size_t> rank = {});
json emit_covector(const Covector &c);
Covector parse_covector(const json &j, std::optional<std::size_t> rank = {});
json emit_part(const PartSpec &p);
json emit_part(const PositivePart &x);
PartSpec parse_part(const json &j);
json emit_matrix(const IntMatrix &m);
IntMatrix parse_matrix(const json &j);
json emit_signs(const SignVector &s);
SignVector parse_signs(const json &j);
json emit_sublattice(const Sublattice &s);
json emit_facet(const Facet &f);

/// Names of all commands, in a fixed order.
const std::vector<std::string> &commands();

/// Runs one command. Throws MalformedInput or pospart::Error.
json run(std::string_view command, const json &input);

/// Parses the input against the command's schema and re-emits it. With
/// `canon`, positive parts are replaced by their canonical form lists.
json normalize_input(std::string_view command, const json &input,
                     bool canon = false);

/// Full front end: parses `text`, runs, writes one JSON line to `out` and
/// returns the exit status. Errors are written as {"error":{...}}.
int run_text(std::string_view command, std::string_view text, bool canon,
             std::ostream &out);

} // namespace pospart::interchange
