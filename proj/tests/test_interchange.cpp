#include "doctest.h"

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "pospart/interchange.hpp"
#include "support.hpp"

using namespace pospart;
using namespace pospart::interchange;
namespace pt = pospart::testing;

namespace {

struct Outcome {
  int code;
  json body;
};

Outcome call(std::string_view command, std::string_view text, bool canon = false) {
  std::ostringstream out;
  const int code = run_text(command, text, canon, out);
  return {code, json::parse(out.str())};
}

// Runs the installed binary through the shell, feeding stdin from a file.
Outcome call_binary(const std::string &args, const std::string &input) {
  const auto path = std::filesystem::temp_directory_path() / "pospart_cli_input.json";
  {
    std::ofstream f(path);
    f << input;
  }
  const std::string cmd = std::string(POSPART_CLI) + " " + args + " < " + path.string();
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
    text.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), text.empty() ? json() : json::parse(text)};
}

} // namespace

TEST_CASE("rational and integer codecs") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational(7) == Rational(7));
  CHECK(emit_rational(Rational(1, 2)) == json("1/2"));
  CHECK(emit_rational(Rational(-3)) == json(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("x"), MalformedInput);
  CHECK_THROWS_AS(parse_rational(1.5), MalformedInput);

  Integer big("123456789012345678901234567890");
  CHECK(parse_integer(emit_integer(big)) == big);
  CHECK(emit_integer(Integer(-12)) == json(-12));
  Rational huge(big + 1, Integer(7));
  huge.canonicalize();
  CHECK(parse_rational(emit_rational(huge)) == huge);
}

TEST_CASE("structured codecs round trip") {
  auto p = LatticePoint{3, -1, 0};
  CHECK(parse_point(emit_point(p)) == p);
  CHECK_THROWS_AS(parse_point(json::parse("[1,2]"), 3), MalformedInput);
  auto c = Covector(std::vector<Rational>{Rational(1, 3), Rational(-2)});
  CHECK(parse_covector(emit_covector(c)) == c);
  IntMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(parse_matrix(emit_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix(json::parse(R"({"data":[1,2,3],"shape":[2,2]})")),
                  MalformedInput);
  CHECK(parse_signs(emit_signs({-1, 0, 1})) == SignVector{-1, 0, 1});
  CHECK_THROWS_AS(parse_signs(json::parse("[2]")), MalformedInput);
  auto spec = parse_part(json::parse(R"({"rank":2,"forms":[[2,0],["1/2",3]]})"));
  CHECK(spec.rank == 2);
  CHECK(spec.forms.size() == 2);
}

TEST_CASE("command examples") {
  auto g = call("gordan", R"({"points":[[1,0],[-1,0]]})");
  CHECK(g.code == kSuccess);
  CHECK(g.body.dump() ==
        R"({"certificate":{"indices":[0,1],"multipliers":[1,1]},"empty":true})");

  auto r = call("rank1-enum", "");
  CHECK(r.code == kSuccess);
  CHECK(r.body["parts"].size() == 3);

  auto f = call("facets", R"({"normals":[[1,0],[0,1],[1,1]]})");
  CHECK(f.code == kSuccess);
  CHECK(f.body["count"] == 13);
  CHECK(f.body["chambers"] == 6);

  auto m = call("member", R"({"part":{"rank":2,"forms":[[1,0],[0,1]]},"point":[3,-100]})");
  CHECK(m.body == json::parse(R"({"member":true,"strict":true})"));

  auto o = call("compare",
                R"({"part":{"rank":2,"forms":[[1,0]]},"lambda":[2,3],"mu":[2,9]})");
  CHECK(o.body["order"] == "EQ");

  auto p = call("pi", R"({"part":{"rank":2,"forms":[[2,4]]}})");
  CHECK(p.body["pi"] == json::parse("[1,2]"));

  auto t = call("total-order?", R"({"part":{"rank":2,"forms":[[1,0],[0,1]]}})");
  CHECK(t.body["total"] == true);

  auto pb = call("pullback",
                 R"({"matrix":{"shape":[2,1],"data":[1,0]},"part":{"rank":2,"forms":[[1,0],[0,1]]}})");
  CHECK(pb.body["part"] == json::parse(R"({"forms":[[1]],"rank":1})"));

  auto cl = call("closure-u", R"({"part":{"rank":2,"forms":[[-1,0]]},"points":[[1,0]]})");
  CHECK(cl.body["in_closure"] == true);

  auto v = call("in-v", R"({"form":[-1,-1],"points":[[1,0],[0,1]]})");
  CHECK(v.body["in_v"] == true);

  auto eq = call("equals",
                 R"({"part":{"rank":2,"forms":[[2,0],[0,3]]},"other":{"rank":2,"forms":[[1,0],[0,1]]}})");
  CHECK(eq.body["equal"] == true);
}

TEST_CASE("errors map to exit codes") {
  auto unknown = call("gordan", R"({"points":[[1,0]],"extra":1})");
  CHECK(unknown.code == kMalformed);
  CHECK(unknown.body["error"]["kind"] == "MalformedInput");

  CHECK(call("gordan", R"({"points":[[1,0],[1]]})").code == kMalformed);
  CHECK(call("gordan", "{").code == kMalformed);
  CHECK(call("member", R"({"part":{"rank":2,"forms":[[1,0]]}})").code == kMalformed);
  CHECK(call("no-such-command", "{}").code == kMalformed);

  auto flag = call("pi", R"({"part":{"rank":2,"forms":[[1,0],[2,0]]}})");
  CHECK(flag.code == kDomainError);
  CHECK(flag.body["error"]["kind"] == "InvalidFlag");

  auto pre = call("closure-u", R"({"part":{"rank":2,"forms":[]},"points":[[1,0],[-1,0]]})");
  CHECK(pre.code == kDomainError);
  CHECK(pre.body["error"]["kind"] == "PreconditionViolated");
}

TEST_CASE("canonical re-emission") {
  auto a = call("pi", R"({"part":{"rank":2,"forms":[[3,1],[0,1]]}})", true);
  auto b = call("pi", R"({"part":{"rank":2,"forms":[[6,2],[0,5]]}})", true);
  CHECK(a.body["canonical_input"] == b.body["canonical_input"]);
  CHECK(a.body["pi"] == b.body["pi"]);
}

TEST_CASE("fixture files are canonical and outputs byte-stable") {
  const auto fixtures = pt::load_fixtures();
  REQUIRE(fixtures.size() >= 59);
  for (const auto &fx : fixtures) {
    CAPTURE(fx.name);
    auto doc = fx.doc;
    const auto command = doc["command"].get<std::string>();
    doc["input"] = normalize_input(command, doc["input"]);
    CHECK(doc.dump() + "\n" == fx.text);

    const auto input = fx.doc["input"].dump();
    std::ostringstream first, second;
    CHECK(run_text(command, input, false, first) == kSuccess);
    run_text(command, input, false, second);
    CHECK(first.str() == second.str());
  }
}

TEST_CASE("command-line binary") {
  auto ok = call_binary("gordan", R"({"points":[[1,0],[0,1]]})");
  CHECK(ok.code == 0);
  CHECK(ok.body["empty"] == false);

  auto bad = call_binary("gordan", R"({"points":[[1,0],[0,1,2]]})");
  CHECK(bad.code == 2);

  auto domain = call_binary("pi", R"({"part":{"rank":2,"forms":[[0,0]]}})");
  CHECK(domain.code == 1);

  const auto fixture = (pt::fixture_dir() / "arrangement_lines_m3.json").string();
  std::ifstream in(fixture);
  auto doc = json::parse(in);
  auto facets = call_binary("facets", doc["input"].dump());
  CHECK(facets.code == 0);
  CHECK(facets.body["count"] == 13);
}
