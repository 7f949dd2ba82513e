#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "pvf/cli/app.hpp"
#include "pvf/random.hpp"

namespace pvf {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Parse, Poly) {
  const Poly p = cli::parse_poly("3*x^2*y - 1/2", 2);
  EXPECT_EQ(p, Poly::from_terms(2, {{Monomial({2, 1}), Rational(3)}, {Monomial({0, 0}), make_rational(-1, 2)}}));
  EXPECT_EQ(cli::parse_poly("x1*x3 - (x2 + 1)^2", 3), cli::parse_poly("x*z - y^2 - 2*y - 1", 3));
  EXPECT_EQ(cli::parse_poly("-x^2", 1), Poly::constant(1, -1) * Poly::variable(1, 0) * Poly::variable(1, 0));
  EXPECT_EQ(cli::parse_poly("x4", 4), Poly::variable(4, 3));
  EXPECT_EQ(cli::parse_poly("2/4", 1), Poly::constant(1, make_rational(1, 2)));
}

TEST(Parse, Errors) {
  auto offset = [](std::string_view text, std::size_t n) -> std::size_t {
    try {
      cli::parse_poly(text, n);
    } catch (const cli::ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset("2x", 2), 1u);       // no implicit multiplication
  EXPECT_EQ(offset("x + w", 2), 4u);    // unknown variable
  EXPECT_EQ(offset("z", 2), 0u);        // alias beyond n
  EXPECT_EQ(offset("x4", 4 - 1), 0u);   // index beyond n
  EXPECT_EQ(offset("x^", 2), 2u);
  EXPECT_EQ(offset("(x + y", 2), 6u);
  EXPECT_EQ(offset("1/0", 1), 2u);
  EXPECT_EQ(offset("x", 4), 0u);        // no aliases when n > 3
  try {
    cli::parse_fields("[1, 0]; [x, q]");
    FAIL();
  } catch (const cli::ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  EXPECT_THROW(cli::parse_field("[1, 0]", 3), DimensionMismatch);
}

TEST(Parse, FieldsAndMaps) {
  EXPECT_EQ(cli::parse_field("[1, 0]", 2), VectorField::coordinate(2, 0));
  EXPECT_EQ(cli::parse_map("[x + y^2, y]").dimension(), 2u);
  EXPECT_EQ(cli::parse_fields("[1,0];[0,1]").size(), 2u);
  const auto w = cli::parse_word("affine:[[1,0],[0,2]];[1,0].elem:2:x^2");
  EXPECT_EQ(materialize(w), cli::parse_map("[x + 1, 2*y + 2*x^2]"));
  const auto l = cli::parse_sl_map("[1,0];[0,0];[0,1/2]");
  EXPECT_EQ(l.dimension(), 2u);
  EXPECT_THROW(cli::parse_word("elem:1:y"), cli::ParseError);  // n not inferable
  EXPECT_THROW(cli::parse_word("elem:1:x", 2), DomainError);   // shift involves x_1
}

TEST(Parse, PrintRoundtrip) {
  Generator gen(42);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const Poly p = gen.poly(n, 4, 6, 50);
    for (auto naming : {VariableNaming::kAuto, VariableNaming::kIndexed}) {
      EXPECT_EQ(cli::parse_poly(to_string(p, naming), n), p) << to_string(p, naming);
    }
    const auto f = gen.field(n, 3);
    EXPECT_EQ(cli::parse_field(to_string(f), n), f);
  }
  EXPECT_EQ(to_string(cli::parse_poly("3*x^2*y - 1/2", 2)), "3*x^2*y - 1/2");
}

TEST(Cli, SpecExamples) {
  auto r = run({"bracket", "--n", "2", "[0,x]", "[y,0]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[x, -y]\n");
  r = run({"pullback", "--map", "[x+y^2, y]", "--field", "[0,1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[-2*y, 1]\n");
  r = run({"frame", "analyze", "--fields", "[1,0];[-2*y,1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frame=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("det=1\n"), std::string::npos);
  EXPECT_NE(r.out.find("flat=(y^2 + x, y)\n"), std::string::npos);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"div", "[x^2, y]"}).out, "2*x + 1\n");
  EXPECT_EQ(run({"apply", "--field", "[x, y]", "--poly", "x^2*y"}).out, "3*x^2*y\n");
  EXPECT_EQ(run({"ad", "--word", "affine:[[2,0],[0,2]];[0,0]", "--field", "[x^2, 0]"}).out, "[1/2*x^2, 0]\n");
  EXPECT_EQ(run({"etale", "--map", "[x + y, x - y]"}).out, "etale=true\ndet=-2\n");
  EXPECT_EQ(run({"darboux", "--fields", "[x,0];[0,y]", "--oracle", "--degree", "1"}).out,
            "witness=x*y\noracle=x\nagree=true\n");
  EXPECT_EQ(run({"affine", "solve", "--images", "[1,0];[0,1];[1,-1]"}).out, "[1, 1]\n");
  const auto c = run({"affine", "cocycle", "--images", "[1,0];[0,0];[0,0]"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("cocycle=false"), std::string::npos);
  const auto v = run({"--seed", "3", "verify", "--only", "jacobi,leibniz", "--cases", "5"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("jacobi 5/5"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bracket", "[x]"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"div", "[x, y"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bracket", "[x, y]", "[1, 0, 0]"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--only", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  const auto ne = run({"pullback", "--map", "[x^2, y]", "--field", "[1, 0]"});
  EXPECT_EQ(ne.code, cli::kExitDomain);
  EXPECT_NE(ne.err.find("not-etale"), std::string::npos);
  EXPECT_EQ(run({"frame", "analyze", "--fields", "[1,0];[0,x]"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"affine", "solve", "--images", "[1,0];[0,0];[0,0]"}).code, cli::kExitDomain);
}

TEST(Cli, JsonSchemaAndDeterminism) {
  const std::vector<std::vector<std::string>> invocations = {
      {"--json", "bracket", "[0,x]", "[y,0]"},
      {"--json", "frame", "analyze", "--fields", "[1,0];[-2*y,1]"},
      {"--json", "frame", "analyze", "--fields", "[1,0];[0,x]"},
      {"--json", "darboux", "--fields", "[1,0];[y,0]", "--oracle"},
      {"--json", "div", "[x, q]"},
      {"--json", "verify", "--only", "antisymmetry", "--cases", "3"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    const auto doc = nlohmann::json::parse(a.out);
    ASSERT_TRUE(doc.is_object());
    EXPECT_EQ(doc.size(), 4u);
    EXPECT_TRUE(doc["op"].is_string());
    EXPECT_TRUE(doc["inputs"].is_object());
    ASSERT_TRUE(doc.contains("result"));
    if (a.code == 0) {
      EXPECT_TRUE(doc["error"].is_null());
    } else {
      EXPECT_TRUE(doc["result"].is_null());
      EXPECT_TRUE(doc["error"]["kind"].is_string());
      EXPECT_TRUE(doc["error"]["message"].is_string());
    }
  }
  const auto doc = nlohmann::json::parse(run({"--json", "frame", "analyze", "--fields", "[1,0];[0,x]"}).out);
  EXPECT_EQ(doc["error"]["kind"], "not-commuting");
  EXPECT_EQ(doc["error"]["bracket"], "[0, 1]");
  const auto parse = nlohmann::json::parse(run({"--json", "div", "[x, q]"}).out);
  EXPECT_EQ(parse["error"]["offset"], 4);
}

}  // namespace
}  // namespace pvf
