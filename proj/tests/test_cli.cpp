#include "cli.hpp"
#include "nsymkit/coverage.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace nsymkit;

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

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("convert") {
    auto r = run({"convert", "nsym", "psi[3]", "--to", "h"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "3 h[3] - 2 h[1,2] - h[2,1] + h[1,1,1]\n");
    CHECK(run({"convert", "qsym", "F[2]", "--to", "M"}).out == "M[2] + M[1,1]\n");
    CHECK(run({"convert", "nsym", "h[2]", "--to", "r"}).out == "r[2]\n");
    r = run({"--format", "json", "convert", "nsym", "psi[2]", "--to", "h"});
    CHECK(r.out == R"({"degree":2,"basis":"h","terms":[{"index":[2],"coeff":"2"},{"index":[1,1],"coeff":"-1"}]})"
                   "\n");
  }

  TEST_CASE("matrix") {
    auto r = run({"matrix", "qsym", "F", "M", "2", "--csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "index,\"[2]\",\"[1,1]\"\n\"[2]\",1,1\n\"[1,1]\",0,1\n");
    r = run({"matrix", "named", "J_psi", "3", "--format", "csv"});
    CHECK(r.out ==
          "index,\"[3]\",\"[1,2]\",\"[2,1]\",\"[1,1,1]\"\n\"[3]\",0,0,0,1\n\"[1,2]\",0,0,1,0\n"
          "\"[2,1]\",0,1,0,0\n\"[1,1,1]\",1,0,0,0\n");
    r = run({"matrix", "named", "K", "1", "--csv"});
    CHECK(r.out == "index,\"[1]\"\n\"[1]\",1\n");
    r = run({"matrix", "nsym", "h", "phi", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"][0] == nlohmann::json::array({"1/2", "1/2"}));
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "series", "--n", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    r = run({"verify", "bricks", "--n", "2"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("[bricks] p_l = sum_u |OB_u^l| m_u") != std::string::npos);
    // Reproduced misprints only fail the run under --strict.
    CHECK(run({"verify", "matrices", "--n", "3", "--strict"}).code == cli::kExitFailed);
    r = run({"verify", "walls", "--n", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["all_printed_forms_hold"] == false);
  }

  TEST_CASE("verify all exercises every library operation") {
    coverage::reset();
    const auto r = run({"verify", "all", "--n", "6"});
    CHECK(r.code == cli::kExitOk);
    std::string missing;
    for (auto op : coverage::untouched()) missing += std::string(coverage::name(op)) + " ";
    CHECK_MESSAGE(missing.empty(), missing);
  }

  TEST_CASE("pair") {
    auto r = run({"pair", "F[2,1]", "r[2,1]"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "1\n");
    CHECK(run({"pair", "Psi[1,1]", "psi[1,1]"}).out == "2\n");
  }

  TEST_CASE("walls") {
    auto r = run({"walls", "--shape", "1,6,2,4", "--type", "1,1,3,2,2,3,1", "--stats"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("pb=6 fb=12") != std::string::npos);
    r = run({"walls", "--shape", "2,4,3", "--type", "2,2,1,1,3", "--indexed"});
    CHECK(r.out.find("indexed walls: 4") != std::string::npos);
    r = run({"walls", "--shape", "6,3", "--type", "3,3,2,1", "--tabloids"});
    CHECK(r.out.find("count=8 total_weight=45 ordered_count=3") != std::string::npos);
    r = run({"walls", "--shape", "1,2", "--type", "2,1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("course 1") != std::string::npos);
  }

  TEST_CASE("realize") {
    auto r = run({"realize", "psi 3", "--m", "3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out ==
          "x1x1x1 + x1x1x2 + x1x1x3 + x1x2x2 + x1x2x3 + x1x3x3 - x2x1x1 - x2x1x2 - x2x1x3 + x2x2x2 + x2x2x3 + "
          "x2x3x3 - x3x1x1 - x3x1x2 - x3x1x3 + x3x2x1 - x3x2x2 - x3x2x3 + x3x3x3\n");
    r = run({"realize", "M 2,1", "--m", "3", "--commutative"});
    CHECK(r.out == "x2^2x3 + x1^2x3 + x1^2x2\n");
    r = run({"realize", "h 2", "--m", "2", "--format", "json"});
    CHECK(r.out ==
          R"({"m":2,"terms":[{"word":[1,1],"coeff":"1"},{"word":[1,2],"coeff":"1"},{"word":[2,2],"coeff":"1"}]})"
          "\n");
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"convert", "nsym", "r[2", "--to", "h"}).code == cli::kExitUsage);
    CHECK(run({"convert", "nsym", "r[2]", "--to", "M"}).code == cli::kExitUsage);
    CHECK(run({"matrix", "named", "Q", "2"}).code == cli::kExitUsage);
    CHECK(run({"verify", "nonsense"}).code == cli::kExitUsage);
    CHECK(run({"verify", "oracle", "--n", "4", "--m", "3"}).code == cli::kExitUsage);
    CHECK(run({"--format", "xml", "verify"}).code == cli::kExitUsage);
    const auto r = run({"convert", "nsym", "h[1,1,1,1,1,1,1,1,1]", "--to", "r"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("error:") == 0);
  }

  TEST_CASE("the degree cap can be raised from the environment") {
    ::setenv("NSYMKIT_MAX_DEGREE", "9", 1);
    CHECK(run({"convert", "nsym", "h[1,1,1,1,1,1,1,1,1]", "--to", "r"}).code == cli::kExitOk);
    ::setenv("NSYMKIT_MAX_DEGREE", "many", 1);
    CHECK(run({"convert", "nsym", "h[2]", "--to", "r"}).code == cli::kExitUsage);
    ::unsetenv("NSYMKIT_MAX_DEGREE");
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands = {
        {"convert", "nsym", "phi[2,1,1]", "--to", "psi"},
        {"matrix", "nsym", "r", "phi", "4", "--format", "json"},
        {"verify", "walls", "--n", "4"},
        {"realize", "phi 4", "--m", "4"},
        {"walls", "--type", "1,1,1,1"},
    };
    for (const auto& c : commands) {
      const Run a = run(c), b = run(c);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
  }
}
