#include <doctest.h>

#include "sl2real/classify.hpp"
#include "sl2real/cli.hpp"
#include "sl2real/errors.hpp"
#include "sl2real/io.hpp"
#include "sl2real/realness.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace sl2real;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& s) {
  std::vector<Json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("parse_matrix") {
  CHECK(parse_matrix("15,4;11,3") == Mat2{15, 4, 11, 3});
  CHECK(parse_matrix(" -1 , 0 ; 0 , -1 ") == -Mat2{});
  CHECK(parse_matrix("[[2,1],[1,1]]") == Mat2{2, 1, 1, 1});
  CHECK(parse_matrix(R"([["2","1"],["1","1"]])") == Mat2{2, 1, 1, 1});
  CHECK(parse_matrix("010,0;0,1") == Mat2{10, 0, 0, 1});
  CHECK(parse_matrix("123456789012345678901234567890,0;0,1").a ==
        Int("123456789012345678901234567890"));
  for (const char* bad : {"1,2;3", "a,b;c,d", "", "[[1,2],[3]]", "1,2;3,4;5", "1.5,0;0,1"}) {
    INFO(bad);
    try {
      parse_matrix(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("json round trip") {
  const Mat2 m{-7, 3, 12, 5};
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(to_json(m).dump() == R"([["-7","3"],["12","5"]])");
  CHECK(to_json(Cycle({2, 1, 1, 3})).dump() == R"(["1","1","3","2"])");
}

TEST_CASE("real") {
  const auto r = run({"real", "15,4;11,3"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["is_real"] == true);
  CHECK(matrix_from_json(j["factorization"]["c_plus"]) == Mat2{3, -4, 2, -3});
  CHECK(matrix_from_json(j["factorization"]["c_minus"]) == Mat2{1, 0, -3, -1});
  CHECK(j["verified"] == true);

  const Json n = Json::parse(run({"real", "12,5;7,3"}).out);
  CHECK(n["is_real"] == false);
  CHECK(n["factorization"].is_null());
}

TEST_CASE("classify and cycle") {
  const Json c = Json::parse(run({"classify", "0,1;-1,0"}).out);
  CHECK(c["class"]["tag"] == "Elliptic");
  CHECK(c["class"]["trace"] == 0);

  const Json y = Json::parse(run({"cycle", "12,5;7,3"}).out);
  CHECK(y["cycle"] == Json::parse(R"(["1","1","2","2"])"));
  CHECK(y["sign"] == 1);
  CHECK(y["verified"] == true);
}

TEST_CASE("conjugate, oracle, weakly-real, series-check") {
  const Json g = Json::parse(run({"conjugate", "2,1;1,1", "1,1;1,2", "--group", "gl"}).out);
  CHECK(g["conjugate"] == true);
  const Json s = Json::parse(run({"conjugate", "1,1;0,1", "1,-1;0,1", "--group", "sl"}).out);
  CHECK(s["conjugate"] == false);

  const Json o = Json::parse(run({"oracle", "2,1;1,1", "--bound", "2", "--mode", "conjugator"}).out);
  CHECK(o["bound"] == 2);
  CHECK(o["verified"] == true);
  const Mat2 q = matrix_from_json(o["witness"]);
  CHECK(q.det() == -1);

  const Json e = Json::parse(run({"oracle", "12,5;7,3", "--bound", "10"}).out);
  CHECK(e["witness"].is_null());

  const Json w = Json::parse(run({"weakly-real", "12,5;7,3", "--bound", "25"}).out);
  CHECK(w["consistent"] == true);

  const Json k = Json::parse(run({"series-check", "12,5;7,3"}).out);
  CHECK(k["consistent"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "1,2;3"}).code == cli::kExitParse);
  CHECK(run({"classify", "2,0;0,2"}).code == cli::kExitDomain);
  CHECK(run({"cycle", "1,1;0,1"}).code == cli::kExitDomain);
  CHECK(run({"frobnicate"}).code == cli::kExitParse);
  CHECK(run({"svg", "--depth", "13"}).code == cli::kExitDomain);
  CHECK(run({"oracle", "2,1;1,1", "--mode", "sideways"}).code == cli::kExitParse);
  const auto bad = run({"real", "x"});
  CHECK(bad.code == cli::kExitParse);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("stdin batch") {
  const auto r = run({"real", "-"}, "[[\"2\",\"1\"],[\"1\",\"1\"]]\n\n0,1;-1,0\n12,5;7,3\n");
  REQUIRE(r.code == cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0]["is_real"] == true);
  CHECK(out[1]["is_real"] == true);
  CHECK(out[2]["is_real"] == false);
}

TEST_CASE("cf cap from the environment") {
  ::setenv("SL2REAL_CF_CAP", "0", 1);
  const auto capped = run({"cycle", "1,1;1,2"});
  ::unsetenv("SL2REAL_CF_CAP");
  CHECK(capped.code == cli::kExitDomain);
  CHECK(capped.err.find("ReductionOverflow") != std::string::npos);
  CHECK(run({"cycle", "1,1;1,2"}).code == cli::kExitOk);
}

TEST_CASE("atlas") {
  const auto a = run({"atlas", "--max-entry", "6"});
  const auto b = run({"atlas", "--max-entry", "6"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);

  const auto records = lines(a.out);
  REQUIRE(records.size() > 10);
  std::vector<Mat2> reps;
  for (const Json& r : records) {
    const Mat2 m = matrix_from_json(r["matrix"]);
    CHECK(m.max_abs_entry() <= 6);
    CHECK(to_json(classify(m)) == r["class"]);
    CHECK(r["is_real"] == is_real(m));
    reps.push_back(m);
  }
  // One record per class.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i].trace() == reps[j].trace()) CHECK_FALSE(conjugacy_test(reps[i], reps[j], Group::GL));

  const auto real = lines(run({"atlas", "--max-entry", "6", "--real-only"}).out);
  std::size_t expected = 0;
  for (const Json& r : records) expected += r["is_real"] == true;
  CHECK(real.size() == expected);
  for (const Json& r : real) CHECK(r["is_real"] == true);
}

TEST_CASE("atlas covers every class of small matrices") {
  const auto records = lines(run({"atlas", "--max-entry", "4"}).out);
  std::set<std::string> classes;
  for (const Json& r : records) classes.insert(r["class"].dump());
  // Canonical representatives of classes met by matrices with entries <= 1
  // all have entries <= 4.
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d) {
          const Mat2 m{a, b, c, d};
          if (m.det() != 1 || m.is_central()) continue;
          INFO(m);
          CHECK(classes.count(to_json(classify(m)).dump()) == 1);
        }
}

TEST_CASE("svg output file") {
  const auto path = std::filesystem::temp_directory_path() / "sl2real_cli_test.svg";
  std::filesystem::remove(path);
  const auto r = run({"svg", "--depth", "3", "--axis", "2,1;1,1", "-o", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("id=\"axis\"") != std::string::npos);
  std::filesystem::remove(path);

  const auto s = run({"svg", "--depth", "1"});
  CHECK(s.out.find("class=\"geodesic\"") != std::string::npos);
}
