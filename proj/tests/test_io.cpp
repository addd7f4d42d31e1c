#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "morank/io.hpp"
#include "morank/problems.hpp"
#include "morank/rng.hpp"

using namespace morank;

TEST_CASE("format_double round-trips exactly") {
  Rng rng(13);
  for (int it = 0; it < 2000; ++it) {
    const double x = (rng.uniform01() - 0.5) * std::pow(10.0, rng.below(7));
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("point CSV round trip") {
  std::vector<ObjectiveVector> pts{{1.25, 2.5, 3.0}, {0.1, 0.2, 0.3}};
  std::ostringstream os;
  write_point_csv(os, pts);
  std::istringstream is(os.str());
  CHECK(read_point_csv(is) == pts);
}

TEST_CASE("ragged CSV rows name the offending line") {
  std::istringstream is("f1,f2\n1,2\n3\n");
  try {
    read_point_csv(is);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("bad numbers and empty files are rejected") {
  std::istringstream bad("f1,f2\n1,abc\n");
  CHECK_THROWS_AS(read_point_csv(bad), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_point_csv(empty), ParseError);
  std::istringstream header_only("f1,f2\n");
  CHECK_THROWS_AS(read_point_csv(header_only), ParseError);
}

TEST_CASE("tsp instance file round trip") {
  const ProblemInstance inst = generate_tsp(6, 3, -0.2, 99);
  std::ostringstream os;
  write_instance(os, inst);
  std::istringstream is(os.str());
  const ProblemInstance back = read_instance(is);
  const auto& a = std::get<TspInstance>(inst);
  const auto& b = std::get<TspInstance>(back);
  CHECK(a.n_cities == b.n_cities);
  CHECK(a.k == b.k);
  CHECK(a.tsp_pc == b.tsp_pc);
  CHECK(a.seed == b.seed);
  CHECK(a.matrices == b.matrices);
}

TEST_CASE("jsp instance file round trip") {
  const ProblemInstance inst = generate_jsp(8, 3, 20.0, 4);
  std::ostringstream os;
  write_instance(os, inst);
  std::istringstream is(os.str());
  const ProblemInstance back = read_instance(is);
  const auto& a = std::get<JspInstance>(inst);
  const auto& b = std::get<JspInstance>(back);
  CHECK(a.proc_time == b.proc_time);
  CHECK(a.due_date == b.due_date);
  CHECK(a.customer == b.customer);
}

TEST_CASE("instance writing is byte-stable") {
  std::ostringstream o1, o2;
  write_instance(o1, generate_tsp(5, 2, 0.2, 7));
  write_instance(o2, generate_tsp(5, 2, 0.2, 7));
  CHECK(o1.str() == o2.str());
}

TEST_CASE("malformed instance files are rejected") {
  std::istringstream wrong_magic("something-else 1\n");
  CHECK_THROWS_AS(read_instance(wrong_magic), ParseError);
  std::istringstream truncated(
      "morank-instance 1\nfamily tsp\ncities 4\nobjectives 1\npc 0\nseed 1\n"
      "matrix 1\n0 1\n");
  CHECK_THROWS_AS(read_instance(truncated), ParseError);
  std::istringstream bad_family(
      "morank-instance 1\nfamily sat\nvars 3\n");
  CHECK_THROWS_AS(read_instance(bad_family), ParseError);
}
