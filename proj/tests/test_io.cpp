#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "emptybox/generators.hpp"
#include "emptybox/io.hpp"
#include "emptybox/partitions.hpp"

using namespace emptybox;

TEST_CASE("format_double emits the shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(parse_double("0.1") == 0.1);
  CHECK(parse_double(" 0.5 ") == 0.5);
  CHECK(parse_double("1e-3") == 1e-3);
  CHECK_THROWS_AS(parse_double("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
}

TEST_CASE("format/parse round-trips arbitrary doubles exactly") {
  SplitMix64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.next_unit();
    CHECK(parse_double(format_double(x)) == x);
  }
  CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("points csv writes a dimension header and exact coordinates") {
  const PointSet s(2, {0.5, 0.25, 0.75, 1.0});
  std::ostringstream out;
  write_points_csv(out, s, {"generator=test"});
  CHECK(out.str() == "# d=2 n=2\n# generator=test\n0.5,0.25\n0.75,1\n");
}

TEST_CASE("points csv reads rows, comments and blank lines") {
  std::istringstream in("# anything\n\n0.5,0.25\n0.75,1\n");
  const PointSet s = read_points_csv(in);
  CHECK(s.dim() == 2);
  CHECK(s.size() == 2);
  CHECK(s.coord(0, 0) == 0.5);
  CHECK(s.coord(0, 1) == 0.25);
  CHECK(s.coord(1, 1) == 1.0);
}

TEST_CASE("points csv round-trips generated sets exactly") {
  const PointSet s = hammersley(16, 3);
  std::ostringstream out;
  write_points_csv(out, s, {});
  std::istringstream in(out.str());
  const PointSet back = read_points_csv(in);
  REQUIRE(back.dim() == s.dim());
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      CHECK(back.coord(i, j) == s.coord(i, j));
}

TEST_CASE("empty point sets keep their dimension through the header") {
  const PointSet s(5, {});
  std::ostringstream out;
  write_points_csv(out, s, {});
  CHECK(out.str() == "# d=5 n=0\n");
  std::istringstream in(out.str());
  const PointSet back = read_points_csv(in);
  CHECK(back.dim() == 5);
  CHECK(back.size() == 0);
}

TEST_CASE("points csv dimension resolution") {
  // explicit hint beats the header
  std::istringstream a("# d=3\n");
  CHECK(read_points_csv(a, 2).dim() == 2);
  // data rows beat everything
  std::istringstream b("# d=7\n0.5,0.5\n");
  CHECK(read_points_csv(b).dim() == 2);
  // no rows, no header, no hint: undecidable
  std::istringstream c("");
  CHECK_THROWS_AS(read_points_csv(c), std::invalid_argument);
  std::istringstream d("");
  CHECK(read_points_csv(d, 4).dim() == 4);
}

TEST_CASE("points csv rejects malformed input") {
  std::istringstream ragged("0.1,0.2\n0.3\n");
  CHECK_THROWS_AS(read_points_csv(ragged), std::invalid_argument);
  std::istringstream junk("0.1,oops\n");
  CHECK_THROWS_AS(read_points_csv(junk), std::invalid_argument);
  // coordinates outside the unit cube fail point-set validation
  std::istringstream outside("2.0,0.5\n");
  CHECK_THROWS_AS(read_points_csv(outside), std::invalid_argument);
  CHECK_THROWS_AS(read_points_csv_file("/nonexistent/pts.csv"),
                  std::runtime_error);
}

TEST_CASE("box json has sorted keys and exact dyadic values") {
  CHECK(box_to_json(AxisBox({0.0, 0.0}, {0.25, 1.0})) ==
        "{\"hi\":[0.25,1.0],\"lo\":[0.0,0.0],\"volume\":0.25}");
  CHECK(box_to_json(AxisBox({0.0}, {1.0})) ==
        "{\"hi\":[1.0],\"lo\":[0.0],\"volume\":1.0}");
}

TEST_CASE("partition strings canonicalize on parse") {
  CHECK(partition_to_string({{1, 2}, {3, 4}}) == "1,2|3,4");
  CHECK(partition_to_string({{7}}) == "7");
  CHECK(parse_partition("4,3|2,1") == Partition{{1, 2}, {3, 4}});
  CHECK(parse_partition(" 1 , 2 | 3 , 4 ") == Partition{{1, 2}, {3, 4}});
  CHECK(parse_partition("5|1,3|2,4") == Partition{{1, 3}, {2, 4}, {5}});
  CHECK_THROWS_AS(parse_partition("1,x|2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,|2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
}

TEST_CASE("partition family text round-trips") {
  const PartitionFamily pf = construct_binary_optimal(5);
  std::ostringstream out;
  write_partition_family(out, pf);
  CHECK(out.str() == "1,2|3,4,5\n1,3|2,4,5\n1,4|2,3,5\n1,5|2,3,4\n");
  std::istringstream in(out.str());
  CHECK(read_partition_family(in) == pf);
}

TEST_CASE("partition family reader infers the ground set") {
  std::istringstream in("# family\n1,2|3,4\n\n1,3|2,4\n");
  const PartitionFamily pf = read_partition_family(in);
  CHECK(pf.parts() == 2);
  CHECK(pf.ground() == 4);
  CHECK(pf.size() == 2);
}

TEST_CASE("partition family reader rejects inconsistent input") {
  std::istringstream mixed("1,2|3,4\n1|2|3,4\n");
  CHECK_THROWS_AS(read_partition_family(mixed), std::invalid_argument);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_partition_family(empty), std::invalid_argument);
  // element 4 missing from the inferred ground set {1,...,5}
  std::istringstream gap("1,2|3,5\n");
  CHECK_THROWS_AS(read_partition_family(gap), std::invalid_argument);
}

TEST_CASE("vector family text round-trips") {
  const VectorFamily vf(2, 5,
                        {{0, 0, 1, 1, 1},
                         {0, 1, 0, 1, 1},
                         {0, 1, 1, 0, 1},
                         {0, 1, 1, 1, 0}});
  std::ostringstream out;
  write_vector_family(out, vf);
  CHECK(out.str() == "00111\n01011\n01101\n01110\n");
  std::istringstream in(out.str());
  CHECK(read_vector_family(in) == vf);
}

TEST_CASE("vector family reader infers the alphabet") {
  std::istringstream ternary("012\n120\n");
  const VectorFamily vf = read_vector_family(ternary);
  CHECK(vf.alphabet() == 3);
  CHECK(vf.length() == 3);
  // a single all-zeros row still implies a binary alphabet
  std::istringstream zeros("00\n");
  CHECK(read_vector_family(zeros).alphabet() == 2);
  // an explicit alphabet overrides inference
  std::istringstream wide("01\n10\n");
  CHECK(read_vector_family(wide, 4).alphabet() == 4);
  // ...but must still admit every symbol
  std::istringstream narrow("012\n");
  CHECK_THROWS_AS(read_vector_family(narrow, 2), std::invalid_argument);
}

TEST_CASE("vector family reader rejects malformed input") {
  std::istringstream empty("# nothing here\n");
  CHECK_THROWS_AS(read_vector_family(empty), std::invalid_argument);
  std::istringstream ragged("0011\n011\n");
  CHECK_THROWS_AS(read_vector_family(ragged), std::invalid_argument);
  std::istringstream junk("00X1\n");
  CHECK_THROWS_AS(read_vector_family(junk), std::invalid_argument);
}
