#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"
#include "bracekit/io.hpp"
#include "bracekit/ybe.hpp"

using namespace bracekit;

namespace {

GroupTable parse_group_text(const std::string& text) {
  std::istringstream in(text);
  return read_group_text(in);
}

SkewBrace parse_brace_text(const std::string& text) {
  std::istringstream in(text);
  return read_brace_text(in);
}

YbeSolution parse_ybe_text(const std::string& text) {
  std::istringstream in(text);
  return read_ybe_text(in);
}

std::string group_text(const GroupTable& g) {
  std::ostringstream out;
  write_group_text(out, g);
  return out.str();
}

std::string brace_text(const SkewBrace& b) {
  std::ostringstream out;
  write_brace_text(out, b);
  return out.str();
}

std::string ybe_text(const YbeSolution& r) {
  std::ostringstream out;
  write_ybe_text(out, r);
  return out.str();
}

struct ParsePosition {
  int line = -1;
  int column = -1;
};

template <typename Fn>
ParsePosition position_of(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {};
}

}  // namespace

TEST_CASE("text formats round trip byte-identically") {
  GroupTable d4 = dihedral_group(4);
  REQUIRE(parse_group_text(group_text(d4)) == d4);
  REQUIRE(group_text(parse_group_text(group_text(d4))) == group_text(d4));

  SkewBrace b = d4q8_brace();
  REQUIRE(parse_brace_text(brace_text(b)) == b);
  REQUIRE(brace_text(parse_brace_text(brace_text(b))) == brace_text(b));

  YbeSolution r = ybe_from_brace(b);
  REQUIRE(parse_ybe_text(ybe_text(r)) == r);
  REQUIRE(ybe_text(parse_ybe_text(ybe_text(r))) == ybe_text(r));
}

TEST_CASE("exact text forms") {
  REQUIRE(group_text(cyclic_group(2)) == "group 2\n0 1\n1 0\n");
  REQUIRE(brace_text(trivial_brace(cyclic_group(2))) ==
          "brace 2\ndot:\n0 1\n1 0\ncircle:\n0 1\n1 0\n");
  REQUIRE(ybe_text(ybe_from_brace(trivial_brace(cyclic_group(2)))) ==
          "ybe 2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 1\n1 1 -> 1 1\n");
}

TEST_CASE("group text parse errors carry positions") {
  ParsePosition p = position_of([] { parse_group_text("grupo 2\n0 1\n1 0\n"); });
  REQUIRE(p.line == 1);
  REQUIRE(p.column == 1);

  p = position_of([] { parse_group_text("group x\n"); });
  REQUIRE(p.line == 1);
  REQUIRE(p.column == 7);

  p = position_of([] { parse_group_text("group 0\n"); });
  REQUIRE(p.line == 1);
  REQUIRE(p.column == 7);

  // entry out of range 0..n-1
  p = position_of([] { parse_group_text("group 2\n0 7\n1 0\n"); });
  REQUIRE(p.line == 2);
  REQUIRE(p.column == 3);

  // truncated input
  p = position_of([] { parse_group_text("group 2\n0 1\n1"); });
  REQUIRE(p.line == 3);

  p = position_of([] { parse_group_text("group 2\n0 1\n1 0\njunk\n"); });
  REQUIRE(p.line == 4);
  REQUIRE(p.column == 1);
}

TEST_CASE("tables must put the identity at index 0") {
  try {
    parse_group_text("group 2\n1 0\n0 1\n");
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::IdentityMismatch);
    REQUIRE(e.witness() == std::vector<int>{1});
  }
}

TEST_CASE("brace text parsing") {
  // keyword structure
  ParsePosition p = position_of([] { parse_brace_text("brace 2\n0 1\n1 0\n"); });
  REQUIRE(p.line == 2);
  REQUIRE(p.column == 1);  // expected 'dot:'

  p = position_of([] {
    parse_brace_text("brace 2\ndot:\n0 1\n1 0\nring:\n0 1\n1 0\n");
  });
  REQUIRE(p.line == 5);
  REQUIRE(p.column == 1);  // expected 'circle:'

  // a pair of valid groups that is not a brace
  try {
    parse_brace_text(
        "brace 4\n"
        "dot:\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
        "circle:\n0 1 2 3\n1 0 3 2\n2 3 1 0\n3 2 0 1\n");
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::BraceRelationFails);
    REQUIRE(e.witness() == std::vector<int>{2, 1, 1});
  }
}

TEST_CASE("solution text parsing enforces row-major keys") {
  // the 1 0 and 0 1 lines are exchanged
  ParsePosition p = position_of([] {
    parse_ybe_text("ybe 2\n0 0 -> 0 0\n1 0 -> 0 1\n0 1 -> 1 0\n1 1 -> 1 1\n");
  });
  REQUIRE(p.line == 3);
  REQUIRE(p.column == 1);

  p = position_of([] { parse_ybe_text("ybe 2\n0 0 => 0 0\n"); });
  REQUIRE(p.line == 2);
  REQUIRE(p.column == 5);

  p = position_of([] { parse_ybe_text("ybe 2\n0 0 -> 0 0\n"); });
  REQUIRE(p.line == 3);  // truncated at end of line 2's newline
}

TEST_CASE("json forms are exact and round trip") {
  REQUIRE(group_json(cyclic_group(2)) == R"({"n":2,"table":[[0,1],[1,0]]})");
  REQUIRE(brace_json(trivial_brace(cyclic_group(2))) ==
          R"({"n":2,"dot":[[0,1],[1,0]],"circle":[[0,1],[1,0]]})");
  REQUIRE(ybe_json(ybe_from_brace(trivial_brace(cyclic_group(2)))) ==
          R"({"n":2,"map":[[0,0],[1,0],[0,1],[1,1]]})");

  GroupTable d4 = dihedral_group(4);
  std::istringstream gin(group_json(d4));
  REQUIRE(read_group_json(gin) == d4);

  SkewBrace b = d4q8_brace();
  std::istringstream bin(brace_json(b));
  REQUIRE(read_brace_json(bin) == b);

  YbeSolution r = ybe_from_brace(b);
  std::istringstream rin(ybe_json(r));
  REQUIRE(read_ybe_json(rin) == r);
}

TEST_CASE("json reading tolerates unknown fields and rejects bad shapes") {
  std::istringstream ok(R"({"n":2,"table":[[0,1],[1,0]],"comment":"ignored"})");
  REQUIRE(read_group_json(ok) == cyclic_group(2));

  for (const char* bad : {
           R"({)",                                  // malformed json
           R"({"table":[[0,1],[1,0]]})",            // missing n
           R"({"n":2})",                            // missing table
           R"({"n":"2","table":[[0,1],[1,0]]})",    // n is not an integer
           R"({"n":2,"table":[[0,1]]})",            // wrong row count
           R"({"n":2,"table":[[0,1],[1]]})",        // ragged row
           R"({"n":2,"table":[[0,1],[1,2]]})",      // entry out of range
           R"({"n":2,"table":[[0,1],[1,0.5]]})",    // non-integer entry
           R"({"n":0,"table":[]})",                 // order out of range
       }) {
    std::istringstream in(bad);
    REQUIRE_THROWS_AS(read_group_json(in), ParseError);
  }

  std::istringstream short_map(R"({"n":2,"map":[[0,0],[1,0]]})");
  REQUIRE_THROWS_AS(read_ybe_json(short_map), ParseError);
  std::istringstream bad_pair(R"({"n":2,"map":[[0,0],[1,0],[0,1],[1]]})");
  REQUIRE_THROWS_AS(read_ybe_json(bad_pair), ParseError);
}

TEST_CASE("read_brace_any sniffs the format") {
  SkewBrace b = d4q8_brace();
  std::istringstream text(brace_text(b));
  REQUIRE(read_brace_any(text) == b);
  std::istringstream json("  \n " + brace_json(b));
  REQUIRE(read_brace_any(json) == b);

  GroupTable d4 = dihedral_group(4);
  std::istringstream gtext(group_text(d4));
  REQUIRE(read_group_any(gtext) == d4);
  std::istringstream gjson(group_json(d4));
  REQUIRE(read_group_any(gjson) == d4);
}

TEST_CASE("element labels") {
  REQUIRE(element_labels("D4") ==
          std::vector<std::string>{"1", "η", "η^2", "η^3", "π", "ηπ", "η^2π", "η^3π"});
  REQUIRE(element_labels("Q8") ==
          std::vector<std::string>{"1", "s", "s^2", "s^3", "t", "st", "s^2t", "s^3t"});
  REQUIRE(element_labels("C4") == std::vector<std::string>{"1", "g", "g^2", "g^3"});
  REQUIRE(element_labels("C1") == std::vector<std::string>{"1"});
  REQUIRE(element_labels("C2xC2") ==
          std::vector<std::string>{"(1,1)", "(1,g)", "(g,1)", "(g,g)"});
  // pairing follows the row-major index of direct products
  std::vector<std::string> d4c2 = element_labels("D4xC2");
  REQUIRE(d4c2.size() == 16);
  REQUIRE(d4c2[0] == "(1,1)");
  REQUIRE(d4c2[3] == "(η,g)");
  REQUIRE(d4c2[8] == "(π,1)");
  try {
    element_labels("S3");
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::UnknownName);
  }
}

TEST_CASE("generator names for the subgroup language") {
  using Names = std::vector<std::pair<std::string, Index>>;
  REQUIRE(generator_names("D4") == Names{{"eta", 1}, {"pi", 4}});
  REQUIRE(generator_names("Q8") == Names{{"s", 1}, {"t", 4}});
  REQUIRE(generator_names("C6") == Names{{"g", 1}});
  REQUIRE(generator_names("C1") == Names{});
  REQUIRE(generator_names("C2xC2") == Names{});
  REQUIRE_THROWS_AS(generator_names("S3"), Error);
  REQUIRE_THROWS_AS(generator_names("S3xC2"), Error);
}
