#include <doctest.h>

#include "wfloer/io.hpp"

using namespace wfloer;

namespace {

const char* kSample = R"(# sample
field Q
chord a weight=1 degree=0 location=inside
chord b weight=1 degree=1 action=3/2 location=outside from=L0 to=L1 winding=2
const d=1 F=- w=1,1 in=a out=b value=-2/3
empty a
)";

}  // namespace

TEST_CASE("round trip") {
  auto doc = parse_document(kSample);
  CHECK(doc.chords.size() == 2);
  CHECK(doc.table.entries.size() == 1);
  CHECK(doc.formal_points.count("a"));
  CHECK(*doc.chords[1].action == mpq_class(3, 2));
  auto text = serialize(doc);
  auto again = parse_document(text);
  CHECK(same_document(doc, again));
  CHECK(serialize(again) == text);
}

TEST_CASE("prime field values") {
  auto doc = parse_document("field 5\nchord a weight=1 degree=0\nchord b weight=1 degree=1\n"
                            "const d=1 F=- w=1,1 in=a out=b value=7\n");
  CHECK(doc.field.characteristic() == 5);
  CHECK(doc.table.entries.begin()->second.to_string() == "2 mod 5");
}

TEST_CASE("rejections carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("field Q\nchord a weight=1\n") == 2);
  CHECK(line_of("field Q\nchord a weight=0 degree=0\n") == 2);
  CHECK(line_of("field Q\nchord a weight=1 degree=0 colour=red\n") == 2);
  CHECK(line_of("field Q\nchord a weight=1 degree=0 degree=1\n") == 2);
  CHECK(line_of("field Q\nchord a weight=1 degree=0\nchord a weight=1 degree=0\n") == 3);
  CHECK(line_of("chord a weight=1 degree=0\nfield Q\n") == 2);
  CHECK(line_of("field 4\n") == 1);
  CHECK(line_of("field Q\nbogus\n") == 2);
  CHECK(line_of("field Q\n\n# c\nconst d=1 F=- w=1,1 in=a out=b value=x\n") == 4);
  CHECK(line_of("field Q\nchord a weight=1 degree=0 location=middle\n") == 2);
  CHECK(line_of("field Q\nempty a\nempty a\n") == 3);
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("-").empty());
  CHECK(parse_int_list("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK_THROWS(parse_int_list("1,,2"));
}
