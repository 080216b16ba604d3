#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "cornerdet/errors.hpp"
#include "cornerdet/report.hpp"

using cornerdet::collapses_to_real;
using cornerdet::Cplx;
using cornerdet::CsvWriter;
using cornerdet::escape_json_string;
using cornerdet::format_complex_json;
using cornerdet::format_complex_literal;
using cornerdet::format_integer;
using cornerdet::format_number;
using cornerdet::JsonBuilder;

TEST_CASE("numbers that look integral get a .0 suffix") {
  CHECK(format_number(336.0) == "336.0");
  CHECK(format_number(-4.0) == "-4.0");
  CHECK(format_number(0.0) == "0.0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(108.0, 12) == "108.0");
  // Large magnitudes keep their exponent notation untouched.
  CHECK(format_number(1e300).find('e') != std::string::npos);
  CHECK(format_integer(343) == "343");
  CHECK(format_integer(-7) == "-7");
}

TEST_CASE("round trip at full precision") {
  std::vector<double> values = {1.0 / 3.0,       4.0 / 7.0, 3.141592653589793,
                                6.02214076e23,   1e-17,     -0.0,
                                335.99999999999579, 2.2250738585072014e-308};
  for (double v : values) {
    std::string s = format_number(v, 17);
    double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
  }
}

TEST_CASE("precision is clamped and honored") {
  CHECK(format_number(335.99999999999579, 12) == "336.0");
  CHECK(format_number(335.99999999999579, 17) == "335.99999999999579");
  CHECK(format_number(1.0 / 3.0, 3) == "0.333");
  // Out-of-range precision clamps instead of corrupting the format string.
  CHECK(format_number(1.0 / 3.0, 0) == format_number(1.0 / 3.0, 1));
  CHECK(format_number(1.0 / 3.0, 99) == format_number(1.0 / 3.0, 17));
}

TEST_CASE("collapse rule for complex values") {
  CHECK(collapses_to_real(Cplx(1.0, 0.0)));
  CHECK(collapses_to_real(Cplx(0.0, 0.0)));
  CHECK(collapses_to_real(Cplx(1.0, 1e-15)));
  CHECK(collapses_to_real(Cplx(1.0, 1e-12)));  // boundary included
  CHECK(!collapses_to_real(Cplx(1.0, 1e-11)));
  CHECK(!collapses_to_real(Cplx(0.0, 1.0)));
  CHECK(!collapses_to_real(Cplx(1e-15, 1.0)));
}

TEST_CASE("complex JSON fragments") {
  CHECK(format_complex_json(Cplx(3.0, 0.0)) == "3.0");
  CHECK(format_complex_json(Cplx(1.0, 1e-15)) == "1.0");
  CHECK(format_complex_json(Cplx(0.0, 2.0)) == "{\"re\":0.0,\"im\":2.0}");
  CHECK(format_complex_json(Cplx(1.5, -2.0)) == "{\"re\":1.5,\"im\":-2.0}");
}

TEST_CASE("complex flat literals") {
  CHECK(format_complex_literal(Cplx(1.5, -2.0)) == "1.5-2.0i");
  CHECK(format_complex_literal(Cplx(0.0, 1.0)) == "0.0+1.0i");
  CHECK(format_complex_literal(Cplx(4.0, 0.0)) == "4.0");
}

TEST_CASE("string escaping") {
  CHECK(escape_json_string("plain") == "plain");
  CHECK(escape_json_string("a\"b") == "a\\\"b");
  CHECK(escape_json_string("a\\b") == "a\\\\b");
  CHECK(escape_json_string("line\nbreak") == "line\\nbreak");
  CHECK(escape_json_string(std::string(1, '\x01')) == "\\u0001");
}

TEST_CASE("object builder keeps insertion order and emits valid JSON") {
  JsonBuilder b;
  b.add_integer("n", 6)
      .add_number("exact", 336.0, 12)
      .add_complex("ratio", Cplx(0.5, -0.25), 12)
      .add_string("name", "x\"y")
      .add_bool("ok", true)
      .add_raw("list", "[1,2]");
  std::string out = b.str();
  CHECK(out ==
        "{\"n\":6,\"exact\":336.0,\"ratio\":{\"re\":0.5,\"im\":-0.25},"
        "\"name\":\"x\\\"y\",\"ok\":true,\"list\":[1,2]}");
  auto parsed = nlohmann::json::parse(out);
  CHECK(parsed["n"] == 6);
  CHECK(parsed["exact"] == 336.0);
  CHECK(parsed["ratio"]["im"] == -0.25);
  CHECK(parsed["name"] == "x\"y");
  CHECK(parsed["ok"] == true);
  CHECK(parsed["list"][1] == 2);
}

TEST_CASE("array fragments") {
  CHECK(cornerdet::json_array_numbers({1.0, 2.5}, 12) == "[1.0,2.5]");
  CHECK(cornerdet::json_array_integers({3, -4}) == "[3,-4]");
  CHECK(cornerdet::json_array_strings({"a", "b\"c"}) == "[\"a\",\"b\\\"c\"]");
  CHECK(cornerdet::json_array_complex({Cplx(1.0, 0.0), Cplx(0.0, -1.0)}, 12) ==
        "[1.0,{\"re\":0.0,\"im\":-1.0}]");
  CHECK(cornerdet::json_array_raw({"[1]", "{}"}) == "[[1],{}]");
  CHECK(cornerdet::json_array_numbers({}, 12) == "[]");
}

TEST_CASE("csv writer") {
  CsvWriter w({"n", "value"});
  w.add_row({"6", "336.0"});
  w.add_row({"7", "512.0"});
  CHECK(w.str() == "n,value\n6,336.0\n7,512.0\n");
  CHECK_THROWS_AS(w.add_row({"1"}), cornerdet::ShapeError);
}
