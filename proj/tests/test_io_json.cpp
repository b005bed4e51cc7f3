#include <doctest.h>

#include <json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "io_json.hpp"

using namespace boxhelly;

namespace {

bool families_equal(const BoxFamily& a, const BoxFamily& b) {
    if (a.dim() != b.dim() || a.size() != b.size() || a.label() != b.label()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.box(i) == b.box(i))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("round trip on every generator output") {
    const BoxFamily families[] = {
        gen_turan_family(7, 3),
        gen_staircase_family(6, 2),
        gen_random_family(20, 2, 5, {Rational(10), Rational(1, 2), Rational(5), false}),
        gen_random_family(5, 1, 6, {Rational(10), Rational(1), Rational(5), true}),
        BoxFamily(3),
    };
    for (const BoxFamily& f : families) {
        CHECK(families_equal(family_from_text(family_to_text(f)), f));
    }
}

TEST_CASE("serialized text is stable") {
    const std::string a = family_to_text(gen_random_family(10, 2, 42, {}));
    const std::string b = family_to_text(gen_random_family(10, 2, 42, {}));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}

TEST_CASE("rationals accepted as p/q strings, decimals, and plain integers") {
    const char* text = R"({
      "dim": 1,
      "boxes": [
        [{"lo": "1/2", "hi": "0.75"}],
        [{"lo": -1, "hi": 2, "lo_open": true, "hi_open": true}]
      ]
    })";
    const BoxFamily f = family_from_text(text);
    REQUIRE(f.size() == 2);
    CHECK(f.box(0).axis(0).lo().value == Rational(1, 2));
    CHECK(f.box(0).axis(0).hi().value == Rational(3, 4));
    CHECK_FALSE(f.box(0).axis(0).lo().open);  // flags default closed
    CHECK(f.box(1).axis(0).lo().open);
    CHECK(f.label().empty());
}

TEST_CASE("schema violations raise ParseError") {
    CHECK_THROWS_AS(family_from_text("not json"), ParseError);
    CHECK_THROWS_AS(family_from_text("[1,2]"), ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"boxes": []})"), ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 0, "boxes": []})"), ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 2, "boxes": [[{"lo":"0","hi":"1"}]]})"),
                    ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 1, "boxes": [[{"lo":"0"}]]})"), ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 1, "boxes": [[{"lo":"x","hi":"1"}]]})"),
                    ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 1, "boxes": [[{"lo":"1","hi":"1/2"}]]})"),
                    ParseError);
    CHECK_THROWS_AS(family_from_text(R"({"dim": 1, "boxes": [[{"lo": 0.5, "hi": 1}]]})"),
                    ParseError);  // non-integer JSON numbers are inexact, rejected
    CHECK_THROWS_AS(family_from_text(R"({"dim": 1, "label": 3, "boxes": []})"), ParseError);
}

TEST_CASE("empty interval in a file is a parse failure, not an invariant crash") {
    const char* text = R"({"dim": 1, "boxes": [[{"lo": "1", "hi": "1", "hi_open": true}]]})";
    CHECK_THROWS_AS(family_from_text(text), ParseError);
}

TEST_CASE("labels survive the trip") {
    BoxFamily f(1, {Box({Interval::closed(0, 1)})}, "hello world");
    CHECK(family_from_text(family_to_text(f)).label() == "hello world");
}
