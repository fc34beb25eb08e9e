#include <fstream>

#include "doctest.h"

#include "qalg/errors.hpp"
#include "qalg/invariants.hpp"
#include "qalg/jsonio.hpp"

using namespace qalg;
using nlohmann::json;

namespace {

const char* kIdealJson = R"({
  "ring": {"vars": [{"name":"m","degree":2}, {"name":"h","degree":2},
                    {"name":"n","degree":2}, {"name":"t","degree":2}]},
  "generators": ["m*h", "n*t", "m^2+h^2-n^2-t^2"],
  "order": {"kind":"lex", "precedence":["m","h","n","t"]}
})";

const char* kActionJson = R"({
  "generators": [{"m":"-m","h":"-h","n":"n","t":"t"},
                 {"m":"m","h":"h","n":"-n","t":"-t"}]
})";

} // namespace

TEST_CASE("ideal files round trip") {
    io::IdealFile file = io::ideal_from_json(json::parse(kIdealJson));
    CHECK(file.ideal.ring->size() == 4);
    CHECK(file.ideal.generators.size() == 3);
    CHECK(file.order.kind() == OrderKind::Lex);
    CHECK(file.order.precedence_names() == std::vector<std::string>{"m", "h", "n", "t"});
    CHECK(file.ideal.generators[2] == Polynomial::parse("m^2+h^2-n^2-t^2", file.ideal.ring));

    json round = io::ring_to_json(*file.ideal.ring);
    RingPtr again = io::ring_from_json(round);
    CHECK(*again == *file.ideal.ring);
    CHECK(io::order_from_json(io::order_to_json(file.order), again).precedence() ==
          file.order.precedence());
}

TEST_CASE("order defaults to lex in declared order") {
    json j = json::parse(kIdealJson);
    j.erase("order");
    io::IdealFile file = io::ideal_from_json(j);
    CHECK(file.order.kind() == OrderKind::Lex);
    CHECK(file.order.precedence_names() == std::vector<std::string>{"m", "h", "n", "t"});
}

TEST_CASE("action files load and close") {
    io::IdealFile file = io::ideal_from_json(json::parse(kIdealJson));
    GroupAction g = io::action_from_json(json::parse(kActionJson), file.ideal.ring);
    CHECK(g.order() == 4);
    CHECK(g.is_monomial_diagonal());
    GradedDims dims = fixed_quotient_dims(file.ideal, g, file.order, 8);
    CHECK(dims.comma_list() == "1,0,0,0,3,0,0,0,4");
}

TEST_CASE("dims round trip through json") {
    GradedDims dims(10);
    dims.set(0, 1);
    dims.set(4, 7);
    json j = io::dims_to_json(dims);
    CHECK(j["bound"] == 10);
    CHECK(j["dims"]["4"] == 7);
    CHECK(!j["dims"].contains("2"));
    GradedDims back = io::dims_from_json(j);
    CHECK(back == dims);
}

TEST_CASE("schema violations are reported") {
    CHECK_THROWS_AS(io::ring_from_json(json::parse(R"({"vars": []})")), SchemaError);
    CHECK_THROWS_AS(io::ring_from_json(json::parse(R"({})")), SchemaError);
    CHECK_THROWS_AS(io::ideal_from_json(json::parse(R"({"ring": {"vars":[{"name":"m"}]}})")),
                    SchemaError);
    io::IdealFile file = io::ideal_from_json(json::parse(kIdealJson));
    CHECK_THROWS_AS(io::action_from_json(json::parse(R"({"generators":[{"m":"q"}]})"),
                                         file.ideal.ring),
                    SchemaError);
    CHECK_THROWS_AS(io::action_from_json(json::parse(R"({"generators":[{"q":"m"}]})"),
                                         file.ideal.ring),
                    SchemaError);
}

TEST_CASE("scenario files reproduce the builtin configuration") {
    const char* text = R"({
      "name": "disc-over-torus",
      "base": {
        "ring": {"vars":[{"name":"e1","degree":2},{"name":"e2","degree":2}]},
        "generators": [],
        "order": {"kind":"lex","precedence":["e1","e2"]}
      },
      "fiber": {
        "classes": [{"label":"1","degree":0},{"label":"a","degree":3},
                    {"label":"b","degree":3},{"label":"ab","degree":6}],
        "unit": "1",
        "generators": ["a","b"],
        "products": [{"left":"a","right":"b","value":[{"coeff":"1","class":"ab"}]}]
      },
      "differentials": [
        {"page": 4, "images": {
          "a": [{"base":"e1*e2","fiber":"1"}],
          "b": [{"base":"e1^2+e2^2","fiber":"1"}]
        }}
      ]
    })";
    builtin::Scenario s = io::scenario_from_json(json::parse(text));
    SpectralRun run = run_to_infinity(s.base, s.fiber, s.specs, 16);
    CHECK(run.totals.comma_list() == "1,0,2,0,1,0,0,0,0,0,0,0,0,0,0,0,0");
    CHECK(run.collapse_page == 5);
}

TEST_CASE("scenario files honor explicit column bounds") {
    const char* text = R"({
      "base": {"ring": {"vars":[{"name":"e1","degree":2},{"name":"e2","degree":2}]},
               "generators": []},
      "fiber": {"classes":[{"label":"1","degree":0},{"label":"s","degree":3}],
                "unit":"1", "generators":["s"]},
      "differentials": [{"page":4,"images":{"s":[{"base":"e1*e2","fiber":"1"}]}}],
      "col_bound": 10
    })";
    builtin::Scenario s = io::scenario_from_json(json::parse(text));
    REQUIRE(s.col_bound.has_value());
    CHECK_THROWS_AS(run_to_infinity(s.base, s.fiber, s.specs, 12, s.col_bound),
                    TruncationTooSmall);
    SpectralRun ok = run_to_infinity(s.base, s.fiber, s.specs, 6, s.col_bound);
    CHECK(ok.totals.comma_list() == "1,0,2,0,2,0,2");
}

TEST_CASE("json file loading reports syntax errors") {
    std::string path = "qalg_test_bad.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(io::load_json_file(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::load_json_file("does_not_exist.json"), SchemaError);
}
