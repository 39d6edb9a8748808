#include <doctest.h>

#include "test_support.hpp"

using namespace updown;
using namespace testsupport;

TEST_CASE("export of the segment category") {
  const std::string text = io::export_json(segment_table());
  const UpdownTable back = io::import_json(text);
  CHECK(back.object_count() == 2);
  CHECK(back.edge_count() == 1);
  CHECK(back.edge({0, 0}, {1, 0})->hom_size == 1);
  CHECK(back.name() == "A");
  CHECK(structurally_equal(back, segment_table()));
}

TEST_CASE("round trips re-export byte-identically") {
  for (Family f : {Family::necklaces, Family::partitions_kingman, Family::binary_trees}) {
    const UpdownTable table = family(f, family_default_param(f), 6);
    const std::string once = io::export_json(table);
    const std::string twice = io::export_json(io::import_json(once));
    CHECK(once == twice);
  }
}

TEST_CASE("divisibility failures point at the edge") {
  const std::string text = R"({
    "name": "bad",
    "ranks": [[{"label": "p", "aut": 2}], [{"label": "q", "aut": 1}]],
    "edges": [{"src": [0,0], "dst": [1,0], "hom": 3}]
  })";
  try {
    io::import_json(text);
    FAIL("expected SchemaError");
  } catch (const SchemaError& err) {
    CHECK(err.path == "/edges/0/hom");
  }
}

TEST_CASE("schema violations carry json paths") {
  auto path_of = [](const std::string& text) {
    try {
      io::import_json(text);
    } catch (const SchemaError& err) {
      return err.path;
    }
    return std::string("no error");
  };
  CHECK(path_of(R"({"ranks": [[]], "edges": []})") == "/name");
  CHECK(path_of(R"({"name": "x", "ranks": [[{"label": "a", "aut": 0}]], "edges": []})") ==
        "/ranks/0/0/aut");
  CHECK(path_of(R"({"name": "x", "ranks": [[{"label": "a", "aut": 1, "extra": 1}]],
                    "edges": []})") == "/ranks/0/0/extra");
  CHECK(path_of(R"({"name": "x", "ranks": [[{"label": "a", "aut": 1}]],
                    "edges": [{"src": [0,0], "dst": [0,0], "hom": 1}]})") == "/edges/0");
  CHECK(path_of(R"({"name": "x", "ranks": [[{"label": "a", "aut": 1}]],
                    "edges": [{"src": [0,0], "dst": [1,3], "hom": 1}]})") == "/edges/0/dst");
  CHECK(path_of("{nonsense") == "");
}

TEST_CASE("import validates against the instance schema, not the axioms") {
  // A structurally legal but axiom-violating table (two roots) imports fine;
  // validate() is the place that flags it.
  const std::string text = R"({
    "name": "two-roots",
    "ranks": [[{"label": "a", "aut": 1}, {"label": "b", "aut": 1}]],
    "edges": []
  })";
  const UpdownTable table = io::import_json(text);
  CHECK(!validate(table).ok);
}
