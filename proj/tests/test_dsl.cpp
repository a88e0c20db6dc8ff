#include "doctest.h"

#include "generators.hpp"
#include "hpnet/dsl.hpp"
#include "hpnet/fixtures.hpp"

using namespace hpnet;

namespace {

bool has_error(const std::vector<Diagnostic>& diags, const std::string& code,
               int line = 0, int column = 0) {
  for (const auto& d : diags) {
    if (d.code != code) continue;
    if (line && d.line != line) continue;
    if (column && d.column != column) continue;
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("minimal document") {
  const auto result = parse_net(
      {"net A { place p0 entry; place p1 exit; trans t1; arc p0 -> t1; arc t1 -> p1; }"});
  REQUIRE(result.ok());
  const Net& net = result.net->root.net;
  CHECK(net.places.size() == 2);
  CHECK(net.transitions.size() == 1);
  CHECK(net.arcs.size() == 2);
  CHECK(validate_structure(net).ok());
}

TEST_CASE("interval order error carries the interval position") {
  const auto result = parse_net(
      {"net A {\n  place p0 entry;\n  place p1 exit;\n  trans t1 tc [5,2];\n"
       "  arc p0 -> t1;\n  arc t1 -> p1;\n}"});
  CHECK(!result.ok());
  CHECK(has_error(result.diagnostics, "INTERVAL_ORDER", 4, 15));
}

TEST_CASE("refine marks the transition refinable and binds it") {
  const auto result = parse_net(
      {"net A { place p0 entry; place p1 exit; trans t1 refine Sub;"
       " arc p0 -> t1; arc t1 -> p1; }\n"
       "net Sub { place s0 entry; place s1 exit; trans u; arc s0 -> u; arc u -> s1; }"});
  REQUIRE(result.ok());
  const auto& h = *result.net;
  CHECK(h.root.net.find_transition("t1")->refinable);
  CHECK(h.root.bindings.at("t1") == "Sub");
  CHECK(h.subnets.count("Sub") == 1);
}

TEST_CASE("parse diagnostics") {
  SUBCASE("duplicate net name") {
    const auto r = parse_net({"net A { place p0 entry exit; }\nnet A { place q0 entry exit; }"});
    CHECK(has_error(r.diagnostics, "DUPLICATE_NET", 2, 5));
  }
  SUBCASE("duplicate node id") {
    const auto r = parse_net({"net A { place p0 entry exit; place p0; }"});
    CHECK(has_error(r.diagnostics, "DUPLICATE_ID"));
  }
  SUBCASE("unknown arc endpoint") {
    const auto r = parse_net({"net A { place p0 entry exit; arc p0 -> ghost; }"});
    CHECK(has_error(r.diagnostics, "UNKNOWN_NODE", 1, 40));
  }
  SUBCASE("arc between two places") {
    const auto r = parse_net({"net A { place p0 entry; place p1 exit; arc p0 -> p1; }"});
    CHECK(has_error(r.diagnostics, "ARC_SHAPE"));
  }
  SUBCASE("unknown refine target") {
    const auto r = parse_net(
        {"net A { place p0 entry; place p1 exit; trans t1 refine Ghost;"
         " arc p0 -> t1; arc t1 -> p1; }"});
    CHECK(has_error(r.diagnostics, "UNKNOWN_SUBNET"));
  }
  SUBCASE("refinement cycle") {
    const auto r = parse_net(
        {"net A { place p0 entry; place p1 exit; trans t1 refine B;"
         " arc p0 -> t1; arc t1 -> p1; }\n"
         "net B { place q0 entry; place q1 exit; trans t2 refine A;"
         " arc q0 -> t2; arc t2 -> q1; }"});
    CHECK(has_error(r.diagnostics, "REFINEMENT_CYCLE"));
  }
  SUBCASE("reserved word as identifier") {
    const auto r = parse_net({"net A { place entry entry; }"});
    CHECK(has_error(r.diagnostics, "RESERVED_WORD"));
  }
  SUBCASE("missing entry") {
    const auto r = parse_net({"net A { place p0 exit; }"});
    CHECK(has_error(r.diagnostics, "ENTRY_MISSING"));
  }
  SUBCASE("negative duration is a lexical error") {
    const auto r = parse_net(
        {"net A { place p0 entry; place p1 exit; trans t1 td -1;"
         " arc p0 -> t1; arc t1 -> p1; }"});
    CHECK(!r.ok());
  }
  SUBCASE("non UTF-8 input") {
    std::string bad = "net A { place \xFF; }";
    const auto r = parse_net({bad});
    CHECK(has_error(r.diagnostics, "ENCODING"));
  }
}

TEST_CASE("parsing never crashes on junk") {
  testgen::Rng rng(99);
  const std::string alphabet = "net place trans arc {};[]->\"# \n\t0123456789abz_";
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const int len = static_cast<int>(testgen::pick(rng, 0, 60));
    for (int k = 0; k < len; ++k)
      text += alphabet[testgen::pick(rng, 0, alphabet.size() - 1)];
    const auto r = parse_net({text});
    CHECK((r.ok() || !r.diagnostics.empty()));
    const auto p = parse_pattern({text});
    CHECK((p.ok() || !p.diagnostics.empty()));
  }
}

TEST_CASE("round trip is structural identity and canonical") {
  SUBCASE("bundled scenario") {
    const auto first = parse_net({healthcare_fixture_text()});
    REQUIRE(first.ok());
    const std::string canon = serialize_net(*first.net);
    CHECK(canon == healthcare_fixture_text());  // the fixture ships canonical
    const auto second = parse_net({canon});
    REQUIRE(second.ok());
    CHECK(*second.net == *first.net);
    CHECK(serialize_net(*second.net) == canon);
  }
  SUBCASE("random documents") {
    testgen::Rng rng(5005);
    for (int i = 0; i < 60; ++i) {
      const HierarchicalNet doc = testgen::random_document(rng);
      const std::string text = serialize_net(doc);
      const auto parsed = parse_net({text});
      REQUIRE(parsed.ok());
      CHECK(*parsed.net == doc);
      CHECK(serialize_net(*parsed.net) == text);
    }
  }
}

TEST_CASE("pattern parsing") {
  SUBCASE("sequence") {
    const auto r = parse_pattern({"seq(act(i, teb=[1,2]), act(j, teb=[2,3]), tec=[0,1])"});
    REQUIRE(r.ok());
    CHECK(r.pattern->kind == PatternExpr::Kind::seq);
    CHECK(r.pattern->children.size() == 2);
    CHECK(r.pattern->tec == TimeInterval{0, 1});
  }
  SUBCASE("loop") {
    const auto r = parse_pattern({"loop(act(i, teb=[1,2]), k=3)"});
    REQUIRE(r.ok());
    CHECK(r.pattern->kind == PatternExpr::Kind::loop);
    CHECK(r.pattern->loop_count == 3);
  }
  SUBCASE("degenerate parallel warns and collapses") {
    const auto r = parse_pattern({"par(act(i, teb=[1,2]))"});
    REQUIRE(r.ok());
    bool warned = false;
    for (const auto& d : r.diagnostics)
      if (d.code == "PAR_SINGLE" && d.severity == Diagnostic::Severity::warning)
        warned = true;
    CHECK(warned);
    CHECK(r.pattern->kind == PatternExpr::Kind::leaf);
  }
  SUBCASE("interval order inside teb") {
    const auto r = parse_pattern({"act(i, teb=[4,1])"});
    CHECK(!r.ok());
    CHECK(has_error(r.diagnostics, "INTERVAL_ORDER"));
  }
  SUBCASE("zero loop count") {
    const auto r = parse_pattern({"loop(act(i, teb=[1,2]), k=0)"});
    CHECK(has_error(r.diagnostics, "LOOP_BOUND"));
  }
  SUBCASE("trailing garbage") {
    const auto r = parse_pattern({"act(i, teb=[1,2]) act"});
    CHECK(has_error(r.diagnostics, "TRAILING_INPUT"));
  }
}
