#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "orbigraph/fixtures.hpp"
#include "orbigraph/json_io.hpp"
#include "test_support.hpp"

using namespace orbigraph;
using nlohmann::json;

namespace {

struct cli_result {
  int exit_code = -1;
  std::string out;
};

cli_result run_cli(const std::string& args) {
  const std::string cmd = std::string(ORBIGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  EXPECT_NE(p, nullptr);
  cli_result r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return path;
}

void expect_graphs_equal(const directed_graph& a, const directed_graph& b) {
  EXPECT_EQ(a.n_vertices, b.n_vertices);
  EXPECT_EQ(a.esrc, b.esrc);
  EXPECT_EQ(a.erng, b.erng);
}

}  // namespace

TEST(JsonIo, GroupoidRoundTrip) {
  const finite_groupoid g = build_transitive_groupoid(2, symmetric_group(3));
  const std::string text = groupoid_to_json(g);
  const finite_groupoid back = parse_groupoid_json(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(groupoid_to_json(back), text);  // serialization is stable bytes
}

TEST(JsonIo, GroupoidShorthand) {
  const finite_groupoid want = build_transitive_groupoid(2, cyclic_group(3));
  const finite_groupoid got =
      parse_groupoid_json(R"({"n_units": 2, "group": {"cyclic": 3}})");
  EXPECT_EQ(got, want);

  const finite_groupoid s3 =
      parse_groupoid_json(R"({"n_units": 1, "group": {"symmetric": 3}})");
  EXPECT_EQ(s3, build_transitive_groupoid(1, symmetric_group(3)));

  // explicit multiplication table: Z/2
  const finite_groupoid z2 =
      parse_groupoid_json(R"({"n_units": 1, "group": {"mul": [[0, 1], [1, 0]]}})");
  EXPECT_EQ(z2, build_transitive_groupoid(1, cyclic_group(2)));
}

TEST(JsonIo, GraphRoundTripAndNamedEndpoints) {
  const directed_graph g = parse_graph_json(
      R"({"vertices": ["x", "y"],
          "edges": [{"src": "x", "rng": "y", "name": "e"},
                    {"src": 1, "rng": 0, "name": "f"}]})");
  EXPECT_EQ(g.n_vertices, 2);
  EXPECT_EQ(g.esrc, (std::vector<Id>{0, 1}));
  EXPECT_EQ(g.erng, (std::vector<Id>{1, 0}));
  EXPECT_EQ(g.edge_names, (std::vector<std::string>{"e", "f"}));

  const directed_graph back = parse_graph_json(graph_to_json(g));
  expect_graphs_equal(back, g);
  EXPECT_EQ(back.vertex_names, g.vertex_names);
  EXPECT_EQ(back.edge_names, g.edge_names);

  // bare vertex count, no names
  const directed_graph plain = parse_graph_json(R"({"vertices": 3, "edges": []})");
  EXPECT_EQ(plain.n_vertices, 3);
  EXPECT_TRUE(plain.vertex_names.empty());
}

TEST(JsonIo, GraphActionRoundTrip) {
  const graph_action a = two_vertex_loop_action();
  const graph_action back = parse_graph_action_json(graph_action_to_json(a));
  EXPECT_EQ(back.gpd, a.gpd);
  expect_graphs_equal(back.graph, a.graph);
  EXPECT_EQ(back.vertex_anchor, a.vertex_anchor);
  EXPECT_EQ(back.vertex_act, a.vertex_act);
  EXPECT_EQ(back.edge_act, a.edge_act);
  EXPECT_TRUE(validate_graph_action(back).ok());
}

TEST(JsonIo, SelfsimRoundTrip) {
  const selfsim_automaton a = four_edge_selfsim();
  const selfsim_automaton back = parse_selfsim_json(selfsim_to_json(a));
  expect_graphs_equal(back.graph, a.graph);
  EXPECT_EQ(back.gen_src, a.gen_src);
  EXPECT_EQ(back.gen_rng, a.gen_rng);
  EXPECT_EQ(back.gen_names, a.gen_names);
  EXPECT_EQ(back.out_edge, a.out_edge);
  EXPECT_EQ(back.restriction, a.restriction);
  EXPECT_TRUE(validate_selfsim(back).ok());
}

TEST(JsonIo, MalformedInputsThrow) {
  EXPECT_THROW(parse_groupoid_json("{"), malformed_input_error);
  EXPECT_THROW(parse_groupoid_json("[1, 2]"), malformed_input_error);
  EXPECT_THROW(parse_groupoid_json(R"({"n_units": 1})"), malformed_input_error);
  // ragged composition table
  EXPECT_THROW(parse_groupoid_json(
                   R"({"n_units": 1, "src": [0], "rng": [0], "inv": [0],
                       "unit_arrow": [0], "comp": [[0, 0]]})"),
               malformed_input_error);
  // dangling id
  EXPECT_THROW(parse_groupoid_json(
                   R"({"n_units": 1, "src": [7], "rng": [0], "inv": [0],
                       "unit_arrow": [0], "comp": [[0]]})"),
               malformed_input_error);
  // no identity in a mul table
  EXPECT_THROW(parse_groupoid_json(R"({"n_units": 1, "group": {"mul": [[0, 0], [0, 0]]}})"),
               malformed_input_error);
  EXPECT_THROW(parse_graph_json(R"({"vertices": ["x"], "edges": [{"src": "zz", "rng": "x"}]})"),
               malformed_input_error);
  EXPECT_THROW(parse_selfsim_json(R"({"graph": {"vertices": 1, "edges": []},
                                      "generators": [], "transitions": 3})"),
               malformed_input_error);
}

TEST(JsonIo, DigestVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_NE(fnv1a_hex("ab"), fnv1a_hex("ba"));
}

TEST(Cli, VersionAndHelp) {
  const auto v = run_cli("--version");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(v.out, "orbigraph 0.1.0\n");
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(Cli, ValidateFixtureManifest) {
  const auto r = run_cli("--fixture example-4.3 validate --type graph-action");
  ASSERT_EQ(r.exit_code, 0);
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("command"), "validate");
  EXPECT_EQ(m.at("tool_version"), "0.1.0");
  EXPECT_EQ(m.at("inputs").at("fixture"), "example-4.3");
  EXPECT_EQ(m.at("flags").at("type"), "graph-action");
  EXPECT_EQ(m.at("outputs").at("ok"), true);
}

TEST(Cli, QuotientGraphDeterministic) {
  const std::string args = "--fixture example-4.3 quotient-graph --mode both";
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  ASSERT_EQ(r1.exit_code, 0);
  EXPECT_EQ(r1.out, r2.out);  // byte-identical rerun
  const json m = json::parse(r1.out);
  EXPECT_EQ(m.at("outputs").at("provenance"), "both-agree");
  const json want = json::parse("[[1,0,1],[0,1,1],[1,1,2]]");
  EXPECT_EQ(m.at("outputs").at("adjacency"), want);
  ASSERT_EQ(m.at("outputs").at("points").size(), 3u);
  EXPECT_EQ(m.at("outputs").at("points").at(2).at("block_size"), 4);
}

TEST(Cli, KappaAndSpectrumAndDims) {
  const auto k = run_cli("--fixture example-4.3 kappa-check");
  ASSERT_EQ(k.exit_code, 0);
  const json km = json::parse(k.out);
  EXPECT_EQ(km.at("outputs").at("lhs"), 216);
  EXPECT_EQ(km.at("outputs").at("rhs"), 216);
  EXPECT_EQ(km.at("outputs").at("ok"), true);

  const auto s = run_cli("--fixture example-4.3 spectrum");
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(json::parse(s.out).at("outputs").at("points").size(), 3u);

  const auto d = run_cli("--fixture example-4.3 dr-dims --depth 2");
  ASSERT_EQ(d.exit_code, 0);
  const json dm = json::parse(d.out);
  EXPECT_EQ(dm.at("outputs").at("table").at(0).at(0), 1);
  EXPECT_EQ(dm.at("outputs").at("table").at(1).at(1), 2);
  EXPECT_EQ(dm.at("outputs").at("table").at(2).at(2), 14);
}

TEST(Cli, SelfsimAct) {
  const auto r = run_cli("--fixture example-4.6 selfsim act --word g --path a,d");
  ASSERT_EQ(r.exit_code, 0);
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("command"), "selfsim-act");
  EXPECT_EQ(m.at("outputs").at("path").at("label"), "cd");
  EXPECT_EQ(m.at("outputs").at("restriction").at("label"), "@w");
}

TEST(Cli, ExitCodes) {
  // wrong object kind for the fixture: documented precondition
  EXPECT_EQ(run_cli("--fixture example-4.3 selfsim act --word g --path a").exit_code, 2);
  EXPECT_EQ(run_cli("--fixture example-4.6 spectrum").exit_code, 2);
  // malformed command lines and unknown inputs
  EXPECT_EQ(run_cli("--fixture no-such-fixture spectrum").exit_code, 4);
  EXPECT_EQ(run_cli("spectrum").exit_code, 4);  // no input at all
  EXPECT_EQ(run_cli("--fixture example-4.3 quotient-graph --mode nope").exit_code, 4);
  EXPECT_EQ(run_cli("--fixture example-4.3").exit_code, 4);  // missing subcommand
  EXPECT_EQ(run_cli("--fixture example-4.3 validate").exit_code, 4);  // missing --type

  // unreadable and syntactically broken files
  EXPECT_EQ(run_cli("--input /nonexistent.json spectrum").exit_code, 4);
  const std::string bad = write_temp("orbigraph_bad.json", "{ not json");
  EXPECT_EQ(run_cli("--input " + bad + " spectrum").exit_code, 4);
}

TEST(Cli, FileInputManifestDigest) {
  const std::string text = graph_action_to_json(two_vertex_loop_action());
  const std::string path = write_temp("orbigraph_action.json", text);
  const auto r = run_cli("--input " + path + " orbits");
  ASSERT_EQ(r.exit_code, 0);
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("inputs").at("path"), path);
  EXPECT_EQ(m.at("inputs").at("digest"), fnv1a_hex(text));
  EXPECT_EQ(m.at("outputs").at("vertex_orbits").size(), 1u);
  EXPECT_EQ(m.at("outputs").at("edge_orbits").size(), 1u);
}

TEST(Cli, KTheoryAsGraph) {
  const std::string text =
      R"({"vertices": ["p"], "edges": [{"src": "p", "rng": "p"}, {"src": "p", "rng": "p"},
                                       {"src": "p", "rng": "p"}]})";
  const std::string path = write_temp("orbigraph_cuntz.json", text);
  const auto r = run_cli("--input " + path + " ktheory --as-graph");
  ASSERT_EQ(r.exit_code, 0);
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("outputs").at("k0").at("pretty"), "Z/2");
  EXPECT_EQ(m.at("outputs").at("k1").at("pretty"), "0");

  // a bare adjacency matrix is accepted too
  const std::string mpath = write_temp("orbigraph_cuntz_matrix.json", "[[3]]");
  const auto rm = run_cli("--input " + mpath + " ktheory --as-graph");
  ASSERT_EQ(rm.exit_code, 0);
  const json mm = json::parse(rm.out);
  EXPECT_EQ(mm.at("outputs").at("k0").at("pretty"), "Z/2");
  EXPECT_EQ(mm.at("outputs").at("k1").at("pretty"), "0");

  const std::string bad = write_temp("orbigraph_bad_matrix.json", R"([[1, "x"]])");
  EXPECT_EQ(run_cli("--input " + bad + " ktheory --as-graph").exit_code, 4);

  // the same command without --as-graph must reject the bare graph
  EXPECT_EQ(run_cli("--input " + path + " ktheory").exit_code, 4);
  // and --as-graph on a fixture is a documented precondition failure
  EXPECT_EQ(run_cli("--fixture example-4.3 ktheory --as-graph").exit_code, 2);
}

TEST(Cli, KTheoryOfFixtureQuotient) {
  const auto r = run_cli("--fixture example-4.3 ktheory");
  ASSERT_EQ(r.exit_code, 0);
  const json m = json::parse(r.out);
  EXPECT_EQ(m.at("outputs").at("k0").at("pretty"), "Z");
  EXPECT_EQ(m.at("outputs").at("k1").at("pretty"), "Z");
}

TEST(Cli, BratteliRoutes) {
  const auto q = run_cli("--fixture example-4.3 dr-bratteli --levels 3 --source quotient-graph");
  ASSERT_EQ(q.exit_code, 0);
  const json qm = json::parse(q.out);
  ASSERT_EQ(qm.at("outputs").at("levels").size(), 4u);
  EXPECT_EQ(qm.at("outputs").at("levels").at(1).at("dims"),
            json::parse("[2, 2, 4]"));

  const auto f = run_cli(
      "--fixture example-4.3 dr-bratteli --levels 3 --source dr-fiber --basepoint v");
  ASSERT_EQ(f.exit_code, 0);
  const json fm = json::parse(f.out);
  EXPECT_EQ(fm.at("outputs").at("levels").at(3).at("dims"), json::parse("[5, 4, 9]"));
}

TEST(Cli, ExportDotIsRaw) {
  const auto g = run_cli("--fixture example-4.3 export-dot --what graph");
  ASSERT_EQ(g.exit_code, 0);
  EXPECT_EQ(g.out.rfind("digraph", 0), 0u);  // starts with digraph, no manifest
  const auto f = run_cli("--fixture example-4.6 export-dot --what forest --depth 2");
  ASSERT_EQ(f.exit_code, 0);
  EXPECT_NE(f.out.find("\"ad\""), std::string::npos);
}
