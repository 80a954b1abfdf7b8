#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dagscore/graph_format.hpp"
#include "dagscore/report.hpp"
#include "dagscore/scenarios.hpp"

using namespace dagscore;

namespace {

MixedGraph random_mixed_graph(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    int n = 2 + static_cast<int>(gen() % 9);
    MixedGraph g = random_dag(n, 0.05 + 0.6 * (gen() % 100) / 100.0, gen());
    // Rewrite some marks so every variant shows up.
    for (const auto& [pair, mark] : std::map(g.pairs())) {
        (void)mark;
        switch (gen() % 4) {
        case 0: g.set_pair(pair.first, pair.second, MixedGraph::PairMark::Forward); break;
        case 1: g.set_pair(pair.first, pair.second, MixedGraph::PairMark::Backward); break;
        case 2: g.set_pair(pair.first, pair.second, MixedGraph::PairMark::Undirected); break;
        default: g.set_pair(pair.first, pair.second, MixedGraph::PairMark::Bidirected); break;
        }
    }
    return g;
}

ErrorKind parse_error_kind(const std::string& text, int* line = nullptr) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    throw std::logic_error("expected a parse error");
}

} // namespace

TEST_CASE("parse a minimal graph") {
    MixedGraph g = parse_graph("nodes: A,B,C\nA -> B\n");
    CHECK(g.node_labels() == std::vector<std::string>{"A", "B", "C"});
    CHECK(g.edge_between("A", "B") == EdgeMark::directed("A", "B"));
    CHECK(g.edge_between("A", "C").is_absent());
    CHECK(g.edge_between("B", "C").is_absent());
}

TEST_CASE("back arrows normalize to directed marks") {
    MixedGraph left = parse_graph("nodes: A,B\nB <- A\n");
    MixedGraph right = parse_graph("nodes: A,B\nA -> B\n");
    CHECK(left == right);
}

TEST_CASE("all four operators parse") {
    MixedGraph g = parse_graph("nodes: A,B,C,D,E\nA -> B\nB <- C\nC -- D\nD <-> E\n");
    CHECK(g.edge_between("A", "B") == EdgeMark::directed("A", "B"));
    CHECK(g.edge_between("B", "C") == EdgeMark::directed("C", "B"));
    CHECK(g.edge_between("C", "D") == EdgeMark::undirected());
    CHECK(g.edge_between("D", "E") == EdgeMark::bidirected());
}

TEST_CASE("comments, blank lines, CRLF and loose whitespace are accepted") {
    std::string text = "# fixture\r\n\r\nnodes:  A , B ,C\r\n  A   ->    B  # tail comment\r\n";
    MixedGraph g = parse_graph(text);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_between("A", "B").is_directed());
}

TEST_CASE("parse errors carry 1-based line numbers") {
    int line = 0;
    CHECK(parse_error_kind("nodes: A,B\nA -> B\nB -> A\n", &line) == ErrorKind::DuplicatePair);
    CHECK(line == 3);

    CHECK(parse_error_kind("nodes: A,B\nA -> B\nA -- B\n", &line) == ErrorKind::DuplicatePair);

    CHECK(parse_error_kind("A -> B\n", &line) == ErrorKind::MissingNodesHeader);
    CHECK(line == 1);
    CHECK(parse_error_kind("# only comments\n", nullptr) == ErrorKind::MissingNodesHeader);
    CHECK(parse_error_kind("", nullptr) == ErrorKind::MissingNodesHeader);

    CHECK(parse_error_kind("nodes: A,B\nA -> C\n", &line) == ErrorKind::UnknownNodeInEdge);
    CHECK(line == 2);

    CHECK(parse_error_kind("nodes: A,B\nA => B\n", &line) == ErrorKind::SyntaxError);
    CHECK(parse_error_kind("nodes: A,B\nA ->\n", nullptr) == ErrorKind::SyntaxError);
    CHECK(parse_error_kind("nodes: A,B\nA -> A\n", nullptr) == ErrorKind::SyntaxError);
    CHECK(parse_error_kind("nodes: A,,B\n", nullptr) == ErrorKind::SyntaxError);
    CHECK(parse_error_kind("nodes: A,A\n", nullptr) == ErrorKind::DuplicateNode);
}

TEST_CASE("serialize emits the canonical form") {
    MixedGraph empty({"A", "B"});
    CHECK(serialize_graph(empty) == "nodes: A,B\n");

    MixedGraph g({"A", "B"});
    g.add_arc("B", "A");
    CHECK(serialize_graph(g) == "nodes: A,B\nB -> A\n");

    MixedGraph multi({"B", "A", "C"});
    multi.add_arc("C", "A");
    multi.add_undirected("B", "C");
    CHECK(serialize_graph(multi) == "nodes: B,A,C\nB -- C\nC -> A\n");
}

TEST_CASE("parse then serialize round trips 1000 generated graphs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        MixedGraph g = random_mixed_graph(seed);
        std::string text = serialize_graph(g);
        MixedGraph parsed = parse_graph(text);
        REQUIRE(parsed == g);
        // Serializing the parsed document again is byte-identical.
        REQUIRE(serialize_graph(parsed) == text);
    }
}

TEST_CASE("manifest parsing") {
    std::string good = R"({"groups":[{"id":"g1","true":"t.graph","learnt":["a.graph","b.graph","c.graph"]}]})";
    BatchManifest manifest = parse_manifest(good);
    REQUIRE(manifest.groups.size() == 1);
    CHECK(manifest.groups[0].id == "g1");
    CHECK(manifest.groups[0].true_path == "t.graph");
    CHECK(manifest.groups[0].learnt_paths.size() == 3);

    auto kind_of = [](const std::string& text) {
        try {
            parse_manifest(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IoFailure;
    };
    CHECK(kind_of(R"({"groups":[{"id":"g","true":"t","learnt":["a"]},{"id":"g","true":"u","learnt":["b"]}]})") ==
          ErrorKind::DuplicateGroupId);
    CHECK(kind_of(R"({"groups":[{"id":"g","true":"t","learnt":[]}]})") == ErrorKind::EmptyGroup);
    CHECK(kind_of("{not json") == ErrorKind::SyntaxError);
    CHECK(kind_of(R"({"groups":[{"id":"g","learnt":["a"]}]})") == ErrorKind::SyntaxError);
    // A learnt graph belongs to exactly one group.
    CHECK(kind_of(R"({"groups":[{"id":"g1","true":"t","learnt":["a"]},{"id":"g2","true":"u","learnt":["a"]}]})") ==
          ErrorKind::SyntaxError);
}

TEST_CASE("format_real uses up to six significant digits without padding") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(21.0) == "21");
    CHECK(format_real(0.3) == "0.3");
    CHECK(format_real(7.0 / 12.0) == "0.583333");
    CHECK(format_real(-0.121428571) == "-0.121429");
    CHECK(format_real(5.5) == "5.5");
}

TEST_CASE("csv report rows") {
    ReportRow perfect;
    perfect.group_id = "g1";
    perfect.learnt_id = "learnt.graph";
    perfect.tally = {10, 0, 0, 35, 0};
    perfect.scores.pr = Score::defined(1.0);
    perfect.scores.re = Score::defined(1.0);
    perfect.scores.f1 = Score::defined(1.0);
    perfect.scores.shd_classic = 0.0;
    perfect.scores.shd_weighted = 0.0;
    perfect.scores.ddm = 1.0;
    perfect.scores.bsf = 1.0;
    perfect.fn_eff = 0.0;
    perfect.bsf_n = 1.0;
    perfect.shd_n = 1.0;
    perfect.ddm_n = 1.0;
    perfect.f1_n = 1.0;

    std::string csv = write_report({perfect}, ReportFormat::Csv);
    CHECK(csv ==
          "group_id,learnt_id,tp,tp_partial,fp,tn,fn_eff,pr,re,f1,shd_classic,shd_weighted,ddm,"
          "bsf,bsf_n,shd_n,ddm_n,f1_n\n"
          "g1,learnt.graph,10,0,0,35,0,1,1,1,0,0,1,1,1,1,1,1\n");

    ReportRow undefined_pr = perfect;
    undefined_pr.tally = {0, 0, 0, 35, 10};
    undefined_pr.scores.pr = Score::undefined(Score::Undefined::NoLearntEdges);
    undefined_pr.scores.f1 = Score::undefined(Score::Undefined::NoLearntEdges);
    std::string csv2 = write_report({undefined_pr}, ReportFormat::Csv);
    CHECK(csv2.find(",n/a,1,n/a,") != std::string::npos);

    // Empty report keeps the header.
    std::string empty = write_report({}, ReportFormat::Csv);
    CHECK(empty ==
          "group_id,learnt_id,tp,tp_partial,fp,tn,fn_eff,pr,re,f1,shd_classic,shd_weighted,ddm,"
          "bsf,bsf_n,shd_n,ddm_n,f1_n\n");

    // Fields with commas get quoted.
    ReportRow odd = perfect;
    odd.learnt_id = "a,b\"c";
    std::string quoted = write_report({odd}, ReportFormat::Csv);
    CHECK(quoted.find("\"a,b\"\"c\"") != std::string::npos);
}

TEST_CASE("json report renders undefined scores as null") {
    ReportRow row;
    row.group_id = "g";
    row.learnt_id = "x";
    row.tally = {0, 0, 0, 35, 10};
    row.scores.pr = Score::undefined(Score::Undefined::NoLearntEdges);
    row.scores.re = Score::defined(0.0);
    row.scores.f1 = Score::undefined(Score::Undefined::NoLearntEdges);
    row.scores.shd_classic = 10.0;
    row.scores.shd_weighted = 10.0;
    row.scores.ddm = -1.0;
    row.scores.bsf = 0.0;
    std::string json = write_report({row}, ReportFormat::Json);
    CHECK(json.find("\"pr\": null") != std::string::npos);
    CHECK(json.find("\"re\": 0.0") != std::string::npos);
    CHECK(json.find("\"f1\": null") != std::string::npos);
}

TEST_CASE("series csv layout") {
    GroundTruthStats s;
    s.a = 10;
    s.i = 35;
    s.j = 45;
    s.w_a = 0.1;
    s.w_i = 1.0 / 35;
    std::vector<ScoredRecord> records;
    for (const ScenarioFixture& fixture : table_fixtures(FixtureTable::Table5)) {
        records.push_back(
            ScoredRecord{"t5", fixture.scenario_id, scores_from_tally(fixture.tally, s)});
    }
    RankedSeries series = build_series(records);
    std::string csv = write_series(series, ReportFormat::Csv);
    CHECK(csv.rfind("rank,group_id,learnt_id,bsf_n,pr,re,f1_n,shd_n,ddm_n\n", 0) == 0);
    CHECK(csv.find("1,t5,3.5,1,1,1,1,1,1\n") != std::string::npos);
    CHECK(csv.find("11,t5,3.4,0,0,0,0,0,0\n") != std::string::npos);

    DisagreementSummary summary = summarize_disagreements(series);
    REQUIRE(summary.counts.size() == 5);
    std::string json = disagreements_to_json(summary);
    CHECK(json.find("\"shd_n\": 10") != std::string::npos);
}

TEST_CASE("file io failures map to IoFailure") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/file.graph"), Error);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/file.txt", "x"), Error);
}
