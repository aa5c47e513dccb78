#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "blockgraph/block_closure.hpp"
#include "blockgraph/oracle.hpp"
#include "support.hpp"

using namespace blockgraph;
using namespace blockgraph::testing;
namespace fs = std::filesystem;

TEST_CASE("circuit_closure_oracle") {
    CHECK(oracle::circuit_closure_oracle(cycle4()) == complete4());
    CHECK(oracle::circuit_closure_oracle(path3()) == path3());
    CHECK(oracle::circuit_closure_oracle(bowtie()) == bowtie());
    // A 5-cycle with a chord still closes to K5.
    const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
    CHECK(oracle::circuit_closure_oracle(c5).edge_count() == 10);
    // Two cycles joined at a vertex stay separate blocks.
    const Graph figure_eight = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    const Graph closed = oracle::circuit_closure_oracle(figure_eight);
    CHECK(closed.has_edge(0, 2));
    CHECK(closed.has_edge(4, 6));
    CHECK_FALSE(closed.has_edge(0, 4));
}

TEST_CASE("edge codes round trip") {
    for (std::uint64_t code = 0; code < 64; ++code) {
        CHECK(oracle::edge_code(oracle::graph_from_edge_code(4, code)) == code);
    }
    CHECK(oracle::graph_from_edge_code(3, 0b101) == make_graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("enumerate_connected_graphs matches the labeled count recurrence") {
    const auto expected = labeled_connected_counts(6);
    CHECK(expected[4] == 38);
    CHECK(expected[6] == 26704);
    for (std::size_t n = 1; n <= 6; ++n) {
        oracle::ConnectedGraphEnumerator stream(n);
        std::uint64_t count = 0;
        std::set<Graph> distinct;
        while (auto g = stream.next()) {
            REQUIRE(is_connected(*g));
            ++count;
            if (n <= 4) distinct.insert(*g);
        }
        CHECK(count == expected[n]);
        if (n <= 4) CHECK(distinct.size() == count);
    }
    CHECK(oracle::enumerate_connected_graphs(3).size() == 4);
    CHECK_THROWS_AS(oracle::ConnectedGraphEnumerator(0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::ConnectedGraphEnumerator(8), std::invalid_argument);
}

TEST_CASE("random_connected_graph is seeded and connected") {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::random_connected_graph(8, a);
        CHECK(g.vertex_count() == 8);
        CHECK(is_connected(g));
        CHECK(g == oracle::random_connected_graph(8, b));
    }
}

TEST_CASE("roundtrip_check") {
    CHECK(oracle::roundtrip_check(triangle()).ok());
    const auto c4 = oracle::roundtrip_check(cycle4());
    CHECK(c4.ok());
    CHECK_FALSE(c4.witness);
    CHECK(edges_from_family(family_from_graph(cycle4())) == complete4());
    CHECK(oracle::roundtrip_check(make_graph(1, {})).ok());
    CHECK_THROWS_AS(oracle::roundtrip_check(make_graph(3, {{0, 1}})), std::invalid_argument);
    CHECK(oracle::identity_tag(oracle::Identity::bp_vs_closure) == "B_PG-vs-[G]");
    CHECK(oracle::identity_tag(oracle::Identity::family_roundtrip) == "P_BP-vs-P");
}

TEST_CASE("chain_path_defect catches broken paths") {
    const auto p4 = CompatibleFamily::check(family_from_graph(path4()));
    const Graph bp4 = edges_from_family(p4);
    CHECK_FALSE(oracle::chain_path_defect(p4, bp4, 0, 3, {0, 1, 2, 3}));
    CHECK(oracle::chain_path_defect(p4, bp4, 0, 3, {0, 2, 3})->find("non-edge") != std::string::npos);
    CHECK(oracle::chain_path_defect(p4, bp4, 0, 3, {0, 1, 2}));

    const auto k3 = CompatibleFamily::check(family_from_graph(triangle()));
    const auto defect = oracle::chain_path_defect(k3, triangle(), 0, 1, {0, 2, 1});
    REQUIRE(defect);
    CHECK(defect->find("does not separate") != std::string::npos);
}

TEST_CASE("count_correspondence") {
    CHECK(oracle::count_correspondence(1) == oracle::CountPair{1, 1});
    CHECK(oracle::count_correspondence(3) == oracle::CountPair{4, 4});
    const auto five = oracle::count_correspondence(5);
    CHECK(five.block_graphs == five.families);
    CHECK_THROWS_AS(oracle::count_correspondence(0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::count_correspondence(7), std::invalid_argument);
}

TEST_CASE("every graph is block-equivalent to exactly one block graph (n <= 5)") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::map<Graph, std::size_t> classes;
        std::set<Graph> block_graphs;
        for (const Graph& g : oracle::enumerate_connected_graphs(n)) {
            ++classes[block_closure(g)];
            if (is_block_graph(g)) block_graphs.insert(g);
            // Independent characterization: G is a block graph iff the circuit closure adds nothing.
            REQUIRE(is_block_graph(g) == (oracle::circuit_closure_oracle(g) == g));
        }
        std::set<Graph> representatives;
        for (const auto& [rep, size] : classes) representatives.insert(rep);
        CHECK(representatives == block_graphs);
    }
}

TEST_CASE("sweeps") {
    const auto three = oracle::check_exhaustive(3, 2);
    CHECK(three.checked == 4);
    CHECK(three.passed == 4);
    CHECK_FALSE(three.first_failure);

    const auto sampled = oracle::check_sampled(7, 20, 3);
    CHECK(sampled.checked == 20);
    CHECK(sampled.passed == 20);
}

TEST_CASE("golden counts file") {
    const fs::path dir = fs::temp_directory_path() / "blockgraph_golden_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path file = dir / "counts.tsv";

    const std::vector<oracle::GoldenRow> rows{{1, {1, 1}}, {3, {4, 4}}};
    CHECK(oracle::reconcile_golden(file, rows) == oracle::GoldenStatus::written);
    {
        std::ifstream in(file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text == "1\t1\t1\n3\t4\t4\n");
    }
    CHECK(oracle::reconcile_golden(file, rows) == oracle::GoldenStatus::matched);
    CHECK(oracle::reconcile_golden(file, {{3, {4, 4}}}) == oracle::GoldenStatus::matched);
    CHECK(oracle::reconcile_golden(file, {{3, {4, 5}}}) == oracle::GoldenStatus::mismatched);
    CHECK(oracle::reconcile_golden(file, {{2, {1, 1}}}) == oracle::GoldenStatus::written);
    CHECK(oracle::read_golden(file) == std::vector<oracle::GoldenRow>{{1, {1, 1}}, {2, {1, 1}}, {3, {4, 4}}});

    std::ofstream(dir / "bad.tsv") << "1\t1\n";
    CHECK_THROWS_AS(oracle::read_golden(dir / "bad.tsv"), std::runtime_error);
    fs::remove_all(dir);
}
