#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "surround/designs.hpp"
#include "surround/errors.hpp"
#include "surround/families.hpp"

using namespace surround;

namespace {

// Independent pair-coverage count.
int pair_coverage(const Design& d, int a, int b) {
    int c = 0;
    for (const auto& blk : d.blocks) {
        bool ha = false, hb = false;
        for (int p : blk) {
            ha |= (p == a);
            hb |= (p == b);
        }
        if (ha && hb) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("fano plane validates") {
    Design d = builtin_design("fano");
    CHECK(d.points == 7);
    CHECK(d.block_size == 3);
    CHECK(d.lambda == 1);
    CHECK(d.replication == 3);
    CHECK(d.blocks.size() == 7);
    for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) CHECK(pair_coverage(d, a, b) == 1);
    }
}

TEST_CASE("affine plane of order 3 validates with resolution") {
    Design d = builtin_design("ag23");
    CHECK(d.points == 9);
    CHECK(d.replication == 4);
    CHECK(d.blocks.size() == 12);
    CHECK(d.resolution_classes.size() == 4);
    for (int a = 0; a < 9; ++a) {
        for (int b = a + 1; b < 9; ++b) CHECK(pair_coverage(d, a, b) == 1);
    }
    CHECK_THROWS_AS(builtin_design("nonesuch"), parse_error);
}

TEST_CASE("doubling the fano blocks gives lambda 2") {
    Design fano = builtin_design("fano");
    std::vector<std::vector<int>> doubled = fano.blocks;
    doubled.insert(doubled.end(), fano.blocks.begin(), fano.blocks.end());
    Design d = make_design(7, 3, 2, doubled);
    CHECK(d.lambda == 2);
    CHECK(d.replication == 6);
    CHECK(d.blocks.size() == 14);
}

TEST_CASE("design validation rejections") {
    // v must exceed the block size
    CHECK_THROWS_AS(make_design(3, 3, 1, {{0, 1, 2}}), parse_error);
    // wrong block size
    CHECK_THROWS_AS(make_design(7, 3, 1, {{0, 1}}), parse_error);
    // repeated point inside a block
    CHECK_THROWS_AS(make_design(7, 3, 1, {{0, 1, 1}}), parse_error);
    // out-of-range point
    CHECK_THROWS_AS(make_design(7, 3, 1, {{0, 1, 9}}), parse_error);
    // a pair covered the wrong number of times
    Design fano = builtin_design("fano");
    std::vector<std::vector<int>> missing(fano.blocks.begin(), fano.blocks.end() - 1);
    CHECK_THROWS_AS(make_design(7, 3, 1, missing), parse_error);
    CHECK_THROWS_WITH_AS(make_design(4, 3, 1, {{0, 1, 2}}), doctest::Contains("covered"),
                         parse_error);
    // bad resolution classes on ag23
    Design ag = builtin_design("ag23");
    CHECK_THROWS_AS(make_design(9, 3, 1, ag.blocks, {{0, 1}}), parse_error);
    CHECK_THROWS_AS(make_design(9, 3, 1, ag.blocks, {{0, 1, 2}, {0, 3, 4}}), parse_error);
    CHECK_THROWS_AS(make_design(9, 3, 1, ag.blocks, {{0, 1, 3}}), parse_error);
}

TEST_CASE("design text round trip") {
    Design fano = builtin_design("fano");
    Design back = parse_design(format_design(fano));
    CHECK(back.points == 7);
    CHECK(back.blocks == fano.blocks);

    CHECK_THROWS_AS(parse_design(""), parse_error);
    CHECK_THROWS_AS(parse_design("7 3\n0 1 3\n"), parse_error);
    CHECK_THROWS_AS(parse_design("7 3 1\n0 1 x\n"), parse_error);
}

TEST_CASE("incidence graph of fano is the heawood graph") {
    Graph g = incidence_graph(builtin_design("fano"));
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 21);
    for (int v = 0; v < 14; ++v) CHECK(g.degree(v) == 3);
    CHECK(graph_stats(g).girth == 6);
    CHECK(g.label(0) == "p0");
}

TEST_CASE("incidence graph of ag23") {
    Graph g = incidence_graph(builtin_design("ag23"));
    CHECK(g.order() == 21);
    CHECK(g.edge_count() == 36);
    for (int v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);      // points: replication
    for (int v = 9; v < 21; ++v) CHECK(g.degree(v) == 3);     // blocks: size
    CHECK(g.connected());
}

TEST_CASE("block intersection graphs") {
    Graph kf = block_intersection_graph(builtin_design("fano"));
    CHECK(testhelp::same_edges(kf, complete_graph(7)));

    Graph ka = block_intersection_graph(builtin_design("ag23"));
    CHECK(ka.order() == 12);
    CHECK(ka.edge_count() == 54);    // complete 4-partite with parts of size 3
    for (int v = 0; v < 12; ++v) CHECK(ka.degree(v) == 9);
}
