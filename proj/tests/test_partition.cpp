#include "ncd/partition.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace ncd;

namespace {

NoncrossingPartition figure_partition() {
    return NoncrossingPartition(11, {{1}, {2, 9, 10}, {3}, {4, 5, 6, 7, 8}, {11}});
}

} // namespace

TEST_CASE("is_noncrossing basics") {
    CHECK_FALSE(is_noncrossing(4, {{1, 3}, {2, 4}}));
    CHECK(is_noncrossing(5, {{1}, {2}, {3}, {4}, {5}}));
    CHECK(is_noncrossing(11, {{1}, {2, 9, 10}, {3}, {4, 5, 6, 7, 8}, {11}}));
    // not a set partition
    CHECK_FALSE(is_noncrossing(3, {{1, 2}}));
    CHECK_FALSE(is_noncrossing(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(NoncrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(NoncrossingPartition(0, {}), std::invalid_argument);
}

TEST_CASE("is_noncrossing agrees with the quadruple-scan oracle on all partitions of [6]") {
    for (const Blocks& blocks : oracle::all_set_partitions(6))
        CHECK(is_noncrossing(6, blocks) == oracle::partition_noncrossing(blocks));
}

TEST_CASE("kreweras dual of the circle-figure partition") {
    NoncrossingPartition dual = figure_partition().kreweras_dual();
    CHECK(dual.blocks() ==
          Blocks{{1, 10, 11}, {2, 3, 8}, {4}, {5}, {6}, {7}, {9}});
}

TEST_CASE("kreweras dual extremes and small case") {
    NoncrossingPartition singletons(4, {{1}, {2}, {3}, {4}});
    CHECK(singletons.kreweras_dual().blocks() == Blocks{{1, 2, 3, 4}});
    NoncrossingPartition pair(3, {{1, 2}, {3}});
    CHECK(pair.kreweras_dual().blocks() == Blocks{{1}, {2, 3}});
}

TEST_CASE("kreweras dual equals the coarsest-valid oracle on all of NC_5") {
    for (const auto& pi : oracle::brute_noncrossing(5))
        CHECK(pi.kreweras_dual() == oracle::brute_kreweras(pi));
}

TEST_CASE("rank identity |pi| + |pi'| = n + 1 over NC_7") {
    for (const auto& pi : oracle::brute_noncrossing(7)) {
        NoncrossingPartition dual = pi.kreweras_dual();
        CHECK(pi.block_count() + dual.block_count() == 8);
    }
}

TEST_CASE("pi united with its dual is noncrossing on the interleaved cycle, NC_6") {
    for (const auto& pi : oracle::brute_noncrossing(6)) {
        // positions: i at 2i-1, i' at 2i; the union must stay noncrossing on
        // the 2n cycle, checked with the literal pattern scan on every
        // rotation.
        Blocks merged;
        for (const Block& b : pi.blocks()) {
            Block pos;
            for (int v : b) pos.push_back(2 * v - 1);
            merged.push_back(pos);
        }
        NoncrossingPartition dual = pi.kreweras_dual();
        for (const Block& b : dual.blocks()) {
            Block pos;
            for (int v : b) pos.push_back(2 * v);
            merged.push_back(pos);
        }
        for (int rot = 0; rot < 12; ++rot) {
            Blocks rotated;
            for (const Block& b : merged) {
                Block r;
                for (int p : b) r.push_back((p - 1 + rot) % 12 + 1);
                std::sort(r.begin(), r.end());
                rotated.push_back(r);
            }
            CHECK(oracle::partition_noncrossing(rotated));
        }
    }
}

TEST_CASE("simion-ullman dual is an involution on NC_5") {
    for (const auto& pi : oracle::brute_noncrossing(5))
        CHECK(pi.simion_ullman_dual().simion_ullman_dual() == pi);
}

TEST_CASE("simion-ullman dual reverses order on NC_4") {
    auto all = oracle::brute_noncrossing(4);
    CHECK(all.size() == 14);
    for (const auto& a : all)
        for (const auto& b : all)
            if (a.refines(b)) CHECK(b.simion_ullman_dual().refines(a.simion_ullman_dual()));
    NoncrossingPartition full(4, {{1, 2, 3, 4}});
    CHECK(full.simion_ullman_dual().block_count() == 4);
}

TEST_CASE("adjacencies: gamma values cover [n] and form a tree") {
    SUBCASE("n = 1") {
        auto adj = adjacencies(NoncrossingPartition(1, {{1}}));
        REQUIRE(adj.size() == 1);
        CHECK(adj[0].gamma == 1);
    }
    SUBCASE("figure partition") {
        auto adj = adjacencies(figure_partition());
        std::set<int> gammas;
        for (const auto& a : adj) gammas.insert(a.gamma);
        CHECK(gammas == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    }
    SUBCASE("acyclic and connected over NC_7") {
        for (const auto& pi : oracle::brute_noncrossing(7)) {
            NoncrossingPartition dual = pi.kreweras_dual();
            int vertices = pi.block_count() + dual.block_count();
            auto adj = adjacencies(pi);
            CHECK(static_cast<int>(adj.size()) == vertices - 1);
            // distinct edges + connectivity = tree
            std::set<std::pair<int, int>> edges;
            std::vector<int> comp(vertices);
            for (int i = 0; i < vertices; ++i) comp[i] = i;
            auto find = [&](auto&& self, int x) -> int {
                return comp[x] == x ? x : comp[x] = self(self, comp[x]);
            };
            for (const auto& a : adj) {
                edges.insert({a.block_index, a.dual_block_index});
                comp[find(find, a.block_index)] = find(find, pi.block_count() + a.dual_block_index);
            }
            CHECK(edges.size() == adj.size());
            for (int i = 1; i < vertices; ++i) CHECK(find(find, i) == find(find, 0));
        }
    }
}

TEST_CASE("d-indivisibility") {
    CHECK(is_d_indivisible(figure_partition(), 2));
    CHECK(is_d_indivisible(NoncrossingPartition(7, {{1, 2, 3, 4, 5, 6, 7}}), 3));
    CHECK(is_d_indivisible(NoncrossingPartition(5, {{1, 2, 3}, {4}, {5}}), 2));
    CHECK_FALSE(is_d_indivisible(NoncrossingPartition(5, {{1, 2}, {3}, {4}, {5}}), 2));
}

TEST_CASE("the two d-indivisibility implementations agree on NC_n, n <= 9") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& pi : oracle::brute_noncrossing(n))
            for (int d : {1, 2, 3, 4})
                CHECK(is_d_indivisible(pi, d) == is_d_indivisible_gaps(pi, d));
}

TEST_CASE("nonempty NC^d_n forces n = 1 mod d, n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        auto all = oracle::brute_noncrossing(n);
        for (int d = 2; d <= 4; ++d) {
            bool any = false;
            for (const auto& pi : all) any = any || is_d_indivisible(pi, d);
            if (any) CHECK(n % d == 1 % d);
            if (n % d == 1 % d) CHECK(any); // the full block is always there
        }
    }
}

TEST_CASE("all-but-one dual congruence forces membership (perturbation search, NC_7)") {
    for (int d : {2, 3}) {
        if (7 % d != 1 % d) continue;
        for (const auto& pi : oracle::brute_noncrossing(7)) {
            bool blocks_ok = true;
            for (const auto& b : pi.blocks())
                if ((b.size() - 1) % static_cast<std::size_t>(d) != 0) blocks_ok = false;
            if (!blocks_ok) continue;
            NoncrossingPartition dual = pi.kreweras_dual();
            int bad = 0;
            for (const auto& c : dual.blocks())
                if ((c.size() - 1) % static_cast<std::size_t>(d) != 0) ++bad;
            if (bad <= 1) CHECK(is_d_indivisible(pi, d));
        }
    }
}

TEST_CASE("dual block-count sums split by d (NC^d_n members)") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {9, 2}}) {
        for (const auto& pi : oracle::brute_noncrossing(n)) {
            if (!is_d_indivisible(pi, d)) continue;
            NoncrossingPartition dual = pi.kreweras_dual();
            long long lhs = (dual.block_count() - 1) / d;
            long long rhs = 0;
            for (const auto& b : pi.blocks()) rhs += (static_cast<long long>(b.size()) - 1) / d;
            CHECK(lhs == rhs);
            lhs = (pi.block_count() - 1) / d;
            rhs = 0;
            for (const auto& c : dual.blocks()) rhs += (static_cast<long long>(c.size()) - 1) / d;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("intertwining numbers") {
    CHECK(intertwining_number({}, {1}, 3) == 0);
    CHECK(intertwining_number({1, 2}, {}, 3) == 0);
    CHECK(intertwining_number({1}, {1}, 1) == 1);
    CHECK(intertwining_number({1, 3}, {1, 3}, 4) == 2);
    // direct scan oracle on random-ish subsets of [5]
    for (int bm = 0; bm < 32; ++bm)
        for (int cm = 0; cm < 32; ++cm) {
            Block b, c;
            for (int v = 0; v < 5; ++v) {
                if (bm & (1 << v)) b.push_back(v + 1);
                if (cm & (1 << v)) c.push_back(v + 1);
            }
            // oracle: walk the explicit interleaved cycle
            std::vector<int> tags;
            for (int v = 1; v <= 5; ++v) {
                if (std::binary_search(b.begin(), b.end(), v)) tags.push_back(0);
                if (std::binary_search(c.begin(), c.end(), v)) tags.push_back(1);
            }
            int expected = 0;
            for (std::size_t i = 0; i < tags.size(); ++i)
                if (tags[i] == 0 && tags[(i + 1) % tags.size()] == 1) ++expected;
            CHECK(intertwining_number(b, c, 5) == expected);
        }
}

TEST_CASE("canonical form and string output") {
    NoncrossingPartition pi(5, {{5}, {3, 2, 1}, {4}});
    CHECK(pi.blocks() == Blocks{{1, 2, 3}, {4}, {5}});
    CHECK(pi.to_string() == "1,2,3|4|5");
    CHECK(pi == NoncrossingPartition(5, {{1, 2, 3}, {4}, {5}}));
}
