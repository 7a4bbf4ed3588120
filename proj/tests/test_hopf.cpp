#include "ncd/hopf.hpp"

#include "ncd/formulas.hpp"
#include "ncd/poset.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace ncd;

namespace {

HopfElement single(std::vector<int> sizes, long long coeff) {
    HopfElement h;
    h.add(std::move(sizes), coeff);
    return h;
}

std::set<std::vector<std::vector<int>>> as_edge_sets(const std::vector<Hypertree>& trees) {
    std::set<std::vector<std::vector<int>>> out;
    for (const auto& t : trees) out.insert(t.edges);
    return out;
}

} // namespace

TEST_CASE("HopfElement normalization") {
    HopfElement h;
    h.add({3, 1, 2, 1}, 2);
    h.add({2, 3}, -2);
    CHECK(h.terms().empty());
    h.add({1, 1}, 5); // pure unit
    CHECK(h.terms().size() == 1);
    CHECK(h.terms().begin()->first.empty());
    CHECK(h.to_string() == "5*[]");
}

TEST_CASE("phi on the smallest interval") {
    NoncrossingPartition bottom(3, {{1}, {2}, {3}});
    NoncrossingPartition top(3, {{1, 2, 3}});
    auto edges = phi(bottom, top);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(phi(top, bottom), std::invalid_argument);
    CHECK_THROWS_AS(phi(top, top), std::invalid_argument);
}

TEST_CASE("phi of a singleton merge in NC^2_5") {
    NoncrossingPartition bottom(5, {{1}, {2}, {3}, {4}, {5}});
    NoncrossingPartition sigma(5, {{1, 2, 3}, {4}, {5}});
    auto edges = phi(bottom, sigma);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].size() == 3);
    CHECK(edges[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("phi edge sizes are 1 mod d and phi(chain) is a noncrossing hypertree") {
    GradedPoset p = build_poset(7, 2);
    auto hypertrees = as_edge_sets(enumerate_hypertrees(7, 2));
    for (const auto& chain : maximal_chains(p)) {
        std::vector<NoncrossingPartition> parts;
        for (int idx : chain) parts.push_back(p.elements[idx]);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            for (const auto& e : phi(parts[i], parts[i + 1]))
                CHECK((e.size() - 1) % 2 == 0);
        auto edges = phi_chain(parts);
        CHECK(is_valid_hypertree(Hypertree{7, edges}, 2));
        CHECK(hypertrees.count(edges) == 1);
    }
}

TEST_CASE("every enumerated hypertree passes the invariant check; tweaks fail it") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 1}, {7, 2}, {7, 3}})
        for (const auto& t : enumerate_hypertrees(n, d)) CHECK(is_valid_hypertree(t, d));
    CHECK_FALSE(is_valid_hypertree(Hypertree{4, {{1, 2}, {3, 4}}}, 1));          // disconnected
    CHECK_FALSE(is_valid_hypertree(Hypertree{4, {{1, 3}, {2, 4}, {1, 2}}}, 1));  // crossing
    CHECK_FALSE(is_valid_hypertree(Hypertree{4, {{1, 2, 3, 4}, {1, 2}}}, 1));    // weight
    CHECK_FALSE(is_valid_hypertree(Hypertree{5, {{1, 2, 5}, {1, 3, 4}}}, 2));    // nested at 1
    CHECK(is_valid_hypertree(Hypertree{5, {{1, 2, 3}, {1, 4, 5}}}, 2));
}

TEST_CASE("phi(chain) factor sizes reproduce the interval factor product") {
    GradedPoset p = build_poset(7, 2);
    int count = 0;
    for_each_chain(p, 1'000'000, [&](const std::vector<int>& chain) {
        ++count;
        std::vector<int> from_phi;
        std::vector<NoncrossingPartition> parts;
        for (int idx : chain) parts.push_back(p.elements[idx]);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            for (const auto& e : phi(parts[i], parts[i + 1]))
                from_phi.push_back(static_cast<int>(e.size()));
        std::sort(from_phi.begin(), from_phi.end());
        std::vector<int> from_factorization;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            for (int m : interval_factorization(parts[i], parts[i + 1]))
                if (m > 1) from_factorization.push_back(m);
        std::sort(from_factorization.begin(), from_factorization.end());
        CHECK(from_phi == from_factorization);
    });
    CHECK(count > 49); // saturated chains plus all the skipping ones
}

TEST_CASE("hypertree enumeration small cases") {
    auto n3 = enumerate_hypertrees(3, 1);
    CHECK(as_edge_sets(n3) ==
          std::set<std::vector<std::vector<int>>>{
              {{1, 2, 3}}, {{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}, {{1, 3}, {2, 3}}});
    CHECK(enumerate_hypertrees(1, 1).size() == 1);
    CHECK(enumerate_hypertrees(1, 1)[0].edges.empty());
    // one full edge plus five two-triangle configurations
    auto n5d2 = enumerate_hypertrees(5, 2);
    CHECK(n5d2.size() == 6);
    int triangles = 0;
    for (const auto& t : n5d2)
        if (t.edges.size() == 2) ++triangles;
    CHECK(triangles == 5);
    CHECK_THROWS_AS(enumerate_hypertrees(6, 2), std::invalid_argument);
}

TEST_CASE("hypertree enumeration agrees with the subset-search oracle, n <= 5") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
                                                        {3, 2}, {5, 2}, {4, 3}, {5, 4}}) {
        auto fast = as_edge_sets(enumerate_hypertrees(n, d));
        auto brute = oracle::brute_hypertrees(n, d);
        std::set<std::vector<std::vector<int>>> brute_set;
        for (auto edges : brute) {
            std::sort(edges.begin(), edges.end());
            brute_set.insert(edges);
        }
        CHECK(fast == brute_set);
    }
}

TEST_CASE("antipode via Schmitt chains: frozen small values") {
    CHECK(antipode_schmitt(build_poset(3, 1)) == [] {
        HopfElement h;
        h.add({3}, -1);
        h.add({2, 2}, 3);
        return h;
    }());
    for (int d = 1; d <= 3; ++d)
        CHECK(antipode_schmitt(build_poset(d + 1, d)) == single({d + 1}, -1));
    CHECK(antipode_schmitt(build_poset(1, 1)) == single({}, 1));
    CHECK(antipode_schmitt(build_poset(5, 2)) == [] {
        HopfElement h;
        h.add({5}, -1);
        h.add({3, 3}, 5);
        return h;
    }());
}

TEST_CASE("antipode via hypertrees: frozen small values") {
    CHECK(antipode_hypertrees(3, 1) == [] {
        HopfElement h;
        h.add({3}, -1);
        h.add({2, 2}, 3);
        return h;
    }());
    for (int d = 1; d <= 3; ++d) CHECK(antipode_hypertrees(d + 1, d) == single({d + 1}, -1));
    CHECK(antipode_hypertrees(5, 2) == [] {
        HopfElement h;
        h.add({5}, -1);
        h.add({3, 3}, 5);
        return h;
    }());
}

TEST_CASE("the two antipode routes agree") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 2}, {7, 3}}) {
        HopfElement schmitt = antipode_schmitt(build_poset(n, d));
        HopfElement hyper = antipode_hypertrees(n, d);
        CHECK(schmitt == hyper);
        // the single-edge hypertree always carries coefficient -1
        auto it = schmitt.terms().find(std::vector<int>{n});
        REQUIRE(it != schmitt.terms().end());
        CHECK(it->second == -1);
    }
}

TEST_CASE("signed hypertree count equals the Mobius function") {
    CHECK(mobius_via_hypertrees(3, 1) == 2);
    CHECK(mobius_via_hypertrees(1, 1) == 1);
    CHECK(mobius_via_hypertrees(5, 2) == 4);
    for (auto [d, kmax] : std::vector<std::pair<int, int>>{{1, 5}, {2, 3}, {3, 2}, {4, 2}}) {
        for (int k = 0; k <= kmax; ++k)
            CHECK(Int(mobius_via_hypertrees(d * k + 1, d)) == closed_form(CountKind::Mobius, d, k));
    }
}

TEST_CASE("characters applied to the antipode match the poset invariants") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}, {7, 2}}) {
        GradedPoset p = build_poset(n, d);
        HopfElement s = antipode_schmitt(p);
        // zeta character (every factor to 1) inverts to the Mobius function
        Int zeta_of_s = 0;
        for (const auto& [sizes, coeff] : s.terms()) zeta_of_s += coeff;
        CHECK(zeta_of_s == mobius(p));
        // cardinality character inverts to the convolution square of mu
        Int card_of_s = 0;
        for (const auto& [sizes, coeff] : s.terms()) {
            Int prod = coeff;
            for (int m : sizes) prod *= closed_form(CountKind::Cardinality, d, (m - 1) / d);
            card_of_s += prod;
        }
        Int mu_convolved = 0;
        for (int z = 0; z < p.size(); ++z)
            if (p.leq(p.bottom, z) && p.leq(z, p.top))
                mu_convolved += mobius_recursive(interval(p, p.bottom, z)) *
                                mobius_recursive(interval(p, z, p.top));
        CHECK(card_of_s == mu_convolved);
    }
}
