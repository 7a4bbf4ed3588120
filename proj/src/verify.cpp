#include "ncd/verify.hpp"

#include "ncd/formulas.hpp"
#include "ncd/hopf.hpp"
#include "ncd/parking.hpp"
#include "ncd/parking_tree.hpp"
#include "ncd/plane_tree.hpp"
#include "ncd/poset.hpp"
#include "ncd/series.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ncd {

namespace {

void check(std::vector<CheckResult>& results, const std::string& name, bool ok,
           const std::string& detail = "") {
    results.push_back({name, ok, detail});
}

} // namespace

std::vector<CheckResult> run_verification(int n, int d, std::uint64_t seed,
                                          long long element_budget) {
    std::vector<CheckResult> results;
    const int k = (n - 1) / d;
    GradedPoset p = build_poset(n, d, element_budget);

    check(results, "cardinality formula",
          Int(p.size()) == closed_form(CountKind::Cardinality, d, k));

    {
        bool ok = true;
        for (const auto& pi : p.elements) {
            NoncrossingPartition dual = pi.kreweras_dual();
            ok = ok && pi.block_count() + dual.block_count() == n + 1;
            ok = ok && is_d_indivisible(pi, d) == is_d_indivisible_gaps(pi, d);
        }
        check(results, "dual rank identity and predicate agreement", ok);
    }

    {
        // Self-duality: Simion-Ullman is an order-reversing involution on
        // the element set.
        bool ok = true;
        for (int i = 0; i < p.size() && ok; ++i) {
            NoncrossingPartition su = p.elements[i].simion_ullman_dual();
            ok = ok && p.index_of(su) >= 0 && su.simion_ullman_dual() == p.elements[i];
        }
        for (int i = 0; i < p.size() && ok; ++i)
            for (int j = 0; j < p.size() && ok; ++j)
                if (p.leq(i, j))
                    ok = p.elements[j].simion_ullman_dual().refines(
                        p.elements[i].simion_ullman_dual());
        check(results, "Simion-Ullman self-duality", ok);
    }

    {
        bool ok = true;
        for (int i = 0; i < p.size(); ++i) {
            if (p.rank_of[i] == p.height() - 1 && !p.covers_up[i].empty())
                ok = ok && p.elements[i].block_count() == d + 1;
            for (int j : p.covers_up[i])
                ok = ok && p.elements[i].block_count() - p.elements[j].block_count() == d;
        }
        check(results, "coatoms and covers merge d+1 blocks", ok);
    }

    {
        std::vector<long long> counts = rank_counts(p);
        bool ok = true;
        for (int j = 0; j <= p.height(); ++j)
            ok = ok && Int(counts[j]) == closed_form(CountKind::RankCount, d, k - j, j);
        check(results, "rank count formula", ok);
    }

    check(results, "Mobius recursive = Hall = formula",
          mobius(p) == closed_form(CountKind::Mobius, d, k));

    {
        // Interval factorization: cardinality of every interval equals the
        // product over its factor sizes.
        bool ok = true;
        for (int i = 0; i < p.size() && ok; ++i)
            for (int j = 0; j < p.size() && ok; ++j) {
                if (!p.leq(i, j)) continue;
                Int prod = 1;
                for (int m : interval_factorization(p, i, j))
                    prod *= closed_form(CountKind::Cardinality, d, (m - 1) / d);
                ok = Int(interval(p, i, j).size()) == prod;
            }
        check(results, "interval factorization cardinalities", ok);
    }

    {
        bool ok = true;
        for (const auto& pi : p.elements) {
            LabeledPlaneTree t = partition_to_tree(pi);
            ok = ok && first_violated_label_property(t) == 0;
            ok = ok && tree_to_partition(t) == pi;
            ok = ok && tree_to_partition(reconstruct_labels(t.shape)) == pi;
        }
        check(results, "plane tree bijection round-trip", ok);
    }

    {
        auto chains = maximal_chains(p);
        Int expected_chains = 1; // (dk+1)^{k-1}
        for (int e = 0; e < k - 1; ++e) expected_chains *= n;
        bool ok = Int(chains.size()) == expected_chains;
        std::set<std::vector<int>> labels;
        for (const auto& chain : chains) {
            std::vector<NoncrossingPartition> parts;
            for (int idx : chain) parts.push_back(p.elements[idx]);
            std::vector<int> pf = chain_to_parking(parts, d);
            labels.insert(pf);
            ok = ok && parking_to_chain(pf, d) == parts;
        }
        ok = ok && labels.size() == chains.size();
        check(results, "chain/parking bijection", ok);
    }

    {
        ElReport report = el_check(p);
        check(results, "EL-labeling", report.ok);
        check(results, "falling chains formula",
              Int(falling_count(d, k)) == closed_form(CountKind::FallingChains, d, k));
    }

    {
        bool ok = true;
        auto trees = enumerate_parking_trees(d, k);
        std::set<std::vector<int>> pfs;
        for (const auto& t : trees) {
            std::vector<int> pf = tree_to_parking(t);
            pfs.insert(pf);
            ok = ok && parking_to_tree(pf, d) == t;
            ok = ok && tree_to_chain(t) == parking_to_chain(pf, d);
        }
        ok = ok && pfs.size() == trees.size() &&
             trees.size() == maximal_chains(p).size();
        check(results, "parking tree bijection and chains", ok);
    }

    {
        HopfElement schmitt = antipode_schmitt(p);
        HopfElement hyper = antipode_hypertrees(n, d);
        check(results, "antipode: Schmitt = hypertree expansion", schmitt == hyper,
              schmitt == hyper ? "" : schmitt.to_string() + " vs " + hyper.to_string());
        check(results, "Mobius via hypertrees",
              Int(mobius_via_hypertrees(n, d)) == closed_form(CountKind::Mobius, d, k));
    }

    {
        // Randomized series checks driven by the seed.
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> small(-3, 3);
        bool ok = true;
        const int order = std::min(k, 4);
        for (int trial = 0; trial < 3 && ok; ++trial) {
            std::vector<Rat> a{1}, a_star{1};
            for (int i = 0; i < std::max(order, 1); ++i) {
                a.push_back(small(rng));
                a_star.push_back(small(rng));
            }
            Series sa = Series::poly_x(a, order);
            Series sa_star = Series::poly_x(a_star, order);
            auto [c, c_star] = solve_cc_star(sa, sa_star, d, order);
            Series b = c * c_star;
            for (int kk = 0; kk <= order && ok; ++kk)
                ok = b.coeff_x(kk) == weighted_sum_b(kk, d, a, a_star);
        }
        check(results, "weighted sum oracle vs generating function", ok);

        std::vector<Rat> a{1};
        for (int i = 0; i < 6; ++i) a.push_back(small(rng));
        check(results, "Speicher identity", verify_speicher(d, 6, a).holds);
    }

    return results;
}

} // namespace ncd
