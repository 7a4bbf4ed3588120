// Command-line front end: every computation of the library as a subcommand
// with machine-readable output.

#include "ncd/formulas.hpp"
#include "ncd/hopf.hpp"
#include "ncd/json_io.hpp"
#include "ncd/parking.hpp"
#include "ncd/parking_tree.hpp"
#include "ncd/plane_tree.hpp"
#include "ncd/poset.hpp"
#include "ncd/series.hpp"
#include "ncd/svg_render.hpp"
#include "ncd/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace ncd;

struct CommonOpts {
    int d = 1;
    std::optional<int> k;
    std::optional<int> n;
    std::string format = "text";
    std::string out;
    long long budget = kDefaultElementBudget;
    std::uint64_t seed = 1;
};

long long default_budget() {
    if (const char* env = std::getenv("NCD_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return kDefaultElementBudget;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_size = true) {
    cmd->add_option("--d", o.d, "parameter d")->check(CLI::PositiveNumber);
    if (with_size) {
        auto* k = cmd->add_option("--k", o.k, "rank parameter k (n = dk+1)");
        auto* n = cmd->add_option("--n", o.n, "ground set size n");
        k->excludes(n);
        n->excludes(k);
    }
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
    cmd->add_option("--out", o.out, "write output to FILE instead of stdout");
    cmd->add_option("--budget", o.budget, "element budget guardrail");
    cmd->add_option("--seed", o.seed, "seed for randomized verification");
}

int resolve_n(const CommonOpts& o) {
    if (o.n) {
        if (*o.n % o.d != 1 % o.d)
            throw CLI::ValidationError("--n", "n must be 1 mod d");
        return *o.n;
    }
    if (o.k) return o.d * *o.k + 1;
    throw CLI::ValidationError("--k/--n", "one of --k or --n is required");
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << payload;
    }
}

CountKind parse_kind(const std::string& name) {
    if (name == "cardinality") return CountKind::Cardinality;
    if (name == "mobius") return CountKind::Mobius;
    if (name == "singleton") return CountKind::Singleton;
    if (name == "small_blocks") return CountKind::SmallBlocks;
    if (name == "small_blocks_singleton") return CountKind::SmallBlocksSingleton;
    if (name == "falling_chains") return CountKind::FallingChains;
    if (name == "rank_count") return CountKind::RankCount;
    if (name == "singleton_rank") return CountKind::SingletonRank;
    if (name == "small_blocks_rank") return CountKind::SmallBlocksRank;
    throw CLI::ValidationError("--kind", "unknown kind " + name);
}

// Brute-force value matching a scalar counting kind, from the explicit poset.
Int brute_count(CountKind kind, const GradedPoset& p) {
    switch (kind) {
        case CountKind::Cardinality: return p.size();
        case CountKind::Mobius: return mobius(p);
        case CountKind::Singleton: {
            long long c = 0;
            for (const auto& pi : p.elements)
                if (pi.block(0).size() == 1) ++c;
            return c;
        }
        case CountKind::SmallBlocks:
        case CountKind::SmallBlocksSingleton: {
            long long c = 0;
            for (const auto& pi : p.elements) {
                auto small = [&](const NoncrossingPartition& q) {
                    for (const auto& b : q.blocks())
                        if (b.size() != 1 && static_cast<int>(b.size()) != p.d + 1) return false;
                    return true;
                };
                if (!small(pi) || !small(pi.kreweras_dual())) continue;
                if (kind == CountKind::SmallBlocksSingleton && pi.block(0).size() != 1) continue;
                ++c;
            }
            return c;
        }
        case CountKind::FallingChains:
            return falling_count(p.d, (p.n - 1) / p.d);
        default:
            throw std::invalid_argument("no brute-force path for this kind");
    }
}

int cmd_count(const CommonOpts& o, const std::string& kind_name, bool brute) {
    const int n = resolve_n(o);
    const int k = (n - 1) / o.d;
    CountKind kind = parse_kind(kind_name);
    Int formula = closed_form(kind, o.d, k);
    std::ostringstream text;
    if (brute) {
        Int b = brute_count(kind, build_poset(n, o.d, o.budget));
        bool match = b == formula;
        if (o.format == "json") {
            emit(o, Json{{"d", o.d}, {"k", k}, {"kind", kind_name},
                         {"formula", formula.str()}, {"brute", b.str()}, {"match", match}}
                        .dump());
        } else {
            text << "formula=" << formula.str() << " brute=" << b.str()
                 << (match ? " OK" : " MISMATCH");
            emit(o, text.str());
        }
        return match ? 0 : 1;
    }
    if (o.format == "json")
        emit(o, Json{{"d", o.d}, {"k", k}, {"kind", kind_name}, {"formula", formula.str()}}.dump());
    else
        emit(o, formula.str());
    return 0;
}

int cmd_table(const CommonOpts& o, const std::string& kind_name) {
    const int n = resolve_n(o);
    const int kmax = (n - 1) / o.d;
    CountKind kind = parse_kind(kind_name);
    std::ostringstream out;
    Json rows = Json::array();
    for (int k = 0; k <= kmax; ++k) {
        Json row = Json::array();
        std::ostringstream line;
        for (int j = 0; j <= k; ++j) {
            Int v = closed_form(kind, o.d, k - j, j);
            row.push_back(v.str());
            line << (j ? (o.format == "csv" ? "," : " ") : "") << v.str();
        }
        rows.push_back(row);
        out << line.str() << "\n";
    }
    if (o.format == "json")
        emit(o, Json{{"d", o.d}, {"kind", kind_name}, {"rows", rows}}.dump());
    else
        emit(o, out.str());
    return 0;
}

int cmd_poset(const CommonOpts& o) {
    GradedPoset p = build_poset(resolve_n(o), o.d, o.budget);
    emit(o, to_json(p).dump());
    return 0;
}

int cmd_mobius(const CommonOpts& o) {
    const int n = resolve_n(o);
    const int k = (n - 1) / o.d;
    Int mu = mobius(build_poset(n, o.d, o.budget));
    if (mu != closed_form(CountKind::Mobius, o.d, k)) {
        emit(o, "Mobius mismatch against the closed form");
        return 1;
    }
    if (o.format == "json")
        emit(o, Json{{"d", o.d}, {"k", k}, {"mobius", mu.str()}}.dump());
    else
        emit(o, mu.str());
    return 0;
}

int cmd_chains(const CommonOpts& o, const std::string& what) {
    GradedPoset p = build_poset(resolve_n(o), o.d, o.budget);
    auto chains = maximal_chains(p);
    if (what == "count") {
        emit(o, std::to_string(chains.size()));
        return 0;
    }
    Json arr = Json::array();
    for (const auto& chain : chains) {
        std::vector<NoncrossingPartition> parts;
        for (int idx : chain) parts.push_back(p.elements[idx]);
        if (what == "labels") {
            arr.push_back(Json{{"d", o.d}, {"values", chain_to_parking(parts, o.d)}});
        } else {
            Json steps = Json::array();
            for (const auto& pi : parts) steps.push_back(to_json(pi));
            arr.push_back(steps);
        }
    }
    emit(o, arr.dump());
    return 0;
}

int cmd_parking(const CommonOpts& o, const std::string& values_csv, const std::string& what) {
    std::vector<int> values;
    std::stringstream ss(values_csv);
    for (std::string item; std::getline(ss, item, ',');) values.push_back(std::stoi(item));
    if (what == "check") {
        bool ok = is_d_parking(values, o.d);
        emit(o, ok ? "valid" : "invalid");
        return 0;
    }
    if (what == "chain") {
        auto chain = parking_to_chain(values, o.d);
        Json steps = Json::array();
        for (const auto& pi : chain) steps.push_back(to_json(pi));
        emit(o, steps.dump());
        return 0;
    }
    if (what == "tree") {
        DParkingTree t = parking_to_tree(values, o.d);
        if (o.format == "svg")
            emit(o, render_parking_tree_svg(t));
        else
            emit(o, to_json(t).dump());
        return 0;
    }
    throw CLI::ValidationError("--emit", "unknown emit target " + what);
}

int cmd_trees(const CommonOpts& o, const std::string& constraint_name, const std::string& what) {
    const int n = resolve_n(o);
    ShapeConstraint constraint = ShapeConstraint::All;
    if (constraint_name == "deg1mod") constraint = ShapeConstraint::Degree1ModD;
    else if (constraint_name == "divisible") constraint = ShapeConstraint::DDivisible;
    else if (constraint_name == "ary") constraint = ShapeConstraint::DAry;
    else if (constraint_name != "all")
        throw CLI::ValidationError("--constraint", "unknown constraint " + constraint_name);

    // Shape enumeration runs on n+1 vertices for the partition bijection.
    auto shapes = enumerate_shapes(n + 1, constraint, o.d);
    if (what == "count") {
        emit(o, std::to_string(shapes.size()));
        return 0;
    }
    Json arr = Json::array();
    for (const PlaneTree& shape : shapes) {
        LabeledPlaneTree t = reconstruct_labels(shape);
        if (what == "partitions")
            arr.push_back(to_json(tree_to_partition(t)));
        else
            arr.push_back(to_json(t));
    }
    emit(o, arr.dump());
    return 0;
}

int cmd_series(const CommonOpts& o, const std::string& weights, const std::string& what,
               int order) {
    std::vector<Rat> a(static_cast<std::size_t>(order) + 1, 1);
    std::vector<Rat> a_star(static_cast<std::size_t>(order) + 1, 1);
    if (weights == "mobius") {
        for (int k = 0; k <= order; ++k) a[k] = Rat(closed_form(CountKind::Mobius, o.d, k));
    } else if (weights == "small") {
        for (int k = 2; k <= order; ++k) a[k] = a_star[k] = 0; // A = A* = 1 + x
    } else if (weights != "ones") {
        throw CLI::ValidationError("--weights", "unknown weight preset " + weights);
    }
    auto [c, cs] = solve_cc_star(Series::poly_x(a, order), Series::poly_x(a_star, order), o.d, order);
    Series value = what == "c" ? c : what == "cstar" ? cs : c * cs;
    if (o.format == "json") {
        emit(o, to_json(value).dump());
        return 0;
    }
    std::ostringstream out;
    const char* sep = o.format == "csv" ? "," : "  ";
    out << "x" << sep << "s" << sep << "t" << sep << "num" << sep << "den\n";
    for (const auto& [m, coeff] : value.terms())
        out << m.x << sep << m.s << sep << m.t << sep << numerator(coeff).str() << sep
            << denominator(coeff).str() << "\n";
    emit(o, out.str());
    return 0;
}

int cmd_antipode(const CommonOpts& o, const std::string& method) {
    const int n = resolve_n(o);
    Json out;
    if (method == "schmitt" || method == "both") {
        HopfElement s = antipode_schmitt(build_poset(n, o.d, o.budget));
        if (method == "both") {
            HopfElement h = antipode_hypertrees(n, o.d);
            if (!(s == h)) {
                emit(o, "antipode mismatch: " + s.to_string() + " vs " + h.to_string());
                return 1;
            }
        }
        out = to_json(s);
    } else if (method == "hypertree") {
        out = to_json(antipode_hypertrees(n, o.d));
    } else {
        throw CLI::ValidationError("--method", "unknown method " + method);
    }
    emit(o, out.dump());
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    auto results = run_verification(resolve_n(o), o.d, o.seed, o.budget);
    std::ostringstream out;
    bool all_ok = true;
    for (const auto& r : results) {
        out << (r.ok ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    emit(o, out.str());
    return all_ok ? 0 : 1;
}

int cmd_render(const CommonOpts& o, const std::string& what, const std::string& partition_json,
               const std::string& values_csv) {
    if (what == "circle") {
        NoncrossingPartition pi = partition_from_json(Json::parse(partition_json));
        emit(o, render_circle_svg(pi));
        return 0;
    }
    if (what == "tree") {
        NoncrossingPartition pi = partition_from_json(Json::parse(partition_json));
        emit(o, render_labeled_tree_svg(partition_to_tree(pi)));
        return 0;
    }
    if (what == "parking-tree") {
        std::vector<int> values;
        std::stringstream ss(values_csv);
        for (std::string item; std::getline(ss, item, ',');) values.push_back(std::stoi(item));
        emit(o, render_parking_tree_svg(parking_to_tree(values, o.d)));
        return 0;
    }
    throw CLI::ValidationError("--what", "unknown render target " + what);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-indivisible noncrossing partition toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    o.budget = default_budget();

    std::string kind = "cardinality";
    bool brute = false;
    auto* count = app.add_subcommand("count", "closed-form counts, optionally vs brute force");
    add_common(count, o);
    count->add_option("--kind", kind, "which count");
    count->add_flag("--brute", brute, "compare against the explicit poset");

    std::string table_kind = "rank_count";
    auto* table = app.add_subcommand("table", "rank-count triangle");
    add_common(table, o);
    table->add_option("--kind", table_kind, "which rank triangle");

    auto* poset = app.add_subcommand("poset", "dump the poset as JSON");
    add_common(poset, o);

    auto* mob = app.add_subcommand("mobius", "Mobius function of NC^d_n");
    add_common(mob, o);

    std::string chains_emit = "count";
    auto* chains = app.add_subcommand("chains", "maximal chains");
    add_common(chains, o);
    chains->add_option("--emit", chains_emit, "labels|chains|count");

    std::string parking_values, parking_emit = "chain";
    auto* parking = app.add_subcommand("parking", "parking function conversions");
    add_common(parking, o, /*with_size=*/false);
    parking->add_option("--values", parking_values, "comma separated values")->required();
    parking->add_option("--emit", parking_emit, "chain|tree|check");

    std::string trees_constraint = "all", trees_emit = "count";
    auto* trees = app.add_subcommand("trees", "plane tree enumeration");
    add_common(trees, o);
    trees->add_option("--constraint", trees_constraint, "all|deg1mod|divisible|ary");
    trees->add_option("--emit", trees_emit, "count|shapes|partitions");

    std::string series_weights = "ones", series_emit = "b";
    int series_order = 6;
    auto* series = app.add_subcommand("series", "solved generating functions as tables");
    add_common(series, o, /*with_size=*/false);
    series->add_option("--order", series_order, "truncation order in x");
    series->add_option("--weights", series_weights, "ones|mobius|small");
    series->add_option("--emit", series_emit, "c|cstar|b");

    std::string antipode_method = "both";
    auto* antipode = app.add_subcommand("antipode", "Hopf antipode of NC^d_n");
    add_common(antipode, o);
    antipode->add_option("--method", antipode_method, "schmitt|hypertree|both");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, o);

    std::string render_what = "circle", render_partition, render_values;
    auto* render = app.add_subcommand("render", "emit SVG figures");
    add_common(render, o);
    render->add_option("--what", render_what, "circle|tree|parking-tree");
    render->add_option("--partition", render_partition, "partition as JSON");
    render->add_option("--values", render_values, "parking function values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(o, kind, brute);
        if (table->parsed()) return cmd_table(o, table_kind);
        if (poset->parsed()) return cmd_poset(o);
        if (mob->parsed()) return cmd_mobius(o);
        if (chains->parsed()) return cmd_chains(o, chains_emit);
        if (parking->parsed()) return cmd_parking(o, parking_values, parking_emit);
        if (trees->parsed()) return cmd_trees(o, trees_constraint, trees_emit);
        if (series->parsed()) return cmd_series(o, series_weights, series_emit, series_order);
        if (antipode->parsed()) return cmd_antipode(o, antipode_method);
        if (verify->parsed()) return cmd_verify(o);
        if (render->parsed()) return cmd_render(o, render_what, render_partition, render_values);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
