#include "ncd/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace ncd {

Json to_json(const NoncrossingPartition& pi) {
    return Json{{"n", pi.n()}, {"blocks", pi.blocks()}};
}

NoncrossingPartition partition_from_json(const Json& j) {
    return NoncrossingPartition(j.at("n").get<int>(), j.at("blocks").get<Blocks>());
}

Json to_json(const GradedPoset& p) {
    Json elements = Json::array();
    for (const auto& pi : p.elements) elements.push_back(to_json(pi));
    Json covers = Json::array();
    for (int i = 0; i < p.size(); ++i)
        for (int j : p.covers_up[i]) covers.push_back(Json::array({i, j}));
    return Json{{"n", p.n}, {"d", p.d}, {"elements", elements}, {"covers", covers}};
}

GradedPoset poset_from_json(const Json& j) {
    GradedPoset p;
    p.n = j.at("n").get<int>();
    p.d = j.at("d").get<int>();
    for (const Json& e : j.at("elements")) p.elements.push_back(partition_from_json(e));
    p.covers_up.resize(p.elements.size());
    for (const Json& c : j.at("covers")) p.covers_up.at(c.at(0).get<int>()).push_back(c.at(1).get<int>());
    p.rank_of.resize(p.elements.size());
    for (int i = 0; i < p.size(); ++i) {
        p.rank_of[i] = (p.n - p.elements[i].block_count()) / p.d;
        if (p.elements[i].block_count() == p.n) p.bottom = i;
        if (p.elements[i].block_count() == 1) p.top = i;
    }
    return p;
}

namespace {

Json shape_to_nested(const PlaneTree& t, int v) {
    Json arr = Json::array();
    for (int c : t.children[v]) arr.push_back(shape_to_nested(t, c));
    return arr;
}

void shape_from_nested(const Json& j, PlaneTree& t, int v) {
    for (const Json& child : j) {
        int c = t.size();
        t.children[v].push_back(c);
        t.children.emplace_back();
        shape_from_nested(child, t, c);
    }
}

} // namespace

Json to_json(const LabeledPlaneTree& t) {
    std::vector<int> labels(t.parent_label.begin() + 1, t.parent_label.end());
    return Json{{"shape", shape_to_nested(t.shape, 0)}, {"labels", labels}};
}

LabeledPlaneTree labeled_tree_from_json(const Json& j) {
    LabeledPlaneTree t;
    t.shape.children.emplace_back();
    shape_from_nested(j.at("shape"), t.shape, 0);
    // The label array is optional; without it the unique valid labeling of
    // the shape is reconstructed.
    if (!j.contains("labels")) return reconstruct_labels(t.shape);
    // Nodes created by shape_from_nested are in preorder, matching labels.
    t.parent_label.assign(t.shape.children.size(), 0);
    auto labels = j.at("labels").get<std::vector<int>>();
    if (labels.size() + 1 != t.parent_label.size())
        throw std::invalid_argument("labeled tree JSON: label count mismatch");
    for (std::size_t v = 1; v < t.parent_label.size(); ++v) t.parent_label[v] = labels[v - 1];
    return t;
}

namespace {

Json parking_node_to_json(const DParkingTree& t, int v) {
    Json label;
    if (v == 0)
        label = "inf";
    else
        label = Json::array({t.label[v].first, t.label[v].second});
    Json kids = Json::array();
    for (int c : t.children[v]) kids.push_back(parking_node_to_json(t, c));
    return Json::array({label, kids});
}

void parking_node_from_json(const Json& j, DParkingTree& t, int v) {
    for (const Json& child : j.at(1)) {
        int c = static_cast<int>(t.children.size());
        t.children[v].push_back(c);
        t.children.emplace_back();
        const Json& label = child.at(0);
        if (label.is_string())
            throw std::invalid_argument("parking tree JSON: only the root is labeled inf");
        t.label.push_back({label.at(0).get<int>(), label.at(1).get<int>()});
        parking_node_from_json(child, t, c);
    }
}

} // namespace

Json to_json(const DParkingTree& t) {
    return Json{{"d", t.d}, {"k", t.k}, {"tree", parking_node_to_json(t, 0)}};
}

DParkingTree parking_tree_from_json(const Json& j) {
    DParkingTree t;
    t.d = j.at("d").get<int>();
    t.k = j.at("k").get<int>();
    t.children.emplace_back();
    t.label.push_back({0, 0});
    const Json& root = j.at("tree");
    if (!root.at(0).is_string() || root.at(0).get<std::string>() != "inf")
        throw std::invalid_argument("parking tree JSON: root label must be \"inf\"");
    parking_node_from_json(root, t, 0);
    validate_parking_tree(t);
    return t;
}

Json to_json(const DParkingFunction& pf) {
    return Json{{"d", pf.d}, {"values", pf.values}};
}

DParkingFunction parking_function_from_json(const Json& j) {
    DParkingFunction pf{j.at("d").get<int>(), j.at("values").get<std::vector<int>>()};
    if (!is_d_parking(pf.values, pf.d))
        throw std::invalid_argument("parking function JSON: values fail the d-parking bound");
    return pf;
}

namespace {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

} // namespace

Json to_json(const Series& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms()) {
        terms.push_back(Json{{"x", m.x},
                             {"s", m.s},
                             {"t", m.t},
                             {"num", int_to_json(numerator(c))},
                             {"den", int_to_json(denominator(c))}});
    }
    Json order = s.order() == Series::kExact ? Json("exact") : Json(s.order());
    return Json{{"order", order}, {"terms", terms}};
}

Series series_from_json(const Json& j) {
    int order = Series::kExact;
    if (!j.at("order").is_string()) order = j.at("order").get<int>();
    Series out(order);
    for (const Json& t : j.at("terms")) {
        Rat c(int_from_json(t.at("num")), int_from_json(t.at("den")));
        out += Series::monomial(c, t.at("x").get<int>(), t.at("s").get<int>(), t.at("t").get<int>(),
                                order);
    }
    return out;
}

Json to_json(const HopfElement& h) {
    Json arr = Json::array();
    for (const auto& [sizes, coeff] : h.terms())
        arr.push_back(Json{{"sizes", sizes}, {"coeff", coeff}});
    return arr;
}

} // namespace ncd
