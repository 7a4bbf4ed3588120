#include "ncd/svg_render.hpp"

#include <cmath>
#include <sstream>

namespace ncd {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

std::string polygon(const std::vector<Point>& pts, const std::string& style) {
    std::ostringstream os;
    if (pts.size() == 1) {
        os << "<circle cx='" << fmt(pts[0].x) << "' cy='" << fmt(pts[0].y)
           << "' r='3' " << style << "/>\n";
        return os.str();
    }
    os << (pts.size() == 2 ? "<polyline points='" : "<polygon points='");
    for (const Point& p : pts) os << fmt(p.x) << "," << fmt(p.y) << " ";
    os << "' " << style << "/>\n";
    return os.str();
}

} // namespace

std::string render_circle_svg(const NoncrossingPartition& pi, bool with_dual) {
    const int n = pi.n();
    const double cx = 220, cy = 220, r = 170;
    auto ground = [&](int k) {
        double a = kPi / 2 + 2 * kPi * (k - 1) / n;
        return Point{cx + r * std::cos(a), cy - r * std::sin(a)};
    };
    auto prime = [&](int k) {
        double a = kPi / 2 + 2 * kPi * (k - 0.5) / n;
        return Point{cx + r * std::cos(a), cy - r * std::sin(a)};
    };
    auto outer = [&](Point p) {
        return Point{cx + (p.x - cx) * 1.13, cy + (p.y - cy) * 1.13};
    };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='440' height='440' "
           "font-size='13' font-family='serif'>\n";
    svg << "<circle cx='" << cx << "' cy='" << cy << "' r='" << r
        << "' fill='none' stroke='black'/>\n";
    for (const Block& b : pi.blocks()) {
        std::vector<Point> pts;
        for (int v : b) pts.push_back(ground(v));
        svg << polygon(pts, "fill='#bbbbbb' fill-opacity='0.7' stroke='black'");
    }
    if (with_dual) {
        NoncrossingPartition dual = pi.kreweras_dual();
        for (const Block& b : dual.blocks()) {
            std::vector<Point> pts;
            for (int v : b) pts.push_back(prime(v));
            svg << polygon(pts, "fill='#eeeeee' fill-opacity='0.7' stroke='black' "
                                "stroke-dasharray='5,3'");
        }
    }
    for (int v = 1; v <= n; ++v) {
        Point p = ground(v);
        svg << "<circle cx='" << fmt(p.x) << "' cy='" << fmt(p.y) << "' r='3' fill='black'/>\n";
        Point lab = outer(p);
        svg << "<text x='" << fmt(lab.x) << "' y='" << fmt(lab.y)
            << "' text-anchor='middle'>" << v << "</text>\n";
        if (with_dual) {
            Point q = prime(v);
            svg << "<circle cx='" << fmt(q.x) << "' cy='" << fmt(q.y)
                << "' r='3' fill='white' stroke='black'/>\n";
            Point plab = outer(q);
            svg << "<text x='" << fmt(plab.x) << "' y='" << fmt(plab.y)
                << "' text-anchor='middle'>" << v << "&#8242;</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

// Leaves evenly spaced, parents centered over their children.
std::vector<Point> layout(const std::vector<std::vector<int>>& children) {
    const int nv = static_cast<int>(children.size());
    std::vector<Point> pos(nv);
    std::vector<int> depth(nv, 0);
    int next_leaf = 0;
    auto place = [&](auto&& self, int v) -> void {
        if (children[v].empty()) {
            pos[v].x = 40.0 + 60.0 * next_leaf++;
            return;
        }
        for (int c : children[v]) {
            depth[c] = depth[v] + 1;
            self(self, c);
        }
        pos[v].x = (pos[children[v].front()].x + pos[children[v].back()].x) / 2;
    };
    place(place, 0);
    for (int v = 0; v < nv; ++v) pos[v].y = 40.0 + 70.0 * depth[v];
    return pos;
}

} // namespace

std::string render_labeled_tree_svg(const LabeledPlaneTree& t) {
    std::vector<Point> pos = layout(t.shape.children);
    std::vector<int> depth(t.shape.children.size(), 0);
    double w = 0, h = 0;
    for (const Point& p : pos) {
        w = std::max(w, p.x + 40);
        h = std::max(h, p.y + 40);
    }
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt(w) << "' height='" << fmt(h)
        << "' font-size='13' font-family='serif'>\n";
    for (std::size_t v = 0; v < t.shape.children.size(); ++v)
        for (int c : t.shape.children[v]) {
            depth[c] = depth[v] + 1;
            svg << "<line x1='" << fmt(pos[v].x) << "' y1='" << fmt(pos[v].y) << "' x2='"
                << fmt(pos[c].x) << "' y2='" << fmt(pos[c].y) << "' stroke='black'/>\n";
            svg << "<text x='" << fmt((pos[v].x + pos[c].x) / 2 + 6) << "' y='"
                << fmt((pos[v].y + pos[c].y) / 2) << "'>" << t.parent_label[c] << "</text>\n";
        }
    for (std::size_t v = 0; v < pos.size(); ++v) {
        bool black = depth[v] % 2 == 0;
        svg << "<circle cx='" << fmt(pos[v].x) << "' cy='" << fmt(pos[v].y) << "' r='6' fill='"
            << (black ? "black" : "white") << "' stroke='black'/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_parking_tree_svg(const DParkingTree& t) {
    std::vector<Point> pos = layout(t.children);
    std::vector<int> omega = dfs_order(t);
    double w = 0, h = 0;
    for (const Point& p : pos) {
        w = std::max(w, p.x + 40);
        h = std::max(h, p.y + 40);
    }
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt(w) << "' height='" << fmt(h)
        << "' font-size='13' font-family='serif'>\n";
    for (std::size_t v = 0; v < t.children.size(); ++v)
        for (int c : t.children[v])
            svg << "<line x1='" << fmt(pos[v].x) << "' y1='" << fmt(pos[v].y) << "' x2='"
                << fmt(pos[c].x) << "' y2='" << fmt(pos[c].y) << "' stroke='black'/>\n";
    for (std::size_t v = 0; v < pos.size(); ++v) {
        svg << "<circle cx='" << fmt(pos[v].x) << "' cy='" << fmt(pos[v].y)
            << "' r='14' fill='white' stroke='black'/>\n";
        std::string label = v == 0 ? "&#8734;"
                                   : std::to_string(t.label[v].first) + "<tspan dy='4' font-size='9'>" +
                                         std::to_string(t.label[v].second) + "</tspan>";
        svg << "<text x='" << fmt(pos[v].x) << "' y='" << fmt(pos[v].y + 4)
            << "' text-anchor='middle'>" << label << "</text>\n";
        svg << "<text x='" << fmt(pos[v].x + 18) << "' y='" << fmt(pos[v].y - 10)
            << "' fill='#777777'>" << omega[v] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace ncd
