#include "motcalc/chart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace motcalc {

std::map<Trigrade, int> ExtChart::dot_counts() const
{
    std::map<Trigrade, int> out;
    for (const ChartDot& d : dots) out[d.deg]++;
    return out;
}

std::map<Trigrade, int> ExtChart::dot_counts(int stem_lo, int stem_hi, int s_max) const
{
    std::map<Trigrade, int> out;
    for (const ChartDot& d : dots) {
        int stem = d.deg.stem();
        if (stem < stem_lo || stem > stem_hi || d.deg.s > s_max) continue;
        out[d.deg]++;
    }
    return out;
}

int ExtChart::find_dot(Trigrade deg) const
{
    for (std::size_t i = 0; i < dots.size(); ++i)
        if (dots[i].deg == deg) return int(i);
    return -1;
}

void ExtChart::sort_canonical()
{
    std::vector<int> perm(dots.size());
    std::vector<std::pair<ChartDot, int>> tagged;
    for (std::size_t i = 0; i < dots.size(); ++i) tagged.push_back({dots[i], int(i)});
    std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
        if (!(a.first.deg == b.first.deg)) return a.first.deg < b.first.deg;
        return a.first.name < b.first.name;
    });
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        dots[i] = tagged[i].first;
        perm[std::size_t(tagged[i].second)] = int(i);
    }
    for (ChartEdge& e : edges) {
        e.src = perm[std::size_t(e.src)];
        e.dst = perm[std::size_t(e.dst)];
    }
    std::sort(edges.begin(), edges.end(), [](const ChartEdge& a, const ChartEdge& b) {
        if (a.label != b.label) return a.label < b.label;
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
}

static std::string tri_str(Trigrade t)
{
    std::ostringstream os;
    os << "(s=" << t.s << ", t=" << t.t << ", w=" << t.w << ", stem=" << t.stem() << ")";
    return os.str();
}

ChartDiff compare_dots(const ExtChart& a, const ExtChart& b, int stem_lo, int stem_hi,
                       int s_max)
{
    ChartDiff diff;
    auto ca = a.dot_counts(stem_lo, stem_hi, s_max);
    auto cb = b.dot_counts(stem_lo, stem_hi, s_max);
    std::set<Trigrade> keys;
    for (auto& [k, v] : ca) keys.insert(k);
    for (auto& [k, v] : cb) keys.insert(k);
    for (Trigrade k : keys) {
        int na = ca.count(k) ? ca[k] : 0;
        int nb = cb.count(k) ? cb[k] : 0;
        if (na != nb) {
            diff.equal = false;
            diff.mismatches.push_back(tri_str(k) + ": " + std::to_string(na) + " vs " +
                                      std::to_string(nb));
        }
    }
    return diff;
}

ChartDiff compare_edges(const ExtChart& a, const ExtChart& b, int stem_lo, int stem_hi,
                        int s_max)
{
    auto edge_counts = [&](const ExtChart& c) {
        std::map<std::tuple<std::string, Trigrade, Trigrade>, int> out;
        for (const ChartEdge& e : c.edges) {
            Trigrade s = c.dots[std::size_t(e.src)].deg;
            Trigrade d = c.dots[std::size_t(e.dst)].deg;
            int stem = s.stem();
            if (stem < stem_lo || stem > stem_hi || s.s > s_max) continue;
            int dstem = d.stem();
            if (dstem < stem_lo || dstem > stem_hi || d.s > s_max) continue;
            out[{e.label, s, d}]++;
        }
        return out;
    };
    ChartDiff diff;
    auto ca = edge_counts(a);
    auto cb = edge_counts(b);
    std::set<std::tuple<std::string, Trigrade, Trigrade>> keys;
    for (auto& [k, v] : ca) keys.insert(k);
    for (auto& [k, v] : cb) keys.insert(k);
    for (auto& k : keys) {
        int na = ca.count(k) ? ca[k] : 0;
        int nb = cb.count(k) ? cb[k] : 0;
        if (na != nb) {
            diff.equal = false;
            diff.mismatches.push_back(std::get<0>(k) + " " + tri_str(std::get<1>(k)) + " -> " +
                                      tri_str(std::get<2>(k)) + ": " + std::to_string(na) +
                                      " vs " + std::to_string(nb));
        }
    }
    return diff;
}

ExtChart regrade_double(const ExtChart& classical)
{
    ExtChart out;
    for (const ChartDot& d : classical.dots) {
        // (s, t) -> (s, 2t, t); image satisfies stem + s - 2w = 0
        out.dots.push_back({{d.deg.s, 2 * d.deg.t, d.deg.t}, d.name});
    }
    for (const ChartEdge& e : classical.edges) {
        std::string label = e.label;
        if (label == "h0")
            label = "h1";
        else if (label == "h1")
            label = "h2";
        else if (label == "h2")
            label = "h3";
        out.edges.push_back({label, e.src, e.dst});
    }
    return out;
}

}  // namespace motcalc
