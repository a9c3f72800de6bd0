// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/report.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/io.hpp"
#include "fsl/ladder/star.hpp"

namespace fsl {

struct LadderNode {
    std::vector<int> address;  // empty for the root
    Interval support;          // support of the excursion f_u
    double peak_point = 0.0;
    double excursion_sup = 0.0;
    GridFunction star;         // f*_u, on the source grid
    std::vector<LadderNode> children;
};

// Nodes are kept in expansion order; any prefix is a root-connected subtree.
struct LadderTree {
    GridFunction source;
    std::vector<LadderNode> nodes;        // children left empty here, see root()
    std::vector<std::ptrdiff_t> parent;   // -1 for the root
    std::vector<TracePoint> trace;        // (nodes expanded, sup |f - partial sum|)
    bool converged = false;
    int depth_built = 0;

    std::size_t node_count() const { return nodes.size(); }

    // Where the stars reach the source the sum is the source up to rounding (c + (f - c) need
    // not equal f); those nodes are snapped onto the source so the exact erased-function
    // scanner sees contact points as contact points.
    GridFunction partial_sum(std::size_t k) const
    {
        std::vector<double> v(source.size(), 0.0);
        for (std::size_t n = 0; n < std::min(k, nodes.size()); ++n)
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += nodes[n].star[i];
        const double snap = 16.0 * std::numeric_limits<double>::epsilon() * source.sup_norm();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i] - source[i]) <= snap) v[i] = source[i];
        return source.with_values(std::move(v));
    }

    LadderNode root() const
    {
        require(!nodes.empty(), "LadderTree: empty tree has no root");
        std::vector<std::vector<std::size_t>> kids(nodes.size());
        for (std::size_t n = 1; n < nodes.size(); ++n) kids[static_cast<std::size_t>(parent[n])].push_back(n);
        std::function<LadderNode(std::size_t)> build = [&](std::size_t n) {
            LadderNode out = nodes[n];
            auto ks = kids[n];
            std::sort(ks.begin(), ks.end(), [&](std::size_t x, std::size_t y) { return nodes[x].address < nodes[y].address; });
            for (std::size_t k : ks) out.children.push_back(build(k));
            return out;
        };
        return build(0);
    }
};

namespace detail {

struct PendingExcursion {
    GridFunction f;
    double sup;
    std::size_t seq;
    std::ptrdiff_t parent;
    std::vector<int> address;
};

struct LargerSupFirst {
    bool operator()(const PendingExcursion& a, const PendingExcursion& b) const
    {
        if (a.sup != b.sup) return a.sup < b.sup;
        return a.seq > b.seq;
    }
};

} // namespace detail

// Grows the excursion tree largest-sup-first.  Each expansion replaces an excursion f_u by
// its ladder star plus the excursions of f_u above the star, which have disjoint supports;
// so f minus the partial sum is exactly the sum of pending excursions.
inline LadderTree ladder_decompose(const GridFunction& f, std::size_t max_nodes, double sup_tol)
{
    for (double v : f.values()) require(v >= 0, "ladder_decompose: f must be non-negative");
    require(max_nodes >= 1, "ladder_decompose: max_nodes must be at least 1");
    LadderTree tree;
    tree.source = f;
    if (f.is_zero()) {
        tree.converged = true;
        tree.trace.push_back({0.0, 0.0});
        return tree;
    }
    std::priority_queue<detail::PendingExcursion, std::vector<detail::PendingExcursion>, detail::LargerSupFirst> queue;
    std::size_t seq = 0;
    queue.push({f, f.max_value(), seq++, -1, {}});
    std::vector<double> remainder = f.values();

    while (!queue.empty() && tree.nodes.size() < max_nodes) {
        auto e = queue.top();
        queue.pop();
        auto s = ladder_star(e.f);
        LadderNode node;
        node.address = e.address;
        node.support = e.f.support();
        node.peak_point = s.peak_point;
        node.excursion_sup = e.sup;
        const auto self = static_cast<std::ptrdiff_t>(tree.nodes.size());
        tree.depth_built = std::max(tree.depth_built, static_cast<int>(e.address.size()));

        int child = 0;
        std::size_t i = 0;
        while (i < e.f.size()) {
            if (!(e.f[i] > s.star[i])) {
                ++i;
                continue;
            }
            std::vector<double> v(e.f.size(), 0.0);
            double m = 0.0;
            for (; i < e.f.size() && e.f[i] > s.star[i]; ++i) {
                v[i] = e.f[i] - s.star[i];
                m = std::max(m, v[i]);
            }
            auto addr = e.address;
            addr.push_back(++child);
            queue.push({f.with_values(std::move(v)), m, seq++, self, std::move(addr)});
        }
        for (std::size_t k = 0; k < remainder.size(); ++k) remainder[k] -= s.star[k];
        node.star = std::move(s.star);
        tree.nodes.push_back(std::move(node));
        tree.parent.push_back(e.parent);

        double gap = 0.0;
        for (double r : remainder) gap = std::max(gap, std::abs(r));
        tree.trace.push_back({static_cast<double>(tree.nodes.size()), gap});
        if (gap <= sup_tol) break;
    }
    tree.converged = tree.trace.back().estimate <= sup_tol;
    return tree;
}

inline json to_json(const LadderNode& n)
{
    json kids = json::array();
    for (const auto& c : n.children) kids.push_back(to_json(c));
    return {{"address", n.address},
            {"support", {round12(n.support.lo), round12(n.support.hi)}},
            {"peak", round12(n.peak_point)},
            {"excursion_sup", round12(n.excursion_sup)},
            {"star", to_json(n.star)},
            {"children", kids}};
}

inline json to_json(const LadderTree& t)
{
    json j;
    j["converged"] = t.converged;
    j["status"] = t.converged ? "CONVERGED" : "NOT_CONVERGED";
    j["nodes"] = t.node_count();
    j["depth_built"] = t.depth_built;
    j["root"] = t.nodes.empty() ? json(nullptr) : to_json(t.root());
    return j;
}

inline std::string trace_csv(const LadderTree& t, const std::string& part)
{
    std::string out;
    for (const auto& p : t.trace) out += part + "," + fmt12(p.resolution) + "," + fmt12(p.estimate) + "\n";
    return out;
}

} // namespace fsl
