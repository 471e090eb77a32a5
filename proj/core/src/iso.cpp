#include "homodigraph/iso.hpp"

#include <algorithm>
#include <array>

#include "homodigraph/detail/match.hpp"
#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

// (out, in, undirected) degree triple; preserved by any isomorphism.
std::array<int, 3> degree_key(const Digraph& g, int v) {
    return {g.out_degree(v), g.in_degree(v), 0};
}

std::array<int, 3> degree_key(const MixedGraph& g, int v) {
    return {static_cast<int>(g.out(v).size()), static_cast<int>(g.in(v).size()),
            static_cast<int>(g.und(v).size())};
}

template <class G>
std::vector<IsoMap> iso_impl(const G& a, const G& b, int limit, const IsoMap& seed) {
    std::vector<IsoMap> found;
    if (a.vertex_count() != b.vertex_count()) return found;
    if (a.arc_count() != b.arc_count()) return found;

    std::vector<int> all(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) all[v] = v;

    std::vector<int> seedImage(a.vertex_count(), -1);
    std::vector<char> seedUsed(b.vertex_count(), 0);
    for (auto [u, v] : seed) {
        if (u < 0 || u >= a.vertex_count() || v < 0 || v >= b.vertex_count())
            throw ConstructionError("find_isomorphism_fixing: seed out of range");
        if (seedImage[u] >= 0 || seedUsed[v])
            throw ConstructionError("find_isomorphism_fixing: seed not injective");
        seedImage[u] = v;
        seedUsed[v] = 1;
    }

    // Seeded vertices go first so conflicts surface immediately.
    std::vector<int> order;
    for (auto [u, v] : seed) order.push_back(u);
    std::vector<int> rest = detail::connectivity_order(a, all);
    for (int v : rest)
        if (seedImage[v] < 0) order.push_back(v);

    std::vector<std::vector<int>> cand(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        if (seedImage[u] >= 0) {
            cand[i] = {seedImage[u]};
            continue;
        }
        auto key = degree_key(a, u);
        for (int v = 0; v < b.vertex_count(); ++v)
            if (degree_key(b, v) == key) cand[i].push_back(v);
    }

    detail::match(a, b, order, cand, [&](const std::vector<int>& img) {
        IsoMap m;
        m.reserve(order.size());
        for (size_t i = 0; i < order.size(); ++i) m.push_back({order[i], img[i]});
        std::sort(m.begin(), m.end());
        found.push_back(std::move(m));
        return limit <= 0 || static_cast<int>(found.size()) < limit;
    });
    return found;
}

}  // namespace

std::vector<IsoMap> find_isomorphisms(const Digraph& a, const Digraph& b, int limit) {
    return iso_impl(a, b, limit, {});
}

std::vector<IsoMap> find_isomorphisms(const MixedGraph& a, const MixedGraph& b, int limit) {
    return iso_impl(a, b, limit, {});
}

bool isomorphic(const Digraph& a, const Digraph& b) { return !find_isomorphisms(a, b, 1).empty(); }
bool isomorphic(const MixedGraph& a, const MixedGraph& b) {
    return !find_isomorphisms(a, b, 1).empty();
}

std::optional<IsoMap> find_isomorphism_fixing(const Digraph& a, const Digraph& b,
                                              const IsoMap& seed) {
    auto res = iso_impl(a, b, 1, seed);
    if (res.empty()) return std::nullopt;
    return res.front();
}

std::optional<IsoMap> find_isomorphism_fixing(const MixedGraph& a, const MixedGraph& b,
                                              const IsoMap& seed) {
    auto res = iso_impl(a, b, 1, seed);
    if (res.empty()) return std::nullopt;
    return res.front();
}

std::optional<IsoMap> extend_isomorphism(const Digraph& g, const IsoMap& phi,
                                         const std::vector<int>& domain) {
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<char> inDomain(g.vertex_count(), 0);
    for (int v : domain) {
        if (v < 0 || v >= g.vertex_count())
            throw ConstructionError("extend_isomorphism: domain vertex out of range");
        inDomain[v] = 1;
    }
    std::vector<char> used(g.vertex_count(), 0);
    for (auto [u, v] : phi) {
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw ConstructionError("extend_isomorphism: map out of range");
        if (!inDomain[u]) throw ConstructionError("extend_isomorphism: map domain not in domain");
        if (image[u] >= 0 || used[v])
            throw ConstructionError("extend_isomorphism: map not injective");
        image[u] = v;
        used[v] = 1;
    }

    std::vector<int> order;
    for (auto [u, v] : phi) order.push_back(u);
    for (int v : detail::connectivity_order(g, domain))
        if (image[v] < 0) order.push_back(v);

    std::vector<std::vector<int>> cand(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        if (image[u] >= 0) {
            cand[i] = {image[u]};
        } else {
            cand[i].resize(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) cand[i][v] = v;
        }
    }

    std::optional<IsoMap> result;
    detail::match(g, g, order, cand, [&](const std::vector<int>& img) {
        IsoMap m;
        for (size_t i = 0; i < order.size(); ++i) m.push_back({order[i], img[i]});
        std::sort(m.begin(), m.end());
        result = std::move(m);
        return false;
    });
    return result;
}

}  // namespace homodigraph
