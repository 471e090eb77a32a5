#include "homodigraph/subgraphs.hpp"

#include <algorithm>

#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

// Include/exclude enumeration rooted at one vertex. Every connected set S
// within the allowed universe with root in S is reached by a unique forced
// path: at each state the smallest eligible frontier vertex is either
// included (emitting the grown set) or banned. Emission happens on the
// include edge plus once for the bare root, so each set appears exactly once.
struct Grower {
    const Digraph& g;
    int maxSize;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<char> allowed;  // universe for the current root
    std::vector<char> inSub, banned;
    std::vector<int> sub;  // kept sorted
    long long count = 0;
    bool aborted = false;

    int frontier_min() const {
        int best = -1;
        for (int v : sub)
            for (int w : g.underlying_neighbors(v))
                if (allowed[w] && !inSub[w] && !banned[w] && (best < 0 || w < best)) best = w;
        return best;
    }

    void grow() {
        if (aborted || static_cast<int>(sub.size()) >= maxSize) return;
        int f = frontier_min();
        if (f < 0) return;

        // include f
        sub.insert(std::lower_bound(sub.begin(), sub.end(), f), f);
        inSub[f] = 1;
        ++count;
        if (!visit(sub)) {
            aborted = true;
            return;
        }
        grow();
        inSub[f] = 0;
        sub.erase(std::lower_bound(sub.begin(), sub.end(), f));
        if (aborted) return;

        // exclude f
        banned[f] = 1;
        grow();
        banned[f] = 0;
    }
};

}  // namespace

long long enumerate_connected_subdigraphs(
    const Digraph& g, int maxSize, const std::vector<int>& roots,
    const std::function<bool(const std::vector<int>&)>& visit) {
    if (maxSize < 1) throw ConstructionError("enumerate_connected_subdigraphs: maxSize < 1");
    std::vector<int> rootList = roots;
    if (rootList.empty()) {
        rootList.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) rootList[v] = v;
    } else {
        std::sort(rootList.begin(), rootList.end());
        rootList.erase(std::unique(rootList.begin(), rootList.end()), rootList.end());
        for (int v : rootList)
            if (v < 0 || v >= g.vertex_count())
                throw ConstructionError("enumerate_connected_subdigraphs: root out of range");
    }

    Grower grower{g, maxSize, visit,
                  std::vector<char>(g.vertex_count(), 1),
                  std::vector<char>(g.vertex_count(), 0),
                  std::vector<char>(g.vertex_count(), 0),
                  {}};
    // A set is counted at its smallest root: later passes exclude earlier
    // roots from the universe so no set is seen twice.
    for (int root : rootList) {
        grower.sub = {root};
        grower.inSub[root] = 1;
        ++grower.count;
        if (!visit(grower.sub)) {
            grower.aborted = true;
        } else {
            grower.grow();
        }
        grower.inSub[root] = 0;
        if (grower.aborted) break;
        grower.allowed[root] = 0;
    }
    return grower.count;
}

}  // namespace homodigraph
