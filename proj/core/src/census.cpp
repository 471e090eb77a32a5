#include "homodigraph/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "homodigraph/errors.hpp"
#include "homodigraph/parallel.hpp"
#include "homodigraph/symmetry.hpp"

namespace homodigraph {

namespace {

bool mask_connected(int m, int n, unsigned mask) {
    const int total = m + n;
    auto edge = [&](int i, int j) { return (mask >> (i * n + j) & 1u) != 0; };
    std::vector<char> seen(total, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w = 0; w < total; ++w) {
            if (seen[w]) continue;
            bool adj = v < m ? (w >= m && edge(v, w - m)) : (w < m && edge(w, v - m));
            if (adj) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return reached == total;
}

// Sorted Y-neighborhood masks minimized over relabelings of X. Connected
// bipartite graphs have a unique part split up to swapping, so this plus a
// transpose pass when the parts have equal size is a full isomorphism code.
std::vector<unsigned> half_code(int m, int n, unsigned mask) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<unsigned> best;
    do {
        std::vector<unsigned> code(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                if (mask >> (i * n + j) & 1u) code[j] |= 1u << perm[i];
        std::sort(code.begin(), code.end());
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string canon_key(int m, int n, unsigned mask) {
    std::vector<unsigned> code = half_code(m, n, mask);
    if (m == n) {
        unsigned t = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (mask >> (i * n + j) & 1u) t |= 1u << (j * m + i);
        std::vector<unsigned> tcode = half_code(n, m, t);
        if (tcode < code) code = std::move(tcode);
    }
    std::string key = std::to_string(m) + "," + std::to_string(n) + ":";
    for (unsigned c : code) key += std::to_string(c) + ".";
    return key;
}

}  // namespace

BipartiteGraph census_graph(const CensusEntry& e) {
    BipartiteGraph g(e.m, e.n);
    for (int i = 0; i < e.m; ++i)
        for (int j = 0; j < e.n; ++j)
            if (e.mask >> (i * e.n + j) & 1u) g.add_edge(i, e.m + j);
    return g;
}

std::vector<std::string> expected_census_tags(int nMax) {
    std::vector<std::string> tags;
    for (int m = 1; m <= nMax / 2; ++m)
        for (int n = m; m + n <= nMax; ++n)
            tags.push_back(m == 2 && n == 2 ? std::string("cp(2)")
                                            : "complete-bipartite(" + std::to_string(m) + "," +
                                                  std::to_string(n) + ")");
    for (int k = 3; 2 * k <= nMax; ++k) tags.push_back("cp(" + std::to_string(k) + ")");
    for (int c = 8; c <= nMax; c += 2) tags.push_back("cycle(" + std::to_string(c) + ")");
    std::sort(tags.begin(), tags.end());
    return tags;
}

CensusReport census_c_homogeneous(int nMax) {
    if (nMax < 2 || nMax > 9)
        throw ConstructionError("census: nMax must be between 2 and 9");
    CensusReport report;
    report.nMax = nMax;

    std::vector<CensusEntry> candidates;
    std::set<std::string> seen;
    for (int m = 1; m <= nMax / 2; ++m)
        for (int n = m; m + n <= nMax; ++n) {
            const unsigned cells = 1u << (m * n);
            for (unsigned mask = 1; mask < cells; ++mask) {
                if (!mask_connected(m, n, mask)) continue;
                if (!seen.insert(canon_key(m, n, mask)).second) continue;
                CensusEntry e;
                e.m = m;
                e.n = n;
                e.mask = mask;
                e.edges = __builtin_popcount(mask);
                candidates.push_back(e);
            }
        }
    report.candidates = (long long)candidates.size();

    std::vector<char> pass(candidates.size(), 0);
    std::vector<std::string> tags(candidates.size());
    parallel_for((long long)candidates.size(), [&](long long i) {
        BipartiteGraph g = census_graph(candidates[i]);
        if (check_bipartite_c_homogeneity(g).verdict == Verdict::ExactTrue) {
            pass[i] = 1;
            tags[i] = classify_bipartite_shape(g).tag();
        }
    });

    std::vector<std::string> expected = expected_census_tags(nMax);
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (!pass[i]) continue;
        CensusEntry e = candidates[i];
        e.tag = tags[i];
        report.foundTags.push_back(e.tag);
        if (!std::binary_search(expected.begin(), expected.end(), e.tag))
            report.unexpected.push_back(e);
        report.found.push_back(std::move(e));
    }
    std::sort(report.foundTags.begin(), report.foundTags.end());
    for (const std::string& t : expected)
        if (!std::binary_search(report.foundTags.begin(), report.foundTags.end(), t))
            report.missing.push_back(t);
    return report;
}

}  // namespace homodigraph
