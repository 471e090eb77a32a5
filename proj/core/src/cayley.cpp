#include "homodigraph/cayley.hpp"

#include <algorithm>
#include <deque>

#include "homodigraph/errors.hpp"

namespace homodigraph {

FreeProductContext::FreeProductContext(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > 12) throw ConstructionError("free product: need 1 <= n <= 12");
    if (k < 2) throw ConstructionError("free product: need k >= 2");
    intern({});
}

int FreeProductContext::intern(Word&& w) {
    auto [it, fresh] = ids_.try_emplace(w, static_cast<int>(words_.size()));
    if (fresh) words_.push_back(std::move(w));
    return it->second;
}

int FreeProductContext::mul_gen(int g, int gen, int exp) {
    if (gen < 0 || gen >= n_) throw ConstructionError("free product: bad generator");
    if (exp < 1 || exp >= k_) throw ConstructionError("free product: bad exponent");
    Word w = words_[g];
    if (!w.empty() && w.back().first == gen) {
        int e = (w.back().second + exp) % k_;
        if (e == 0) w.pop_back();
        else w.back().second = e;
    } else {
        w.emplace_back(gen, exp);
    }
    return intern(std::move(w));
}

int FreeProductContext::word_length(int g) const {
    int len = 0;
    for (auto [gen, e] : words_[g]) len += std::min(e, k_ - e);
    return len;
}

std::string FreeProductContext::label(int g) const {
    const Word& w = words_[g];
    if (w.empty()) return "e";
    std::string s;
    for (auto [gen, e] : w) {
        if (!s.empty()) s += '.';
        s += static_cast<char>('a' + gen);
        if (e > 1) s += std::to_string(e);
    }
    return s;
}

CayleyBall make_cayley_ball(int n, int k, int radius) {
    if (radius < 0) throw ConstructionError("cayley ball: negative radius");
    FreeProductContext ctx(n, k);
    CayleyBall b;
    b.n = n;
    b.k = k;
    // BFS over the infinite Cayley graph; ball ids follow discovery order.
    std::vector<int> ctxIds{0};
    std::map<int, int> ballOf{{0, 0}};
    std::vector<int> depth{0};
    size_t qhead = 0;
    while (qhead < ctxIds.size()) {
        int v = static_cast<int>(qhead++);
        if (depth[v] == radius) continue;
        for (int gen = 0; gen < n; ++gen) {
            for (int nb : {ctx.succ(ctxIds[v], gen), ctx.pred(ctxIds[v], gen)}) {
                if (ballOf.try_emplace(nb, static_cast<int>(ctxIds.size())).second) {
                    ctxIds.push_back(nb);
                    depth.push_back(depth[v] + 1);
                }
            }
        }
    }
    int count = static_cast<int>(ctxIds.size());
    b.graph = MixedGraph(count);
    b.depth = std::move(depth);
    b.labels.reserve(count);
    b.succ.assign(count, std::vector<int>(n, -1));
    for (int v = 0; v < count; ++v) b.labels.push_back(ctx.label(ctxIds[v]));
    for (int v = 0; v < count; ++v) {
        for (int gen = 0; gen < n; ++gen) {
            auto it = ballOf.find(ctx.succ(ctxIds[v], gen));
            if (it == ballOf.end()) continue;
            b.succ[v][gen] = it->second;
            if (k == 2) b.graph.add_edge(v, it->second);
            else b.graph.add_arc(v, it->second);
        }
    }
    b.center = 0;
    b.radius = radius;
    b.interior.assign(count, false);
    for (int v = 0; v < count; ++v) b.interior[v] = b.depth[v] < radius;
    return b;
}

LabeledBall make_cayley_free_product_ball(int n, int k, int radius) {
    if (k < 3)
        throw ConstructionError(
            "cayley digraph ball: k = 2 forces symmetric pairs; use the mixed form");
    CayleyBall c = make_cayley_ball(n, k, radius);
    LabeledBall b;
    b.graph = Digraph(c.graph.vertex_count());
    for (Arc a : c.graph.arcs()) b.graph.add_arc(a.tail, a.head);
    b.center = c.center;
    b.radius = c.radius;
    b.depth = c.depth;
    b.interior = c.interior;
    b.labels = c.labels;
    b.family = "cayley:" + std::to_string(n) + "," + std::to_string(k) + "@r" +
               std::to_string(radius);
    return b;
}

LabeledBall make_t_ball(int r, int radius) {
    if (r < 1) throw ConstructionError("t family: need r >= 1");
    LabeledBall b = make_cayley_free_product_ball(r, 3, radius);
    b.family = "t:" + std::to_string(r) + "@r" + std::to_string(radius);
    return b;
}

}  // namespace homodigraph
