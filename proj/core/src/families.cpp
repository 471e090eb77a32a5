#include "homodigraph/families.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

// Base-graph oracle for the DL scaffold.  Labels are integer positions on the
// two sides of the base; neighbour lists are exact (for an infinite tree base
// the positions materialize on demand).  fresh_xlab / fresh_ylab pick the
// label carried by the first arc of a brand-new scaffold node, where any
// valid label may be chosen; edge-transitivity of the base makes the choice
// irrelevant up to isomorphism, which the permuted builder double-checks.
class DlBase {
public:
    virtual ~DlBase() = default;
    virtual std::vector<int> x_neighbors(int x) = 0;  // sorted y labels
    virtual std::vector<int> y_neighbors(int y) = 0;  // sorted x labels
    virtual std::pair<int, int> anchor_edge() = 0;    // an (x, y) edge
    virtual int fresh_xlab(int nodeSalt) = 0;
    virtual int fresh_ylab(int nodeSalt) = 0;

    bool adjacent(int x, int y) {
        std::vector<int> n = x_neighbors(x);
        return std::binary_search(n.begin(), n.end(), y);
    }
};

class FiniteDlBase final : public DlBase {
public:
    FiniteDlBase(const BipartiteGraph& b, std::vector<int> permX,
                 std::vector<int> permY, bool salted)
        : permX_(std::move(permX)), permY_(std::move(permY)), salted_(salted) {
        int nx = b.nx(), ny = b.ny();
        if (static_cast<int>(permX_.size()) != nx || static_cast<int>(permY_.size()) != ny)
            throw ConstructionError("dl ball: label permutation sizes do not match the base");
        xn_.resize(nx);
        yn_.resize(ny);
        for (auto [x, y] : b.edges()) {
            xn_[x].push_back(y - nx);
            yn_[y - nx].push_back(x);
        }
        // edges() is x-major, so xn_ rows are sorted already; resort yn_.
        for (auto& row : yn_) std::sort(row.begin(), row.end());
    }

    std::vector<int> x_neighbors(int x) override { return xn_[x]; }
    std::vector<int> y_neighbors(int y) override { return yn_[y]; }

    std::pair<int, int> anchor_edge() override {
        int x = permX_[0];
        if (xn_[x].empty()) throw ConstructionError("dl ball: anchor position has no edges");
        for (int y : permY_)
            if (std::binary_search(xn_[x].begin(), xn_[x].end(), y)) return {x, y};
        throw ConstructionError("dl ball: anchor position has no edges");
    }

    int fresh_xlab(int nodeSalt) override {
        return permX_[salted_ ? nodeSalt % permX_.size() : 0];
    }
    int fresh_ylab(int nodeSalt) override {
        return permY_[salted_ ? nodeSalt % permY_.size() : 0];
    }

private:
    std::vector<std::vector<int>> xn_, yn_;
    std::vector<int> permX_, permY_;
    bool salted_;
};

// Exact lazy T_{a,b}: X positions have degree a, Y positions degree b.  Fresh
// far-side labels get brand-new positions; the resulting forest of fragments
// embeds adjacency-faithfully into the one tree, so the oracle never
// under- or over-reports an edge.
class TreeDlBase final : public DlBase {
public:
    TreeDlBase(int a, int b) : a_(a), b_(b) { new_x(-1); }

    std::vector<int> x_neighbors(int x) override {
        while (static_cast<int>(xn_[x].size()) < a_) xn_[x].push_back(new_y(x));
        return xn_[x];
    }
    std::vector<int> y_neighbors(int y) override {
        while (static_cast<int>(yn_[y].size()) < b_) yn_[y].push_back(new_x(y));
        return yn_[y];
    }
    std::pair<int, int> anchor_edge() override { return {0, x_neighbors(0).front()}; }
    int fresh_xlab(int) override { return new_x(-1); }
    int fresh_ylab(int) override { return new_y(-1); }

private:
    int new_x(int parentY) {
        xn_.emplace_back();
        if (parentY >= 0) xn_.back().push_back(parentY);
        return static_cast<int>(xn_.size()) - 1;
    }
    int new_y(int parentX) {
        yn_.emplace_back();
        if (parentX >= 0) yn_.back().push_back(parentX);
        return static_cast<int>(yn_.size()) - 1;
    }
    int a_, b_;
    std::vector<std::vector<int>> xn_, yn_;
};

struct ScaffoldArc {
    int tail, head, xlab, ylab;
};

// A DL vertex is an arc of the scaffold tree; at each scaffold node the
// in-arcs carry distinct x labels and the out-arcs distinct y labels, and
// f -> e is a DL arc iff head(f) = tail(e) and (xlab(f), ylab(e)) is a base
// edge.  Arcs are grown breadth-first to the radius, then a completion pass
// per node adds every DL arc among the present vertices, so two depth-r
// vertices meeting at a node keep their arc.
LabeledBall build_dl(DlBase& base, int radius, const std::string& family) {
    if (radius < 0) throw ConstructionError("dl ball: radius must be >= 0");

    struct Node {
        std::map<int, int> inByX, outByY;  // label -> DL vertex id
    };
    std::vector<Node> nodes;
    std::vector<ScaffoldArc> dl;
    std::vector<int> depth;

    auto newNode = [&] {
        nodes.emplace_back();
        return static_cast<int>(nodes.size()) - 1;
    };
    auto newArc = [&](ScaffoldArc a, int d) {
        int id = static_cast<int>(dl.size());
        dl.push_back(a);
        depth.push_back(d);
        nodes[a.tail].outByY[a.ylab] = id;
        nodes[a.head].inByX[a.xlab] = id;
        return id;
    };
    auto getOut = [&](int t, int y, int d) {
        auto it = nodes[t].outByY.find(y);
        if (it != nodes[t].outByY.end()) return it->second;
        int h = newNode();
        return newArc({t, h, base.fresh_xlab(h), y}, d);
    };
    auto getIn = [&](int h, int x, int d) {
        auto it = nodes[h].inByX.find(x);
        if (it != nodes[h].inByX.end()) return it->second;
        int t = newNode();
        return newArc({t, h, x, base.fresh_ylab(t)}, d);
    };

    auto [ax, ay] = base.anchor_edge();
    int n0 = newNode(), n1 = newNode();
    newArc({n0, n1, ax, ay}, 0);

    for (int cur = 0; cur < static_cast<int>(dl.size()); ++cur) {
        if (depth[cur] >= radius) continue;
        ScaffoldArc e = dl[cur];  // copy: dl grows below
        for (int y : base.x_neighbors(e.xlab)) getOut(e.head, y, depth[cur] + 1);
        for (int x : base.y_neighbors(e.ylab)) getIn(e.tail, x, depth[cur] + 1);
    }

    int nv = static_cast<int>(dl.size());
    LabeledBall b;
    b.graph = Digraph(nv);
    for (const Node& node : nodes)
        for (auto [x, f] : node.inByX)
            for (auto [y, e] : node.outByY)
                if (base.adjacent(x, y)) b.graph.add_arc(f, e);

    b.center = 0;
    b.radius = radius;
    b.depth = std::move(depth);
    b.interior.resize(nv);
    b.labels.resize(nv);
    for (int v = 0; v < nv; ++v) {
        b.interior[v] = b.depth[v] < radius;
        b.labels[v] = std::to_string(dl[v].tail) + ">" + std::to_string(dl[v].head);
    }
    b.family = family;
    return b;
}

}  // namespace

LabeledBall make_dl_ball(const BipartiteGraph& base, int radius, const std::string& baseTag) {
    if (base.edge_count() == 0) throw ConstructionError("dl ball: base has no edges");
    if (!is_connected(base)) throw ConstructionError("dl ball: base must be connected");
    if (!is_edge_transitive(base))
        throw ConstructionError("dl ball: base must be edge transitive");
    std::vector<int> px(base.nx()), py(base.ny());
    for (int i = 0; i < base.nx(); ++i) px[i] = i;
    for (int i = 0; i < base.ny(); ++i) py[i] = i;
    FiniteDlBase oracle(base, std::move(px), std::move(py), false);
    return build_dl(oracle, radius, "dl:" + baseTag + "@r" + std::to_string(radius));
}

LabeledBall make_dl_ball_permuted(const BipartiteGraph& base, int radius,
                                  const std::vector<int>& permX,
                                  const std::vector<int>& permY) {
    if (base.edge_count() == 0) throw ConstructionError("dl ball: base has no edges");
    if (!is_connected(base)) throw ConstructionError("dl ball: base must be connected");
    if (!is_edge_transitive(base))
        throw ConstructionError("dl ball: base must be edge transitive");
    FiniteDlBase oracle(base, permX, permY, true);
    return build_dl(oracle, radius, "dl:custom@r" + std::to_string(radius));
}

LabeledBall make_dl_tree_ball(int a, int b, int radius) {
    if (a < 1 || b < 1) throw ConstructionError("dl ball: tree degrees must be >= 1");
    TreeDlBase oracle(a, b);
    return build_dl(oracle, radius,
                    "dl:tree:" + std::to_string(a) + "," + std::to_string(b) + "@r" +
                        std::to_string(radius));
}

LabeledBall make_j_segment(int r, int m) {
    if (r < 1) throw ConstructionError("j segment: fibre size must be >= 1");
    if (m < 1) throw ConstructionError("j segment: level span must be >= 1");
    int levels = 2 * m + 1;
    int nv = levels * r;
    auto id = [&](int i, int x) { return (i + m) * r + x; };

    LabeledBall b;
    b.graph = Digraph(nv);
    for (int i = -m; i < m; ++i)
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y) b.graph.add_arc(id(i, x), id(i + 1, y));

    b.center = id(0, 0);
    b.depth = distances_from(b.graph, b.center);
    b.radius = *std::max_element(b.depth.begin(), b.depth.end());
    b.interior.assign(nv, false);
    b.labels.resize(nv);
    for (int i = -m; i <= m; ++i)
        for (int x = 0; x < r; ++x) {
            int v = id(i, x);
            b.interior[v] = -m < i && i < m;
            b.labels[v] = std::to_string(i) + ":" + std::to_string(x);
        }
    b.family = "j:" + std::to_string(r) + "@m" + std::to_string(m);
    return b;
}

StarBall star_expand(const CayleyBall& c) {
    int n = c.n;
    int groups = c.graph.vertex_count();
    StarBall s;
    s.graph = MixedGraph(groups * n);
    s.labels.resize(groups * n);
    s.groupOf.resize(groups * n);
    s.genOf.resize(groups * n);
    s.cycleSucc.assign(groups * n, -1);
    s.interior.resize(groups * n);

    for (int g = 0; g < groups; ++g)
        for (int i = 0; i < n; ++i) {
            int v = g * n + i;
            s.labels[v] = c.labels[g] + ":" + std::to_string(i);
            s.groupOf[v] = g;
            s.genOf[v] = i;
            s.interior[v] = c.interior[g];
            for (int j = i + 1; j < n; ++j) s.graph.add_edge(v, g * n + j);
        }

    for (int g = 0; g < groups; ++g)
        for (int i = 0; i < n; ++i) {
            int t = c.succ[g][i];
            if (t < 0) continue;
            int v = g * n + i, w = t * n + i;
            s.cycleSucc[v] = w;
            if (c.k >= 3)
                s.graph.add_arc(v, w);
            else
                s.graph.add_edge(v, w);
        }

    s.center = c.center * n;
    return s;
}

Digraph tensor_product(const MixedGraph& g, const Digraph& h) {
    int nh = h.vertex_count();
    Digraph t(g.vertex_count() * nh);
    std::vector<Arc> harcs = h.arcs();
    for (const Arc& a : g.arcs())
        for (const Arc& b : harcs) t.add_arc(a.tail * nh + b.tail, a.head * nh + b.head);
    for (auto [u, v] : g.edges())
        for (const Arc& b : harcs) {
            t.add_arc(u * nh + b.tail, v * nh + b.head);
            t.add_arc(v * nh + b.tail, u * nh + b.head);
        }
    return t;
}

Digraph tensor_product(const Digraph& g, const Digraph& h) {
    int nh = h.vertex_count();
    Digraph t(g.vertex_count() * nh);
    std::vector<Arc> harcs = h.arcs();
    for (const Arc& a : g.arcs())
        for (const Arc& b : harcs) t.add_arc(a.tail * nh + b.tail, a.head * nh + b.head);
    return t;
}

Digraph arrow_k2() {
    Digraph g(2);
    g.add_arc(0, 1);
    return g;
}

Contraction contract_matching(const Digraph& g, const std::vector<Arc>& matching) {
    int n = g.vertex_count();
    std::vector<int> mate(n, -1);
    std::vector<char> isHead(n, 0);
    for (const Arc& a : matching) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n ||
            !g.has_arc(a.tail, a.head))
            throw ConstructionError("contract: arc not in digraph");
        if (mate[a.tail] != -1 || mate[a.head] != -1)
            throw ConstructionError("contract: matching arcs overlap");
        mate[a.tail] = a.head;
        mate[a.head] = a.tail;
        isHead[a.head] = 1;
    }

    Contraction c;
    c.classOf.assign(n, -1);
    int numClasses = 0;
    for (int v = 0; v < n; ++v) {
        if (c.classOf[v] != -1) continue;
        int id = numClasses++;
        c.classOf[v] = id;
        if (mate[v] != -1) {
            c.classOf[mate[v]] = id;
            if (isHead[v])
                c.members.push_back({mate[v], v});
            else
                c.members.push_back({v, mate[v]});
        } else {
            c.members.push_back({v, -1});
        }
    }

    c.graph = Digraph(numClasses);
    for (const Arc& a : g.arcs()) {
        int p = c.classOf[a.tail], q = c.classOf[a.head];
        if (p == q) continue;  // the contracted arc itself
        if (c.graph.has_arc(q, p))
            throw ConstructionError("contract: contraction induces a symmetric pair");
        c.graph.add_arc(p, q);
    }
    return c;
}

namespace {

void check_m_params(int n, int k, int radius) {
    if (n < 3) throw ConstructionError("m family: clique size must be >= 3");
    if (k < 2) throw ConstructionError("m family: cycle order must be >= 2");
    if (radius < 0) throw ConstructionError("m family: radius must be >= 0");
}

std::string m_family(int n, int k, int radius) {
    return "m:" + std::to_string(n) + "," + std::to_string(k) + "@r" + std::to_string(radius);
}

}  // namespace

LabeledBall make_m_ball(int n, int k, int radius) {
    check_m_params(n, k, radius);
    // Two extra Cayley layers so that every class within the target radius is
    // present as a full pair and carries exact honesty flags.
    CayleyBall cay = make_cayley_ball(n, k, radius + 2);
    StarBall star = star_expand(cay);
    Digraph tens = tensor_product(star.graph, arrow_k2());

    std::vector<Arc> matching;
    for (int v = 0; v < star.graph.vertex_count(); ++v)
        if (star.cycleSucc[v] >= 0) matching.push_back({2 * v, 2 * star.cycleSucc[v] + 1});
    Contraction con = contract_matching(tens, matching);

    // Keep only the pair classes: a class whose partner fell outside the
    // Cayley ball would sit in the quotient with a clipped neighbourhood.
    std::vector<int> keep;
    for (int cl = 0; cl < con.graph.vertex_count(); ++cl)
        if (con.members[cl][1] != -1) keep.push_back(cl);
    Digraph kg = induced_subdigraph(con.graph, keep);

    std::vector<bool> pre(keep.size());
    std::vector<std::string> lab(keep.size());
    for (int idx = 0; idx < static_cast<int>(keep.size()); ++idx) {
        int v = con.members[keep[idx]][0] / 2;  // level-0 member, a star vertex
        int s = con.members[keep[idx]][1] / 2;  // level-1 member
        pre[idx] = cay.interior[star.groupOf[v]] && cay.interior[star.groupOf[s]];
        lab[idx] = star.labels[v];
    }

    int centerClass = con.classOf[2 * star.center];
    int centerIdx =
        static_cast<int>(std::lower_bound(keep.begin(), keep.end(), centerClass) - keep.begin());
    if (centerIdx >= static_cast<int>(keep.size()) || keep[centerIdx] != centerClass)
        throw ConstructionError("m family: center pair missing from the quotient");

    std::vector<int> dist = distances_from(kg, centerIdx);
    std::vector<int> verts;
    for (int v = 0; v < kg.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) verts.push_back(v);

    LabeledBall b;
    b.graph = induced_subdigraph(kg, verts);
    b.radius = radius;
    b.depth.resize(verts.size());
    b.interior.resize(verts.size());
    b.labels.resize(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        int v = verts[i];
        b.depth[i] = dist[v];
        bool closed = true;
        for (int w : kg.underlying_neighbors(v))
            if (dist[w] < 0 || dist[w] > radius) closed = false;
        b.interior[i] = closed && pre[v];
        b.labels[i] = lab[v];
    }
    b.center =
        static_cast<int>(std::lower_bound(verts.begin(), verts.end(), centerIdx) - verts.begin());
    b.family = m_family(n, k, radius);
    return b;
}

LabeledBall make_m_ball_direct(int n, int k, int radius) {
    check_m_params(n, k, radius);
    FreeProductContext ctx(n, k);

    std::map<std::pair<int, int>, int> id;  // (group element, generator) -> vertex
    std::vector<std::pair<int, int>> vert;
    std::vector<int> depth;
    auto intern = [&](int g, int i, int d) {
        auto [it, fresh] = id.try_emplace({g, i}, static_cast<int>(vert.size()));
        if (fresh) {
            vert.push_back({g, i});
            depth.push_back(d);
        }
        return it->second;
    };

    intern(0, 0, 0);
    for (int cur = 0; cur < static_cast<int>(vert.size()); ++cur) {
        if (depth[cur] >= radius) continue;
        auto [g, i] = vert[cur];
        int gs = ctx.succ(g, i);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            intern(ctx.pred(g, j), j, depth[cur] + 1);  // out-neighbour
            intern(gs, j, depth[cur] + 1);              // in-neighbour
        }
    }

    int nv = static_cast<int>(vert.size());
    LabeledBall b;
    b.graph = Digraph(nv);
    for (int v = 0; v < nv; ++v) {
        auto [g, i] = vert[v];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            auto it = id.find({ctx.pred(g, j), j});
            if (it != id.end()) b.graph.add_arc(v, it->second);
        }
    }

    b.center = 0;
    b.radius = radius;
    b.depth = std::move(depth);
    b.interior.resize(nv);
    b.labels.resize(nv);
    for (int v = 0; v < nv; ++v) {
        b.interior[v] = b.depth[v] < radius;
        b.labels[v] = ctx.label(vert[v].first) + ":" + std::to_string(vert[v].second);
    }
    b.family = m_family(n, k, radius);
    return b;
}

namespace {

LabeledBall y_build(int n, int generations, bool swapAnchors) {
    if (n < 3) throw ConstructionError("y family: half-length must be >= 3");
    if (generations < 0) throw ConstructionError("y family: depth must be >= 0");

    struct Cyc {
        std::vector<int> pos;  // position on the cycle -> vertex id
        bool evenSource;       // even positions are sources
        int gen;
    };
    int twoN = 2 * n;
    std::vector<Cyc> cycles;
    std::vector<std::string> labels;
    int nv = 0;
    auto fresh = [&](int cyc, int p) {
        labels.push_back("c" + std::to_string(cyc) + "p" + std::to_string(p));
        return nv++;
    };
    auto role = [&](const Cyc& c, int p) { return ((p % 2) == 0) == c.evenSource; };

    {
        Cyc c0;
        c0.evenSource = true;
        c0.gen = 0;
        c0.pos.resize(twoN);
        for (int p = 0; p < twoN; ++p) c0.pos[p] = fresh(0, p);
        cycles.push_back(std::move(c0));
    }

    // Each antipodal degree-2 pair (p, p+n) spawns one new cycle in which the
    // pair sits at positions (0, n) with source/sink roles flipped; the pair a
    // cycle inherited from its own parent (its positions 0 and n) is skipped.
    for (int cur = 0; cur < static_cast<int>(cycles.size()); ++cur) {
        if (cycles[cur].gen >= generations) continue;
        int firstPair = cycles[cur].gen == 0 ? 0 : 1;
        for (int p0 = firstPair; p0 < n; ++p0) {
            Cyc parent = cycles[cur];  // copy: cycles grows below
            int u = parent.pos[p0], v = parent.pos[p0 + n];
            bool uSrc = role(parent, p0), vSrc = role(parent, p0 + n);
            Cyc child;
            child.gen = parent.gen + 1;
            child.pos.assign(twoN, -1);
            if (!swapAnchors) {
                child.pos[0] = u;
                child.pos[n] = v;
                child.evenSource = !uSrc;
            } else {
                child.pos[0] = v;
                child.pos[n] = u;
                child.evenSource = !vSrc;
            }
            int childIdx = static_cast<int>(cycles.size());
            for (int q = 0; q < twoN; ++q)
                if (child.pos[q] < 0) child.pos[q] = fresh(childIdx, q);
            cycles.push_back(std::move(child));
        }
    }

    LabeledBall b;
    b.graph = Digraph(nv);
    for (const Cyc& c : cycles)
        for (int p = 0; p < twoN; ++p) {
            int q = (p + 1) % twoN;
            if (role(c, p))
                b.graph.add_arc(c.pos[p], c.pos[q]);
            else
                b.graph.add_arc(c.pos[q], c.pos[p]);
        }

    b.center = 0;
    b.depth = distances_from(b.graph, b.center);
    b.radius = *std::max_element(b.depth.begin(), b.depth.end());
    b.interior.resize(nv);
    for (int v = 0; v < nv; ++v)
        b.interior[v] = b.graph.in_degree(v) == 2 && b.graph.out_degree(v) == 2;
    b.labels = std::move(labels);
    b.family = "y:" + std::to_string(n) + "@d" + std::to_string(generations);
    return b;
}

}  // namespace

LabeledBall make_y_ball(int n, int depth) { return y_build(n, depth, false); }

LabeledBall make_y_ball_variant(int n, int depth, bool swapAnchors) {
    return y_build(n, depth, swapAnchors);
}

std::pair<Digraph, std::vector<Arc>> line_digraph(const Digraph& d) {
    std::vector<Arc> as = d.arcs();
    int na = static_cast<int>(as.size());
    std::vector<std::vector<int>> outIdx(d.vertex_count());
    for (int e = 0; e < na; ++e) outIdx[as[e].tail].push_back(e);

    Digraph L(na);
    for (int e = 0; e < na; ++e)
        for (int f : outIdx[as[e].head]) L.add_arc(e, f);
    return {std::move(L), std::move(as)};
}

LabeledBall line_ball(const LabeledBall& b) {
    auto [L, as] = line_digraph(b.graph);
    int na = static_cast<int>(as.size());

    // Prefer an arc that is interior as a line vertex, so the result is a
    // valid ball around its own center; out-arcs beat in-arcs for ties.
    int centerArc = -1;
    for (int tier = 0; tier < 4 && centerArc < 0; ++tier) {
        bool wantOut = tier % 2 == 0, needInterior = tier < 2;
        for (int e = 0; e < na && centerArc < 0; ++e) {
            if ((wantOut ? as[e].tail : as[e].head) != b.center) continue;
            if (needInterior && !(b.interior[as[e].tail] && b.interior[as[e].head])) continue;
            centerArc = e;
        }
    }
    if (centerArc < 0) throw ConstructionError("line ball: center has no incident arc");

    std::vector<int> comp = weak_component(L, centerArc);
    LabeledBall r;
    r.graph = induced_subdigraph(L, comp);
    int nv = static_cast<int>(comp.size());
    r.center = static_cast<int>(std::lower_bound(comp.begin(), comp.end(), centerArc) -
                                comp.begin());
    r.depth = distances_from(r.graph, r.center);
    r.radius = *std::max_element(r.depth.begin(), r.depth.end());
    r.interior.resize(nv);
    r.labels.resize(nv);
    for (int i = 0; i < nv; ++i) {
        const Arc& a = as[comp[i]];
        r.interior[i] = b.interior[a.tail] && b.interior[a.head];
        r.labels[i] = "(" + b.labels[a.tail] + ">" + b.labels[a.head] + ")";
    }
    r.family = "line(" + b.family + ")";
    return r;
}

LabeledBall make_directed_cycle_ball(int n) {
    if (n < 3) throw ConstructionError("directed cycle: length must be >= 3");
    LabeledBall b;
    b.graph = Digraph(n);
    for (int i = 0; i < n; ++i) b.graph.add_arc(i, (i + 1) % n);
    b.center = 0;
    b.radius = n / 2;
    b.depth.resize(n);
    b.interior.assign(n, true);
    b.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        b.depth[i] = std::min(i, n - i);
        b.labels[i] = std::to_string(i);
    }
    b.family = "dcycle:" + std::to_string(n);
    return b;
}

}  // namespace homodigraph
