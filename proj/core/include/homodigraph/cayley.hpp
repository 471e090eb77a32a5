#pragma once
// Cayley balls of free products Z_k * ... * Z_k (n factors, generators
// a_0..a_{n-1} of order k).  Elements are normal-form words: alternating
// generator syllables a_i^e with e in 1..k-1.  The word metric used for balls
// is the underlying-graph distance: each syllable costs min(e, k-e).

#include <map>
#include <string>
#include <vector>

#include "homodigraph/ball.hpp"
#include "homodigraph/digraph.hpp"

namespace homodigraph {

// Interns group elements to dense ids on demand; the identity is id 0.
class FreeProductContext {
public:
    FreeProductContext(int n, int k);

    int factors() const { return n_; }
    int order() const { return k_; }
    int size() const { return static_cast<int>(words_.size()); }

    int mul_gen(int g, int gen, int exp);  // g * a_gen^exp, exp in 1..k-1
    int succ(int g, int gen) { return mul_gen(g, gen, 1); }
    int pred(int g, int gen) { return mul_gen(g, gen, k_ - 1); }

    int word_length(int g) const;  // graph distance from the identity
    std::string label(int g) const;

private:
    using Word = std::vector<std::pair<int, int>>;  // (generator, exponent)
    int intern(Word&& w);
    std::vector<Word> words_;
    std::map<Word, int> ids_;
    int n_, k_;
};

// Mixed-graph Cayley ball: directed cycle arcs g -> g*a_i for k >= 3; for
// k = 2 the involutive generators force symmetric pairs, stored as undirected
// edges with the successor table still giving the cycle structure.
struct CayleyBall {
    MixedGraph graph;
    std::vector<std::string> labels;
    std::vector<int> depth;
    std::vector<bool> interior;
    int center = 0;
    int radius = 0;
    int n = 0, k = 0;
    std::vector<std::vector<int>> succ;  // [v][gen] -> ball id of v*a_gen, -1 outside
};

CayleyBall make_cayley_ball(int n, int k, int radius);

// Digraph form per the family contract; rejects k = 2, whose symmetric pairs
// cannot live in an antisymmetric digraph (use make_cayley_ball for those).
LabeledBall make_cayley_free_product_ball(int n, int k, int radius);

// T(r): free product of r copies of Z_3; every vertex lies on r directed
// triangles.
LabeledBall make_t_ball(int r, int radius);

}  // namespace homodigraph
