#pragma once

#include <string>

namespace homodigraph {

// Shared outcome scale for structural checks.  At-scale verdicts speak about
// the truncation only; exact verdicts are reserved for inputs that are whole
// finite graphs (every vertex interior, search exhaustive).  Refutations are
// always witness-backed and sound for the ambient graph.
enum class Verdict {
    VerifiedAtScale,
    Refuted,
    ExactTrue,
    ExactFalse,
    Inconclusive,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::VerifiedAtScale: return "verified-at-scale";
        case Verdict::Refuted: return "refuted";
        case Verdict::ExactTrue: return "exact-true";
        case Verdict::ExactFalse: return "exact-false";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline bool verdict_positive(Verdict v) {
    return v == Verdict::VerifiedAtScale || v == Verdict::ExactTrue;
}

inline bool verdict_negative(Verdict v) {
    return v == Verdict::Refuted || v == Verdict::ExactFalse;
}

}  // namespace homodigraph
