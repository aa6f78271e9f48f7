#pragma once

// All products of E, L, Lt up to a given number of factors, without repeats.

#include <set>
#include <vector>

#include "errors.hpp"
#include "invert.hpp"
#include "subst.hpp"

namespace sdual {

struct CorpusEntry {
    Substitution sub;
    Decomposition word; // first generator word producing sub
};

inline constexpr unsigned kCorpusCap = 10;

/// Ordered by word length, then lexicographically with E < L < Lt. Each
/// substitution appears once, with the first word that produces it.
inline std::vector<CorpusEntry> enumerate_corpus(unsigned max_len, unsigned cap = kCorpusCap) {
    if (max_len > cap)
        throw domain_error(ErrorKind::BadArgument,
                           "generator length " + std::to_string(max_len) + " exceeds the cap " + std::to_string(cap));
    std::vector<CorpusEntry> out;
    std::set<Substitution> seen;
    std::vector<CorpusEntry> layer{{Substitution::identity(), {}}};
    const Generator gens[] = {Generator::E, Generator::L, Generator::Lt};
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<CorpusEntry> next;
        next.reserve(layer.size() * 3);
        for (const CorpusEntry& e : layer)
            for (Generator g : gens) {
                CorpusEntry n{compose(e.sub, generator_subst(g)), e.word};
                n.word.factors.push_back(g);
                // a repeated substitution only yields repeated extensions
                if (!seen.insert(n.sub).second) continue;
                out.push_back(n);
                next.push_back(std::move(n));
            }
        layer = std::move(next);
    }
    return out;
}

/// Corpus members that are primitive with determinant +1.
inline std::vector<CorpusEntry> primitive_det1_corpus(unsigned max_len) {
    std::vector<CorpusEntry> out;
    for (auto& e : enumerate_corpus(max_len))
        if (is_primitive(e.sub) && det(e.sub) == 1) out.push_back(std::move(e));
    return out;
}

} // namespace sdual
