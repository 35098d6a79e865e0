#pragma once

// Weyl group orbits by breadth-first closure under the simple reflections,
// explicit reflection chains, and fundamental weights.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rootsystem.hpp"

namespace microweight {

/// Finite multiset of weights of one system, kept in lexicographic order of
/// the exact ambient coordinates so that two sets compare bit-exactly.
class WeightSet {
public:
    WeightSet() = default;

    explicit WeightSet(const std::vector<Weight>& ws)
    {
        for (const auto& w : ws) insert(w);
    }

    void insert(const Weight& w, std::size_t multiplicity = 1)
    {
        if (multiplicity == 0) return;
        if (!elements_.empty() && elements_.begin()->first.coords.size() != w.coords.size())
            throw std::invalid_argument("weight dimension differs from the rest of the set");
        elements_[w] += multiplicity;
    }

    bool contains(const Weight& w) const { return elements_.count(w) != 0; }

    std::size_t multiplicity(const Weight& w) const
    {
        const auto it = elements_.find(w);
        return it == elements_.end() ? 0 : it->second;
    }

    /// Number of distinct weights.
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    /// Sum of multiplicities.
    std::size_t total_count() const
    {
        std::size_t n = 0;
        for (const auto& [w, m] : elements_) n += m;
        return n;
    }

    /// Distinct weights in canonical order.
    std::vector<Weight> elements() const
    {
        std::vector<Weight> out;
        out.reserve(elements_.size());
        for (const auto& [w, m] : elements_) out.push_back(w);
        return out;
    }

    const std::map<Weight, std::size_t>& entries() const { return elements_; }

    friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.elements_ == b.elements_; }
    friend bool operator!=(const WeightSet& a, const WeightSet& b) { return !(a == b); }

private:
    std::map<Weight, std::size_t> elements_;
};

/// Ordered list of roots; applied left to right.
struct ReflectionChain {
    std::vector<Weight> steps;
};

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// Orbit element together with a word in the simple reflections carrying
/// the seed onto it: element = s_{word.back()} ... s_{word.front()} (seed).
/// Indices are 0-based simple-root positions.
struct OrbitPath {
    Weight element;
    std::vector<std::size_t> word;
};

/// BFS orbit with transport words, in discovery order (seed first).
inline std::vector<OrbitPath> orbit_with_paths(const RootSystem& system, const Weight& seed,
                                               std::size_t cap = kDefaultOrbitCap)
{
    system.check_dim(seed);
    std::map<Weight, std::size_t> index{{seed, 0}};
    std::vector<OrbitPath> out{{seed, {}}};
    std::size_t head = 0;
    while (head < out.size()) {
        for (std::size_t i = 0; i < system.rank(); ++i) {
            Weight y = reflect(system, system.simple_roots()[i], out[head].element);
            if (index.count(y)) continue;
            if (out.size() >= cap) throw RangeError("orbit exceeds cap of " + std::to_string(cap) + " elements");
            index.emplace(y, out.size());
            auto word = out[head].word;
            word.push_back(i);
            out.push_back({std::move(y), std::move(word)});
        }
        ++head;
    }
    return out;
}

/// W(R) . w as a set (multiplicity 1 each).
inline WeightSet orbit(const RootSystem& system, const Weight& w, std::size_t cap = kDefaultOrbitCap)
{
    WeightSet out;
    for (const auto& p : orbit_with_paths(system, w, cap)) out.insert(p.element);
    return out;
}

/// [start, S_{c1}(start), S_{c2}(S_{c1}(start)), ...]; throws NotARootError
/// if a step is not a root.
inline std::vector<Weight> apply_chain(const RootSystem& system, const ReflectionChain& chain, const Weight& start)
{
    std::vector<Weight> out{start};
    for (const auto& alpha : chain.steps) out.push_back(reflect(system, alpha, out.back()));
    return out;
}

inline Weight fundamental_weight(const RootSystem& system, std::size_t i) { return system.fundamental_weight(i); }

} // namespace microweight
