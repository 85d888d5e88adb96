#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vcqds/pauli.hpp"

namespace vcqds {

/// Ordered Pauli-string basis closed under commutation. Element order is the
/// deterministic construction order of lie_closure, which downstream code
/// relies on for reproducible Cartan factor orderings.
struct LieBasis {
    std::vector<PauliString> elements;
    std::map<PauliString, std::size_t> index;

    std::size_t size() const { return elements.size(); }
    bool contains(const PauliString& p) const { return index.count(p) != 0; }

    /// Position of p, or throws if absent.
    std::size_t position(const PauliString& p) const;
};

/// Smallest commutator-closed set containing the generators, built by
/// breadth-first pairing in insertion order. Throws ClosureCapExceeded if the
/// basis would grow past cap.
LieBasis lie_closure(const std::vector<PauliString>& generators, std::size_t cap);

}  // namespace vcqds
