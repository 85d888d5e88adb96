#include "vcqds/lie.hpp"

namespace vcqds {

std::size_t LieBasis::position(const PauliString& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw Error("Pauli string not in Lie basis: " + p.label());
    return it->second;
}

LieBasis lie_closure(const std::vector<PauliString>& generators, std::size_t cap) {
    if (generators.empty()) throw Error("lie_closure needs at least one generator");
    LieBasis basis;
    auto push = [&](const PauliString& p) {
        if (basis.contains(p)) return;
        if (basis.size() + 1 > cap) throw ClosureCapExceeded(basis.size() + 1, cap);
        basis.index.emplace(p, basis.elements.size());
        basis.elements.push_back(p);
    };
    for (const auto& g : generators) {
        if (g.is_identity()) continue;  // identity commutes with everything
        push(g);
    }
    if (basis.elements.empty()) throw Error("lie_closure: all generators are the identity");

    // Pair element j with every earlier element; newly produced strings are
    // appended and later reached when j sweeps past them.
    for (std::size_t j = 0; j < basis.elements.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto c = commutator(basis.elements[i], basis.elements[j]);
            if (c) push(c->string);
        }
    }
    return basis;
}

}  // namespace vcqds
