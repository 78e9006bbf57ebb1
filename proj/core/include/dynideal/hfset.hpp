// Hereditarily finite sets over atoms, hash-consed.
//
// Every node is interned once: equal contents give the identical id, so
// structural equality is id equality in constant time. Members are stored in
// canonical order (atoms by index, then sets by their canonical literal), so
// printing is reproducible across runs. The intern table is the single
// shared structure; it only ever grows and is guarded by a mutex.
//
// Literal syntax: atoms are "@k", sets are "{...}" with comma-separated
// members, e.g. "{@0, {@1}}". Ordered pairs use the Kuratowski encoding
// <x,y> = {{x},{x,y}}.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dynideal {

class HfSet {
public:
    HfSet() : id_(0) {}  // the empty set

    static HfSet atom(int index);
    static HfSet set(std::vector<HfSet> members);
    static HfSet empty() { return HfSet(); }
    static HfSet pair(const HfSet& x, const HfSet& y);  // Kuratowski
    // Decode a Kuratowski pair; nullopt when the shape does not match.
    std::optional<std::pair<HfSet, HfSet>> as_pair() const;

    bool is_atom() const;
    int atom_index() const;  // atoms only
    const std::vector<HfSet>& members() const;  // sets only
    bool contains(const HfSet& m) const;
    bool is_empty_set() const { return id_ == 0; }

    unsigned rank() const;           // atoms 0, sets 1 + max member rank
    bool is_pure() const;            // no atoms in the transitive closure
    std::vector<int> atoms_below() const;  // sorted atom indices in the closure
    // All nodes of the transitive closure including this one (each once).
    std::vector<HfSet> transitive_closure() const;

    // Recursive image under a relabeling of atoms.
    HfSet map_atoms(const std::function<int(int)>& f) const;

    const std::string& str() const;  // canonical literal
    static HfSet parse(const std::string& literal);

    std::uint32_t id() const { return id_; }
    friend bool operator==(const HfSet&, const HfSet&) = default;
    friend bool operator<(const HfSet& a, const HfSet& b);  // canonical order

private:
    explicit HfSet(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

}  // namespace dynideal
