// The dynamical-ideal interface and its concrete scenario instances.
//
// An instance bundles a group action with an invariant ideal of small sets:
//   BoundedQ                  PL automorphisms / bounded interval unions
//   WellOrderedQ              PL automorphisms / well-ordered block sets
//   WellOrderedBoundedBelowQ  as above, plus bounded below every point
//   CountableClosedQ          PL maps fixing 0,1 / closed block sets in [0,1]
//   FiniteSym                 Sym(N) / subsets of size < k
//   AbelianGrid               (Z/modulus)^m / sets meeting < m columns
//
// Ideal membership is exact; samplers take their seed explicitly and are
// bit-reproducible. The FiniteSym and AbelianGrid ideals are truncated
// fragments: near the size cap a union of two members can escape, which is
// the price of finiteness and is documented per operation where it matters.

#pragma once

#include "dynideal/blockset.hpp"
#include "dynideal/grid.hpp"
#include "dynideal/iuset.hpp"
#include "dynideal/perm.hpp"
#include "dynideal/plmap.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace dynideal {

using Element = std::variant<IntervalUnionSet, BlockSet, PointSet, GridSet>;
using GroupElem = std::variant<PLMap, FinitePermutation, GridElement>;

bool group_elem_is_identity(const GroupElem& g);
GroupElem group_compose(const GroupElem& f, const GroupElem& g);
GroupElem group_inverse(const GroupElem& g);

class Instance {
public:
    virtual ~Instance() = default;

    const std::string& name() const { return name_; }
    // Parameters in declaration order, e.g. {("N",8),("k",4)}.
    const std::vector<std::pair<std::string, int>>& params() const { return params_; }
    std::string display_name() const;

    virtual bool in_ideal(const Element& s) const = 0;
    virtual Element act(const GroupElem& g, const Element& s) const = 0;
    virtual bool in_pstab(const GroupElem& g, const Element& s) const = 0;
    // Group-side membership (e.g. endpoint fixing for CountableClosedQ).
    virtual bool in_group(const GroupElem& g) const { (void)this; return true; }

    virtual Element empty_element() const = 0;
    virtual Element unite(const Element& a, const Element& b) const = 0;
    virtual GroupElem identity() const = 0;

    virtual Element sample_ideal(std::uint64_t seed, int size_hint) const = 0;
    virtual GroupElem sample_group(std::uint64_t seed, int complexity_hint) const = 0;
    // A seeded legal move: some group element fixing `fixed` pointwise.
    virtual GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                                    int complexity_hint) const = 0;

protected:
    Instance(std::string name, std::vector<std::pair<std::string, int>> params)
        : name_(std::move(name)), params_(std::move(params)) {}

private:
    std::string name_;
    std::vector<std::pair<std::string, int>> params_;
};

using InstancePtr = std::shared_ptr<const Instance>;

// Factory by name; unknown names raise UnknownInstance. Missing parameters
// take the documented defaults (FiniteSym: N=8,k=4; AbelianGrid: m=3,mod=4).
InstancePtr make_instance(const std::string& name,
                          const std::vector<std::pair<std::string, int>>& params = {});

// One instance per scenario family, with default parameters.
std::vector<InstancePtr> instance_catalog();

// Typed accessors with KindMismatch errors.
const IntervalUnionSet& as_iuset(const Element& e);
const BlockSet& as_blockset(const Element& e);
const PointSet& as_pointset(const Element& e);
const GridSet& as_gridset(const Element& e);
const PLMap& as_plmap(const GroupElem& g);
const FinitePermutation& as_perm(const GroupElem& g);
const GridElement& as_grid_elem(const GroupElem& g);

std::string element_str(const Element& e);
std::string group_elem_str(const GroupElem& g);

}  // namespace dynideal
