#include "dynideal/support.hpp"

#include "dynideal/cover.hpp"
#include "dynideal/errors.hpp"

#include <algorithm>

namespace dynideal {

namespace {

int param(const Instance& inst, const char* key) {
    for (const auto& [k, v] : inst.params())
        if (k == key) return v;
    throw UnsupportedInstance(inst.name() + std::string(" lacks parameter ") + key);
}

bool is_sym(const Instance& inst) { return inst.name() == "FiniteSym"; }
bool is_grid(const Instance& inst) { return inst.name() == "AbelianGrid"; }

void require_finite(const Instance& inst, const char* who) {
    if (!is_sym(inst) && !is_grid(inst))
        throw UnsupportedInstance(std::string(who) +
                                  ": pointwise stabilizers of " + inst.name() +
                                  " are not finitely generated");
}

// Subsets of {0..n-1} ordered by (size, lexicographic), sizes 0..cap.
std::vector<std::vector<int>> subsets_by_size(int n, int cap) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> layer{{}};
    for (int size = 1; size <= cap; ++size) {
        std::vector<std::vector<int>> next;
        for (const auto& s : layer) {
            int from = s.empty() ? 0 : s.back() + 1;
            for (int i = from; i < n; ++i) {
                auto t = s;
                t.push_back(i);
                next.push_back(std::move(t));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

int ground_size(const Instance& inst) {
    if (is_sym(inst)) return param(inst, "N");
    if (is_grid(inst)) return param(inst, "m") * param(inst, "mod");
    throw UnsupportedInstance("ground_size: " + inst.name() + " has no finite ground set");
}

std::function<int(int)> atom_action(const Instance& inst, const GroupElem& g) {
    if (is_sym(inst)) {
        FinitePermutation p = as_perm(g);
        return [p](int x) { return p.apply(x); };
    }
    if (is_grid(inst)) {
        GridElement e = as_grid_elem(g);
        int mod = e.modulus();
        return [e, mod](int x) {
            int col = x / mod, val = x % mod;
            GridCell c = e.act(GridCell{col, val});
            return c.col * mod + c.val;
        };
    }
    throw UnsupportedInstance("atom_action: no atom indexing for " + inst.name());
}

HfSet act_hf(const Instance& inst, const GroupElem& g, const HfSet& A) {
    return A.map_atoms(atom_action(inst, g));
}

std::vector<GroupElem> pstab_generators(const Instance& inst, const Element& b) {
    require_finite(inst, "pstab_generators");
    std::vector<GroupElem> out;
    if (is_sym(inst)) {
        int n = param(inst, "N");
        for (const auto& t : symmetric_group_on(ps_complement(as_pointset(b), n), n))
            out.emplace_back(t);
        return out;
    }
    int m = param(inst, "m"), mod = param(inst, "mod");
    auto touched = gs_columns(as_gridset(b));
    for (int c = 0; c < m; ++c)
        if (!std::binary_search(touched.begin(), touched.end(), c))
            out.emplace_back(GridElement::unit(m, mod, c));
    return out;
}

SupportClaim check_support(const Instance& inst, const HfSet& A, const Element& b) {
    SupportClaim claim{A, b, true};
    for (const auto& g : pstab_generators(inst, b))
        if (!(act_hf(inst, g, A) == A)) {
            claim.verified = false;
            break;
        }
    return claim;
}

bool support_invariance(const Instance& inst, const GroupElem& gamma, const Element& b,
                        const HfSet& A) {
    if (!check_support(inst, A, b).verified)
        throw ConfigError("support_invariance: input claim is not verified");
    return check_support(inst, act_hf(inst, gamma, A), inst.act(gamma, b)).verified;
}

namespace {

// Ideal-side support candidates in (size, lex) order. For the grid the
// natural granularity is whole columns: stabilizers only see columns.
struct CandidateSweep {
    std::vector<Element> candidates;
    bool complete = false;  // the sweep covered every possible support shape
};

CandidateSweep support_candidates(const Instance& inst, int max_size,
                                  const Element* must_contain) {
    CandidateSweep sweep;
    if (is_sym(inst)) {
        int n = param(inst, "N"), k = param(inst, "k");
        int cap = std::min(max_size, k - 1);
        sweep.complete = cap >= k - 1;
        for (auto& s : subsets_by_size(n, cap)) {
            PointSet ps(s.begin(), s.end());
            if (must_contain && !ps_subset(as_pointset(*must_contain), ps)) continue;
            sweep.candidates.emplace_back(std::move(ps));
        }
        return sweep;
    }
    if (is_grid(inst)) {
        int m = param(inst, "m"), mod = param(inst, "mod");
        int cap = std::min(max_size, m - 1);
        sweep.complete = cap >= m - 1;
        std::vector<int> need =
            must_contain ? gs_columns(as_gridset(*must_contain)) : std::vector<int>{};
        for (auto& cols : subsets_by_size(m, cap)) {
            if (!std::includes(cols.begin(), cols.end(), need.begin(), need.end())) continue;
            GridSet gs;
            for (int c : cols)
                for (const auto& cell : full_column(c, mod)) gs.push_back(cell);
            sweep.candidates.emplace_back(gs_normalize(std::move(gs)));
        }
        return sweep;
    }
    throw UnsupportedInstance("support search: " + inst.name());
}

}  // namespace

HereditarySupport is_hereditarily_symmetric(const Instance& inst, const HfSet& A,
                                            int max_support_size) {
    require_finite(inst, "is_hereditarily_symmetric");
    HereditarySupport out;
    auto sweep = support_candidates(inst, max_support_size, nullptr);
    for (const auto& node : A.transitive_closure()) {
        bool found = false;
        for (const auto& cand : sweep.candidates) {
            SupportClaim claim = check_support(inst, node, cand);
            if (claim.verified) {
                out.per_node.push_back(std::move(claim));
                found = true;
                break;
            }
        }
        if (!found) {
            out.status = sweep.complete ? HereditarySupport::Status::no
                                        : HereditarySupport::Status::budget_exceeded;
            return out;
        }
    }
    out.status = HereditarySupport::Status::yes;
    return out;
}

Element definable_closure(const Instance& inst, const Element& a) {
    require_finite(inst, "definable_closure");
    auto gens = pstab_generators(inst, a);
    if (is_sym(inst)) {
        int n = param(inst, "N");
        PointSet out;
        for (int x = 0; x < n; ++x) {
            bool fixed = true;
            for (const auto& g : gens)
                if (as_perm(g).apply(x) != x) {
                    fixed = false;
                    break;
                }
            if (fixed) out.push_back(x);
        }
        return out;
    }
    int m = param(inst, "m"), mod = param(inst, "mod");
    GridSet out;
    for (int c = 0; c < m; ++c)
        for (int v = 0; v < mod; ++v) {
            GridCell cell{c, v};
            bool fixed = true;
            for (const auto& g : gens)
                if (!(as_grid_elem(g).act(cell) == cell)) {
                    fixed = false;
                    break;
                }
            if (fixed) out.push_back(cell);
        }
    return gs_normalize(std::move(out));
}

std::optional<Element> wo_criterion(const Instance& inst, const HfSet& A_family,
                                    int max_support_size) {
    require_finite(inst, "wo_criterion");
    if (A_family.is_atom()) throw ConfigError("wo_criterion: family must be a set");
    auto sweep = support_candidates(inst, max_support_size, nullptr);
    for (const auto& cand : sweep.candidates) {
        bool all = true;
        auto gens = pstab_generators(inst, cand);
        for (const auto& member : A_family.members()) {
            for (const auto& g : gens)
                if (!(act_hf(inst, g, member) == member)) {
                    all = false;
                    break;
                }
            if (!all) break;
        }
        if (all) return cand;
    }
    if (!sweep.complete)
        throw SearchBudgetExceeded("wo_criterion: no support within the size budget");
    return std::nullopt;
}

std::optional<Element> minimal_support(const Instance& inst, const HfSet& A,
                                       int max_support_size) {
    require_finite(inst, "minimal_support");
    auto sweep = support_candidates(inst, max_support_size, nullptr);
    for (const auto& cand : sweep.candidates)
        if (check_support(inst, A, cand).verified) return cand;
    if (!sweep.complete)
        throw SearchBudgetExceeded("minimal_support: no support within the size budget");
    return std::nullopt;
}

SelectorResult choice_selector(const Instance& inst, const HfSet& A_family, const Element& a,
                               const LargenessCertificate& cert, int max_support_size) {
    require_finite(inst, "choice_selector");
    if (A_family.is_atom()) throw ConfigError("choice_selector: family must be a set");
    // a must support the family memberwise (the well-orderability witness).
    for (const auto& g : pstab_generators(inst, a))
        for (const auto& member : A_family.members())
            if (!(act_hf(inst, g, member) == member))
                throw ConfigError("choice_selector: a does not fix the family memberwise");

    SelectorResult out;
    std::vector<HfSet> pairs;
    for (const auto& B : A_family.members()) {
        if (B.is_atom() || B.members().empty())
            throw ConfigError("choice_selector: members must be nonempty sets");
        const HfSet& D = B.members().front();
        auto d = minimal_support(inst, D, max_support_size);
        if (!d) throw CoverFailed("choice_selector: a member's element has no support");
        GroupElem gamma = cover_witness(inst, cert, *d);
        HfSet C = act_hf(inst, group_inverse(gamma), D);
        if (!B.contains(C))
            throw CoverFailed("choice_selector: pulled-back element left its family member");
        pairs.push_back(HfSet::pair(B, C));
        out.picks.push_back(C);
    }
    out.selector = HfSet::set(std::move(pairs));
    out.claim = check_support(inst, out.selector, cert.large);
    if (!out.claim.verified)
        throw CoverFailed("choice_selector: selector is not supported by b");
    return out;
}

OrbitDecomposition orbit_decomposition(const Instance& inst, const HfSet& A, const Element& a,
                                       int max_support_size) {
    if (!is_grid(inst))
        throw NotAbelian("orbit_decomposition: requires the abelian grid instance");
    if (!check_support(inst, A, a).verified)
        throw ConfigError("orbit_decomposition: A is not supported by a");

    auto gens = pstab_generators(inst, a);
    OrbitDecomposition out;
    std::vector<HfSet> orbits;
    for (const auto& D : A.members()) {
        std::vector<HfSet> orbit{D};
        std::size_t scan = 0;
        while (scan < orbit.size()) {
            HfSet cur = orbit[scan++];
            for (const auto& g : gens) {
                HfSet img = act_hf(inst, g, cur);
                if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                    orbit.push_back(img);
            }
        }
        orbits.push_back(HfSet::set(orbit));
    }
    out.orbits = HfSet::set(orbits);

    for (const auto& O : out.orbits.members())
        for (const auto& g : gens)
            if (!(act_hf(inst, g, O) == O)) out.orbits_setwise_fixed = false;

    // The commutativity argument: any member's support d containing a fixes
    // the whole orbit pointwise.
    for (const auto& O : out.orbits.members()) {
        for (const auto& D : O.members()) {
            CandidateSweep sweep = [&] {
                auto s = support_candidates(inst, max_support_size, &a);
                return s;
            }();
            std::optional<Element> d;
            for (const auto& cand : sweep.candidates)
                if (check_support(inst, D, cand).verified) {
                    d = cand;
                    break;
                }
            if (!d) {
                if (!sweep.complete)
                    throw SearchBudgetExceeded("orbit_decomposition: member support search");
                out.member_support_fixes_orbit = false;
                continue;
            }
            for (const auto& g : pstab_generators(inst, *d))
                for (const auto& E : O.members())
                    if (!(act_hf(inst, g, E) == E)) out.member_support_fixes_orbit = false;
        }
    }
    return out;
}

HfSet parity_class(const Instance& inst, int col, int parity) {
    int mod = param(inst, "mod");
    std::vector<HfSet> atoms;
    for (int v = parity % 2; v < mod; v += 2) atoms.push_back(HfSet::atom(col * mod + v));
    return HfSet::set(std::move(atoms));
}

HfSet parity_pair(const Instance& inst, int col) {
    return HfSet::set({parity_class(inst, col, 0), parity_class(inst, col, 1)});
}

HfSet parity_selector(const Instance& inst, const std::vector<int>& parity) {
    std::vector<HfSet> pairs;
    for (std::size_t c = 0; c < parity.size(); ++c)
        pairs.push_back(HfSet::pair(parity_pair(inst, static_cast<int>(c)),
                                    parity_class(inst, static_cast<int>(c),
                                                 parity[c] % 2)));
    return HfSet::set(std::move(pairs));
}

RefuterWitness abelian_refuter(const Instance& inst, const HfSet& f_candidate,
                               const Element& b) {
    if (!is_grid(inst)) throw NotAbelian("abelian_refuter: requires the abelian grid");
    int m = param(inst, "m"), mod = param(inst, "mod");
    if (mod % 2 != 0)
        throw ConfigError("abelian_refuter: the parity relation needs an even modulus");
    auto touched = gs_columns(as_gridset(b));
    if (static_cast<int>(touched.size()) == m)
        throw NoWitness("abelian_refuter: b meets every column (vacuous case)");

    for (int c = 0; c < m; ++c) {
        if (std::binary_search(touched.begin(), touched.end(), c)) continue;
        GroupElem gamma = GridElement::unit(m, mod, c);
        if (!inst.in_pstab(gamma, b))
            continue;  // cannot happen: units off b fix it pointwise
        if (!(act_hf(inst, gamma, f_candidate) == f_candidate)) {
            // Exhibit the violated selection: the candidate's pair at column c.
            HfSet Y = parity_pair(inst, c);
            HfSet violated = Y;
            if (!f_candidate.is_atom())
                for (const auto& p : f_candidate.members())
                    if (auto kv = p.as_pair(); kv && kv->first == Y) violated = p;
            return RefuterWitness{gamma, c, violated};
        }
    }
    throw NoWitness("abelian_refuter: candidate is invariant under every unit shift off b");
}

}  // namespace dynideal
