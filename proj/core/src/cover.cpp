#include "dynideal/cover.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>

namespace dynideal {

namespace {

int sym_threshold(const Instance& inst) {
    for (const auto& [k, v] : inst.params())
        if (k == "k") return v;
    throw KindMismatch("instance has no size threshold: " + inst.name());
}

int sym_ground(const Instance& inst) {
    for (const auto& [k, v] : inst.params())
        if (k == "N") return v;
    throw KindMismatch("instance has no ground size: " + inst.name());
}

}  // namespace

bool certificate_valid(const Instance& inst, const LargenessCertificate& cert) {
    if (cert.instance != inst.display_name()) return false;
    if (inst.name() == "BoundedQ") {
        if (!cert.hull) return false;
        const auto& [l, u] = *cert.hull;
        const auto& a = as_iuset(cert.base);
        const auto& b = as_iuset(cert.large);
        if (!(l < u) || !a.bounded() || !b.bounded()) return false;
        if (!IntervalUnionSet::single(Interval::closed(l, u)).subset_of(b)) return false;
        return a.subset_of(IntervalUnionSet::single(Interval::open(l, u)));
    }
    if (inst.name() == "FiniteSym") {
        if (!cert.fresh_count) return false;
        const auto& a = as_pointset(cert.base);
        const auto& b = as_pointset(cert.large);
        if (!ps_subset(a, b)) return false;
        return *cert.fresh_count == static_cast<int>(ps_difference(b, a).size());
    }
    return false;
}

bool certificate_sufficient(const Instance& inst, const LargenessCertificate& cert) {
    if (!certificate_valid(inst, cert)) return false;
    if (inst.name() == "FiniteSym") return *cert.fresh_count >= sym_threshold(inst) - 1;
    return true;
}

std::pair<IntervalUnionSet, LargenessCertificate> a_large_bounded(const Instance& inst,
                                                                  const IntervalUnionSet& a) {
    if (!a.bounded()) throw Unbounded("a_large_bounded: base set is not bounded");
    Rational l = a.empty() ? Rational(-1) : a.inf() - Rational(1);
    Rational u = a.empty() ? Rational(1) : a.sup() + Rational(1);
    IntervalUnionSet b = a.unite(IntervalUnionSet::single(Interval::closed(l, u)));
    LargenessCertificate cert{inst.display_name(), a, b, std::make_pair(l, u), std::nullopt};
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("a_large_bounded produced an invalid certificate");
    return {std::move(b), std::move(cert)};
}

PLMap cover_witness_bounded(const Instance& inst, const LargenessCertificate& cert,
                            const IntervalUnionSet& c) {
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("cover_witness_bounded: bad certificate");
    if (!c.bounded()) throw Unbounded("cover_witness_bounded: c is not bounded");
    const auto& a = as_iuset(cert.base);
    const auto& b = as_iuset(cert.large);
    PLMap gamma;
    if (!c.subset_of(b)) {
        const auto& [l, u] = *cert.hull;
        Rational lo_target = std::min(l, c.inf() - Rational(1));
        Rational hi_target = std::max(u, c.sup() + Rational(1));
        std::vector<std::pair<Rational, Rational>> anchors;
        anchors.emplace_back(l, lo_target);
        if (!a.empty()) {
            anchors.emplace_back(a.inf(), a.inf());
            if (a.sup() != a.inf()) anchors.emplace_back(a.sup(), a.sup());
        }
        anchors.emplace_back(u, hi_target);
        gamma = PLMap::from_anchors(anchors);
    }
    if (!fixes_pointwise(gamma, a))
        throw CertificateInvalid("cover witness does not fix the base");
    if (!c.subset_of(b.image(gamma)))
        throw CertificateInvalid("cover witness misses part of c");
    return gamma;
}

std::pair<PointSet, LargenessCertificate> a_large_symmetric(const Instance& inst,
                                                            const PointSet& a) {
    int n = sym_ground(inst), k = sym_threshold(inst);
    if (static_cast<int>(a.size()) >= k)
        throw NotInIdeal("a_large_symmetric: base set not in the ideal");
    if (n < static_cast<int>(a.size()) + 2 * (k - 1))
        throw InsufficientSpace("a_large_symmetric: ground set too small");
    PointSet fresh;
    for (int i = 0; i < n && static_cast<int>(fresh.size()) < k - 1; ++i)
        if (!ps_contains(a, i)) fresh.push_back(i);
    PointSet b = ps_union(a, fresh);
    LargenessCertificate cert{inst.display_name(), a, b, std::nullopt, k - 1};
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("a_large_symmetric produced an invalid certificate");
    return {std::move(b), std::move(cert)};
}

FinitePermutation cover_witness_symmetric(const Instance& inst,
                                          const LargenessCertificate& cert,
                                          const PointSet& c) {
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("cover_witness_symmetric: bad certificate");
    int n = sym_ground(inst);
    const auto& a = as_pointset(cert.base);
    const auto& b = as_pointset(cert.large);
    FinitePermutation gamma(n);
    if (!ps_subset(c, b)) {
        PointSet need = ps_difference(c, a);
        PointSet pool = ps_difference(b, a);
        if (need.size() > pool.size())
            throw InsufficientSpace("cover_witness_symmetric: not enough fresh points");
        std::vector<std::pair<int, int>> partial;
        for (int x : a) partial.emplace_back(x, x);
        for (std::size_t i = 0; i < need.size(); ++i) partial.emplace_back(pool[i], need[i]);
        gamma = complete_permutation(partial, n);
    }
    if (!gamma.fixes_pointwise(a))
        throw CertificateInvalid("cover witness does not fix the base");
    if (!ps_subset(c, gamma.act(b)))
        throw CertificateInvalid("cover witness misses part of c");
    return gamma;
}

std::pair<Element, LargenessCertificate> a_large(const Instance& inst, const Element& a) {
    if (inst.name() == "BoundedQ") {
        auto [b, cert] = a_large_bounded(inst, as_iuset(a));
        return {Element(std::move(b)), std::move(cert)};
    }
    if (inst.name() == "FiniteSym") {
        auto [b, cert] = a_large_symmetric(inst, as_pointset(a));
        return {Element(std::move(b)), std::move(cert)};
    }
    throw UnsupportedInstance("a_large: no largeness kit for " + inst.name());
}

GroupElem cover_witness(const Instance& inst, const LargenessCertificate& cert,
                        const Element& c) {
    if (inst.name() == "BoundedQ") return cover_witness_bounded(inst, cert, as_iuset(c));
    if (inst.name() == "FiniteSym") return cover_witness_symmetric(inst, cert, as_pointset(c));
    throw UnsupportedInstance("cover_witness: no largeness kit for " + inst.name());
}

namespace {

std::pair<GroupElem, LargenessCertificate> shrink_cover_bounded(
    const Instance& inst, const LargenessCertificate& cert, const IntervalUnionSet& c) {
    const auto& a = as_iuset(cert.base);
    const auto& [l, u] = *cert.hull;
    IntervalUnionSet open_hull = IntervalUnionSet::single(Interval::open(l, u));
    PLMap gamma;
    if (!c.subset_of(open_hull)) {
        if (!c.bounded()) throw NotInIdeal("shrink_cover: c is not bounded");
        Rational m = std::min(c.inf(), l) - Rational(1);
        Rational M = std::max(c.sup(), u) + Rational(1);
        std::vector<std::pair<Rational, Rational>> anchors;
        if (a.empty()) {
            anchors.emplace_back(m, l + (u - l) / Rational(4));
            anchors.emplace_back(M, u - (u - l) / Rational(4));
        } else {
            Rational a0 = a.inf(), a1 = a.sup();
            anchors.emplace_back(m, midpoint(l, a0));
            anchors.emplace_back(a0, a0);
            if (a1 != a0) anchors.emplace_back(a1, a1);
            anchors.emplace_back(M, midpoint(a1, u));
        }
        gamma = PLMap::from_anchors(anchors);
    }
    IntervalUnionSet moved = c.image(gamma);
    LargenessCertificate next{cert.instance, Element(a.unite(moved)), cert.large, cert.hull,
                              std::nullopt};
    if (!fixes_pointwise(gamma, a) || !moved.subset_of(as_iuset(cert.large)) ||
        !certificate_valid(inst, next))
        throw CertificateInvalid("shrink_cover_bounded postcondition failed");
    return {GroupElem(std::move(gamma)), std::move(next)};
}

std::pair<GroupElem, LargenessCertificate> shrink_cover_symmetric(
    const Instance& inst, const LargenessCertificate& cert, const PointSet& c) {
    int n = sym_ground(inst);
    const auto& a = as_pointset(cert.base);
    const auto& b = as_pointset(cert.large);
    FinitePermutation gamma(n);
    if (!ps_subset(c, a)) {
        PointSet keep = ps_union(a, ps_intersect(c, b));
        PointSet stray = ps_difference(ps_difference(c, a), b);
        PointSet slots = ps_difference(ps_difference(b, a), c);
        if (stray.size() > slots.size())
            throw CertificateInvalid("shrink_cover: certificate lacks room for c");
        std::vector<std::pair<int, int>> partial;
        for (int x : keep) partial.emplace_back(x, x);
        for (std::size_t i = 0; i < stray.size(); ++i) partial.emplace_back(stray[i], slots[i]);
        gamma = complete_permutation(partial, n);
    }
    PointSet moved = gamma.act(c);
    PointSet grown = ps_union(a, moved);
    LargenessCertificate next{cert.instance, Element(grown), cert.large, std::nullopt,
                              static_cast<int>(ps_difference(b, grown).size())};
    if (!gamma.fixes_pointwise(a) || !ps_subset(moved, b) || !certificate_valid(inst, next))
        throw CertificateInvalid("shrink_cover_symmetric postcondition failed");
    return {GroupElem(std::move(gamma)), std::move(next)};
}

}  // namespace

std::pair<GroupElem, LargenessCertificate> shrink_cover(const Instance& inst,
                                                        const LargenessCertificate& cert,
                                                        const Element& c) {
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("shrink_cover: bad certificate");
    if (inst.name() == "BoundedQ") return shrink_cover_bounded(inst, cert, as_iuset(c));
    if (inst.name() == "FiniteSym") return shrink_cover_symmetric(inst, cert, as_pointset(c));
    throw UnsupportedInstance("shrink_cover: no largeness kit for " + inst.name());
}

LargenessCertificate largeness_conjugation(const Instance& inst,
                                           const LargenessCertificate& cert,
                                           const GroupElem& delta) {
    if (!certificate_valid(inst, cert))
        throw CertificateInvalid("largeness_conjugation: bad input certificate");
    LargenessCertificate out = cert;
    out.base = inst.act(delta, cert.base);
    out.large = inst.act(delta, cert.large);
    if (inst.name() == "BoundedQ") {
        const auto& f = as_plmap(delta);
        out.hull = std::make_pair(f.apply(cert.hull->first), f.apply(cert.hull->second));
    }
    if (!certificate_valid(inst, out))
        throw CertificateInvalid("largeness_conjugation: transported evidence is invalid");
    return out;
}

}  // namespace dynideal
