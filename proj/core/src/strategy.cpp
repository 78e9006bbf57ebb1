#include "dynideal/errors.hpp"
#include "dynideal/game.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

namespace {

// Plays seeded ideal sets, ignoring the position.
class RandomOne final : public PlayerOne {
public:
    explicit RandomOne(const GameConfig& cfg) : cfg_(cfg) {}
    std::string name() const override { return "random"; }
    Element move(const Instance& inst, int, const Element&, std::uint64_t seed) override {
        return inst.sample_ideal(seed, cfg_.size_hint);
    }

private:
    GameConfig cfg_;
};

// Escapes every layer of a size stratification: round n plays a set of size
// exactly k_n, ignoring the opponent (cardinality is permutation-invariant).
class StratifiedOne final : public PlayerOne {
public:
    explicit StratifiedOne(const GameConfig& cfg) : cfg_(cfg) {}
    std::string name() const override { return "stratified"; }

    Element move(const Instance& inst, int round, const Element&, std::uint64_t) override {
        int k = round < static_cast<int>(cfg_.thresholds.size())
                    ? cfg_.thresholds[static_cast<std::size_t>(round)]
                    : round + 1;
        int ground = 0;
        for (const auto& [key, value] : inst.params())
            if (key == "N") ground = value;
        if (k > ground)
            throw InsufficientSpace("stratified strategy: ground set exhausted");
        PointSet s;
        for (int i = 0; i < k; ++i) s.push_back(i);
        std::ostringstream os;
        os << "round " << round << ": escaped layer " << k << " with a set of size " << k;
        notes_.push_back(os.str());
        return s;
    }

    void record(Verdict& v) const override {
        v.notes.insert(v.notes.end(), notes_.begin(), notes_.end());
    }

private:
    GameConfig cfg_;
    std::vector<std::string> notes_;
};

// Interleaves the accumulated finite set: one point strictly between every
// pair of consecutive accumulated points (at the quarter position, so exact
// geometric runs pile up toward every older point), plus flanking points.
class InterleaveOne final : public PlayerOne {
public:
    std::string name() const override { return "interleave"; }

    Element move(const Instance&, int, const Element& accumulated, std::uint64_t) override {
        const BlockSet& acc = as_blockset(accumulated);
        if (!acc.blocks().empty())
            throw ConfigError("interleave strategy expects a finite accumulated set");
        const auto& pts = acc.points();
        std::vector<Rational> mv;
        if (pts.empty()) {
            mv = {Rational(1, 4), Rational(3, 4)};
        } else {
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                mv.push_back(pts[i] + (pts[i + 1] - pts[i]) / Rational(4));
            mv.push_back(pts.front() * Rational(3, 4));                       // lower flank
            mv.push_back(pts.back() + (Rational(1) - pts.back()) / Rational(4));  // upper flank
        }
        bool interleaves = true;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            bool found = false;
            for (const auto& x : mv)
                if (pts[i] < x && x < pts[i + 1]) { found = true; break; }
            interleaves = interleaves && found;
        }
        held_.push_back(interleaves);
        return BlockSet::from_points(std::move(mv));
    }

    void record(Verdict& v) const override {
        std::size_t good = 0;
        for (bool b : held_) good += b;
        v.invariant_held = v.invariant_held && good == held_.size();
        std::ostringstream os;
        os << "interleaving predicate held in " << good << "/" << held_.size() << " rounds";
        v.notes.push_back(os.str());
    }

private:
    std::vector<bool> held_;
};

// Always the identity (legal whatever happened before).
class TrivialTwo final : public PlayerTwo {
public:
    std::string name() const override { return "trivial"; }
    GroupElem respond(const Instance& inst, int, const Element&, const Element&,
                      std::uint64_t) override {
        return inst.identity();
    }
};

// Seeded legal group elements.
class RandomTwo final : public PlayerTwo {
public:
    explicit RandomTwo(const GameConfig& cfg) : cfg_(cfg) {}
    std::string name() const override { return "random"; }
    GroupElem respond(const Instance& inst, int round, const Element& accumulated,
                      const Element&, std::uint64_t seed) override {
        if (round == 0) return inst.identity();
        return inst.sample_fixing(seed, accumulated, cfg_.size_hint);
    }

private:
    GameConfig cfg_;
};

// The cofinal-orbits strategy: fix an a_0-large b at round 0, then keep the
// whole position compressed inside b, re-certifying largeness every round.
class CofinalTwo final : public PlayerTwo {
public:
    std::string name() const override { return "cofinal"; }

    GroupElem respond(const Instance& inst, int round, const Element& accumulated,
                      const Element& move, std::uint64_t) override {
        if (round == 0) {
            auto [b, cert] = a_large(inst, move);
            chain_.push_back(cert);
            ok_ = ok_ && certificate_valid(inst, cert) && certificate_sufficient(inst, cert);
            return inst.identity();
        }
        // Without loss the move contains the accumulated set.
        Element extended = inst.unite(accumulated, move);
        auto [gamma, cert] = shrink_cover(inst, chain_.back(), extended);
        ok_ = ok_ && certificate_valid(inst, cert) && certificate_sufficient(inst, cert);
        chain_.push_back(cert);
        return gamma;
    }

    void record(Verdict& v) const override {
        v.invariant_held = v.invariant_held && ok_;
        v.certificate_chain = chain_;
    }

private:
    std::vector<LargenessCertificate> chain_;
    bool ok_ = true;
};

}  // namespace

std::unique_ptr<PlayerOne> make_player_one(const std::string& name, const GameConfig& cfg) {
    if (name == "random") return std::make_unique<RandomOne>(cfg);
    if (name == "stratified") return std::make_unique<StratifiedOne>(cfg);
    if (name == "interleave") return std::make_unique<InterleaveOne>();
    throw ConfigError("unknown player-one strategy: " + name);
}

std::unique_ptr<PlayerTwo> make_player_two(const std::string& name, const GameConfig& cfg) {
    if (name == "trivial") return std::make_unique<TrivialTwo>();
    if (name == "random") return std::make_unique<RandomTwo>(cfg);
    if (name == "cofinal") return std::make_unique<CofinalTwo>();
    throw ConfigError("unknown player-two strategy: " + name);
}

}  // namespace dynideal
