#include "dynideal/game.hpp"

#include "dynideal/errors.hpp"

namespace dynideal {

int element_size(const Element& e) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntervalUnionSet>)
                return static_cast<int>(x.components().size());
            else if constexpr (std::is_same_v<T, BlockSet>)
                return static_cast<int>(x.points().size() + x.blocks().size());
            else
                return static_cast<int>(x.size());
        },
        e);
}

std::vector<RuleViolation> validate_transcript(const Instance& inst, const GameTranscript& t) {
    std::vector<RuleViolation> out;
    Element acc = inst.empty_element();
    for (std::size_t n = 0; n < t.rounds.size(); ++n) {
        const auto& r = t.rounds[n];
        int round = static_cast<int>(n);
        if (!inst.in_ideal(r.move)) out.push_back({round, "move outside the ideal"});
        if (n == 0 && !group_elem_is_identity(r.response))
            out.push_back({round, "gamma_0 is not the identity"});
        if (!inst.in_group(r.response))
            out.push_back({round, "response outside the acting group"});
        if (n > 0 && !inst.in_pstab(r.response, acc))
            out.push_back({round, "response moves an accumulated point"});
        acc = inst.unite(acc, inst.act(r.response, r.move));
    }
    if (!t.rounds.empty() && !(acc == t.accumulated))
        out.push_back({static_cast<int>(t.rounds.size()) - 1,
                       "accumulated set does not match a fresh recomputation"});
    return out;
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, int round, int who) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(round) * 2 +
                                                      static_cast<std::uint64_t>(who) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::pair<GameTranscript, Verdict> run_game(const Instance& inst, PlayerOne& one,
                                            PlayerTwo& two, int horizon, std::uint64_t seed,
                                            const GameConfig& cfg) {
    if (horizon < 0) throw ConfigError("run_game: negative horizon");
    GameTranscript t;
    t.instance = inst.display_name();
    t.horizon = horizon;
    t.move_cap = cfg.move_cap;
    t.accumulated = inst.empty_element();
    Verdict v;

    auto fault = [&](int player, const std::string& why) {
        v.strategy_fault = true;
        v.faulted_player = player;
        v.fault_text = why;
        v.invariant_held = false;
    };

    for (int round = 0; round < horizon && !v.strategy_fault; ++round) {
        Element move = inst.empty_element();
        try {
            move = one.move(inst, round, t.accumulated, derive_seed(seed, round, 1));
        } catch (const std::exception& e) {
            fault(1, std::string("player one raised: ") + e.what());
            break;
        }
        if (!inst.in_ideal(move)) {
            fault(1, "player one left the ideal");
            break;
        }
        if (element_size(move) > cfg.move_cap) {
            fault(1, "player one exceeded the per-move representation cap");
            break;
        }
        GroupElem gamma = inst.identity();
        try {
            gamma = two.respond(inst, round, t.accumulated, move, derive_seed(seed, round, 2));
        } catch (const std::exception& e) {
            fault(2, std::string("player two raised: ") + e.what());
            break;
        }
        if (round == 0 && !group_elem_is_identity(gamma)) {
            fault(2, "gamma_0 must be the identity");
            break;
        }
        if (!inst.in_group(gamma)) {
            fault(2, "player two left the acting group");
            break;
        }
        if (round > 0 && !inst.in_pstab(gamma, t.accumulated)) {
            fault(2, "player two moved an accumulated point");
            break;
        }
        t.rounds.push_back(GameRound{move, gamma});
        t.accumulated = inst.unite(t.accumulated, inst.act(gamma, move));
    }

    v.outcome_in_ideal = inst.in_ideal(t.accumulated);
    one.record(v);
    two.record(v);
    return {std::move(t), std::move(v)};
}

}  // namespace dynideal
