// The DC game: Player I plays ideal sets a_n, Player II answers with group
// elements gamma_n; gamma_0 = 1 and every gamma_n must fix the accumulated
// set of earlier images pointwise. Player II is winning the finite-horizon
// rendering when the accumulated set is still in the ideal at the horizon.
//
// Strategies are pluggable. Illegal moves or strategy exceptions forfeit the
// game to the opponent rather than crash, so seeded tournaments over buggy
// strategies still produce data. Everything is exact and seeded; replays
// with the same seed are bit-identical.

#pragma once

#include "dynideal/cover.hpp"
#include "dynideal/instance.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dynideal {

struct GameRound {
    Element move;        // a_n
    GroupElem response;  // gamma_n
};

struct GameTranscript {
    std::string instance;  // display name
    int horizon = 0;
    int move_cap = 0;      // per-move representation cap in force
    std::vector<GameRound> rounds;
    Element accumulated;   // union of gamma_m . a_m
};

struct RuleViolation {
    int round;
    std::string what;
};

// Every rule violation with its round index; empty means valid.
std::vector<RuleViolation> validate_transcript(const Instance& inst, const GameTranscript& t);

struct Verdict {
    bool outcome_in_ideal = false;
    bool invariant_held = true;      // strategy-specific per-round invariant
    bool strategy_fault = false;
    int faulted_player = 0;          // 1 or 2
    std::string fault_text;
    std::vector<LargenessCertificate> certificate_chain;  // cofinal Player II
    std::vector<std::string> notes;  // per-round escape / interleaving evidence
};

struct GameConfig {
    int size_hint = 2;
    int move_cap = 64;               // per-move representation size cap
    std::vector<int> thresholds;     // stratified Player I: k_n (default n+1)
};

class PlayerOne {
public:
    virtual ~PlayerOne() = default;
    virtual std::string name() const = 0;
    virtual Element move(const Instance& inst, int round, const Element& accumulated,
                         std::uint64_t seed) = 0;
    virtual void record(Verdict&) const {}
};

class PlayerTwo {
public:
    virtual ~PlayerTwo() = default;
    virtual std::string name() const = 0;
    virtual GroupElem respond(const Instance& inst, int round, const Element& accumulated,
                              const Element& move, std::uint64_t seed) = 0;
    virtual void record(Verdict&) const {}
};

// Names: "random" | "stratified" | "interleave".
std::unique_ptr<PlayerOne> make_player_one(const std::string& name, const GameConfig& cfg);
// Names: "trivial" | "random" | "cofinal".
std::unique_ptr<PlayerTwo> make_player_two(const std::string& name, const GameConfig& cfg);

std::pair<GameTranscript, Verdict> run_game(const Instance& inst, PlayerOne& one,
                                            PlayerTwo& two, int horizon, std::uint64_t seed,
                                            const GameConfig& cfg = {});

// Representation size of an element (components/points), for the move cap.
int element_size(const Element& e);

}  // namespace dynideal
