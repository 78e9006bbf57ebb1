#include "dynideal/hfset.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace dynideal {

namespace {

struct Node {
    bool is_atom = false;
    int atom_index = -1;
    std::vector<HfSet> members;  // canonically sorted
    std::string repr;
};

// Append-only intern arena with canonicalizing insert.
class Arena {
public:
    static Arena& instance() {
        static Arena arena;
        return arena;
    }

    std::uint32_t intern(Node node) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_repr_.find(node.repr);
        if (it != by_repr_.end()) return it->second;
        nodes_.push_back(std::move(node));
        std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
        by_repr_.emplace(nodes_.back().repr, id);
        return id;
    }

    const Node& at(std::uint32_t id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return nodes_[id];
    }

private:
    Arena() {
        Node empty;
        empty.repr = "{}";
        nodes_.push_back(std::move(empty));
        by_repr_.emplace("{}", 0u);
    }

    mutable std::mutex mu_;
    std::deque<Node> nodes_;  // stable references under growth
    std::unordered_map<std::string, std::uint32_t> by_repr_;
};

const Node& node_of(std::uint32_t id) { return Arena::instance().at(id); }

}  // namespace

HfSet HfSet::atom(int index) {
    if (index < 0) throw ConfigError("HfSet::atom: negative index");
    Node n;
    n.is_atom = true;
    n.atom_index = index;
    n.repr = "@" + std::to_string(index);
    return HfSet(Arena::instance().intern(std::move(n)));
}

HfSet HfSet::set(std::vector<HfSet> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Node n;
    n.repr = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) n.repr += ", ";
        n.repr += members[i].str();
    }
    n.repr += "}";
    n.members = std::move(members);
    return HfSet(Arena::instance().intern(std::move(n)));
}

HfSet HfSet::pair(const HfSet& x, const HfSet& y) {
    return set({set({x}), set({x, y})});
}

std::optional<std::pair<HfSet, HfSet>> HfSet::as_pair() const {
    if (is_atom()) return std::nullopt;
    const auto& ms = members();
    if (ms.empty() || ms.size() > 2) return std::nullopt;
    auto single = [](const HfSet& s) -> std::optional<HfSet> {
        if (s.is_atom() || s.members().size() != 1) return std::nullopt;
        return s.members()[0];
    };
    if (ms.size() == 1) {
        // {{x}} encodes <x,x>.
        auto x = single(ms[0]);
        if (!x) return std::nullopt;
        return std::make_pair(*x, *x);
    }
    for (int flip = 0; flip < 2; ++flip) {
        const HfSet& a = ms[static_cast<std::size_t>(flip)];
        const HfSet& b = ms[static_cast<std::size_t>(1 - flip)];
        auto x = single(a);
        if (!x || b.is_atom() || b.members().size() != 2) continue;
        if (!b.contains(*x)) continue;
        const HfSet& y = b.members()[0] == *x ? b.members()[1] : b.members()[0];
        return std::make_pair(*x, y);
    }
    return std::nullopt;
}

bool HfSet::is_atom() const { return node_of(id_).is_atom; }

int HfSet::atom_index() const {
    const Node& n = node_of(id_);
    if (!n.is_atom) throw ConfigError("HfSet: not an atom: " + n.repr);
    return n.atom_index;
}

const std::vector<HfSet>& HfSet::members() const {
    const Node& n = node_of(id_);
    if (n.is_atom) throw ConfigError("HfSet: atoms have no members");
    return n.members;
}

bool HfSet::contains(const HfSet& m) const {
    const auto& ms = members();
    return std::binary_search(ms.begin(), ms.end(), m);
}

unsigned HfSet::rank() const {
    if (is_atom()) return 0;
    unsigned r = 0;
    for (const auto& m : members()) r = std::max(r, m.rank() + 1);
    return r;
}

bool HfSet::is_pure() const {
    if (is_atom()) return false;
    for (const auto& m : members())
        if (m.is_atom() || !m.is_pure()) return false;
    return true;
}

std::vector<int> HfSet::atoms_below() const {
    std::set<int> acc;
    std::vector<HfSet> stack{*this};
    std::set<std::uint32_t> seen;
    while (!stack.empty()) {
        HfSet cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur.id()).second) continue;
        if (cur.is_atom()) {
            acc.insert(cur.atom_index());
            continue;
        }
        for (const auto& m : cur.members()) stack.push_back(m);
    }
    return {acc.begin(), acc.end()};
}

std::vector<HfSet> HfSet::transitive_closure() const {
    std::vector<HfSet> out;
    std::set<std::uint32_t> seen;
    std::vector<HfSet> stack{*this};
    while (!stack.empty()) {
        HfSet cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur.id()).second) continue;
        out.push_back(cur);
        if (!cur.is_atom())
            for (const auto& m : cur.members()) stack.push_back(m);
    }
    return out;
}

HfSet HfSet::map_atoms(const std::function<int(int)>& f) const {
    std::map<std::uint32_t, HfSet> memo;
    std::function<HfSet(const HfSet&)> go = [&](const HfSet& s) -> HfSet {
        auto it = memo.find(s.id());
        if (it != memo.end()) return it->second;
        HfSet out = s;
        if (s.is_atom()) {
            out = HfSet::atom(f(s.atom_index()));
        } else {
            std::vector<HfSet> ms;
            ms.reserve(s.members().size());
            for (const auto& m : s.members()) ms.push_back(go(m));
            out = HfSet::set(std::move(ms));
        }
        memo.emplace(s.id(), out);
        return out;
    };
    return go(*this);
}

const std::string& HfSet::str() const { return node_of(id_).repr; }

bool operator<(const HfSet& a, const HfSet& b) {
    if (a.id() == b.id()) return false;
    const Node& na = node_of(a.id());
    const Node& nb = node_of(b.id());
    if (na.is_atom != nb.is_atom) return na.is_atom;  // atoms first
    if (na.is_atom) return na.atom_index < nb.atom_index;
    return na.repr < nb.repr;
}

namespace {

HfSet parse_at(const std::string& t, std::size_t& i) {
    auto skip = [&] { while (i < t.size() && (t[i] == ' ' || t[i] == ',')) ++i; };
    skip();
    if (i >= t.size()) throw ConfigError("HfSet::parse: truncated literal: " + t);
    if (t[i] == '@') {
        std::size_t j = ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (j == i) throw ConfigError("HfSet::parse: bad atom in " + t);
        return HfSet::atom(std::stoi(t.substr(j, i - j)));
    }
    if (t[i] != '{') throw ConfigError("HfSet::parse: expected '{' in " + t);
    ++i;
    std::vector<HfSet> members;
    while (true) {
        skip();
        if (i >= t.size()) throw ConfigError("HfSet::parse: missing '}' in " + t);
        if (t[i] == '}') {
            ++i;
            break;
        }
        members.push_back(parse_at(t, i));
    }
    return HfSet::set(std::move(members));
}

}  // namespace

HfSet HfSet::parse(const std::string& literal) {
    std::size_t i = 0;
    HfSet out = parse_at(literal, i);
    while (i < literal.size() && literal[i] == ' ') ++i;
    if (i != literal.size()) throw ConfigError("HfSet::parse: trailing input in " + literal);
    return out;
}

}  // namespace dynideal
