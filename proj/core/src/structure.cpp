#include "dynideal/structure.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dynideal {

std::string signature_name(Signature s) {
    switch (s) {
        case Signature::pure_set: return "pure-set";
        case Signature::ultrametric: return "ultrametric";
        case Signature::vector_space: return "vector-space-q";
        case Signature::quad_selector: return "quad-selector";
    }
    return "?";
}

Signature signature_from_name(const std::string& name) {
    if (name == "pure-set") return Signature::pure_set;
    if (name == "ultrametric") return Signature::ultrametric;
    if (name == "vector-space-q") return Signature::vector_space;
    if (name == "quad-selector") return Signature::quad_selector;
    throw ConfigError("unknown signature: " + name);
}

namespace {

std::pair<int, int> okey(int x, int y) { return {std::min(x, y), std::max(x, y)}; }

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FinStructure FinStructure::pure(std::vector<int> labels) {
    FinStructure s;
    s.sig_ = Signature::pure_set;
    s.universe_ = sorted_unique(std::move(labels));
    return s;
}

FinStructure FinStructure::ultrametric_space(std::vector<int> labels,
                                             std::map<std::pair<int, int>, Rational> dist) {
    FinStructure s;
    s.sig_ = Signature::ultrametric;
    s.universe_ = sorted_unique(std::move(labels));
    for (auto& [k, v] : dist) s.dist_.emplace(okey(k.first, k.second), v);
    return s;
}

FinStructure FinStructure::vector_space(int q, std::vector<int> labels, int zero,
                                        std::map<std::pair<int, int>, int> add) {
    FinStructure s;
    s.sig_ = Signature::vector_space;
    s.q_ = q;
    s.zero_ = zero;
    s.universe_ = sorted_unique(std::move(labels));
    s.add_ = std::move(add);
    return s;
}

FinStructure FinStructure::quad_selector(std::vector<int> labels,
                                         std::map<std::vector<int>, std::pair<int, int>> table) {
    FinStructure s;
    s.sig_ = Signature::quad_selector;
    s.universe_ = sorted_unique(std::move(labels));
    for (auto& [k, v] : table) {
        auto key = sorted_unique(k);
        if (key.size() != 4) throw ConfigError("quad_selector: keys must be quadruples");
        s.selector_.emplace(key, std::make_pair(std::min(v.first, v.second),
                                                std::max(v.first, v.second)));
    }
    return s;
}

FinStructure FinStructure::cube_space(int q, int dim) {
    if (q < 2) throw ConfigError("cube_space: field order must be at least 2");
    int n = 1;
    for (int i = 0; i < dim; ++i) n *= q;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    std::map<std::pair<int, int>, int> add;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int s = 0, pw = 1, aa = a, bb = b;
            for (int d = 0; d < dim; ++d) {
                s += ((aa % q + bb % q) % q) * pw;
                aa /= q;
                bb /= q;
                pw *= q;
            }
            add.emplace(std::make_pair(a, b), s);
        }
    return vector_space(q, std::move(labels), 0, std::move(add));
}

bool FinStructure::has(int label) const {
    return std::binary_search(universe_.begin(), universe_.end(), label);
}

const Rational& FinStructure::dist(int x, int y) const {
    static const Rational zero_dist(0);
    if (x == y) return zero_dist;
    auto it = dist_.find(okey(x, y));
    if (it == dist_.end())
        throw ConfigError("ultrametric: missing distance " + std::to_string(x) + "," +
                          std::to_string(y));
    return it->second;
}

int FinStructure::add(int x, int y) const {
    auto it = add_.find(std::make_pair(x, y));
    if (it == add_.end())
        throw ConfigError("vector space: missing sum " + std::to_string(x) + "+" +
                          std::to_string(y));
    return it->second;
}

std::pair<int, int> FinStructure::selected(const std::vector<int>& quad) const {
    auto key = sorted_unique(quad);
    auto it = selector_.find(key);
    if (it == selector_.end()) throw ConfigError("quad-selector: missing quadruple");
    return it->second;
}

bool FinStructure::check_axioms(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    switch (sig_) {
        case Signature::pure_set:
            return true;
        case Signature::ultrametric: {
            for (std::size_t i = 0; i < universe_.size(); ++i)
                for (std::size_t j = i + 1; j < universe_.size(); ++j) {
                    const Rational& d = dist(universe_[i], universe_[j]);
                    if (!(d > Rational(0))) return fail("nonpositive distance");
                }
            for (int x : universe_)
                for (int y : universe_)
                    for (int z : universe_) {
                        if (x == y || y == z || x == z) continue;
                        if (dist(x, z) > std::max(dist(x, y), dist(y, z)))
                            return fail("ultrametric inequality fails");
                    }
            return true;
        }
        case Signature::vector_space: {
            if (!has(zero_)) return fail("zero not in the universe");
            for (int x : universe_) {
                if (add(x, zero_) != x || add(zero_, x) != x) return fail("zero law fails");
                int acc = zero_;
                for (int i = 0; i < q_; ++i) acc = add(acc, x);
                if (acc != zero_) return fail("characteristic law fails");
                bool inv = false;
                for (int y : universe_)
                    if (add(x, y) == zero_) inv = true;
                if (!inv) return fail("no inverse");
            }
            for (int x : universe_)
                for (int y : universe_) {
                    if (!has(add(x, y))) return fail("not closed under addition");
                    if (add(x, y) != add(y, x)) return fail("not commutative");
                    for (int z : universe_)
                        if (add(add(x, y), z) != add(x, add(y, z)))
                            return fail("not associative");
                }
            return true;
        }
        case Signature::quad_selector: {
            // Every 4-subset carries a value; the value lies inside it.
            std::vector<int> u = universe_;
            std::size_t n = u.size();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    for (std::size_t c = b + 1; c < n; ++c)
                        for (std::size_t d = c + 1; d < n; ++d) {
                            std::vector<int> quad{u[a], u[b], u[c], u[d]};
                            auto it = selector_.find(quad);
                            if (it == selector_.end()) return fail("missing quadruple value");
                            auto [p, q] = it->second;
                            if (p == q) return fail("selector value is not a pair");
                            auto inside = [&](int v) {
                                return std::find(quad.begin(), quad.end(), v) != quad.end();
                            };
                            if (!inside(p) || !inside(q))
                                return fail("selector value escapes its quadruple");
                        }
            return true;
        }
    }
    return fail("unknown signature");
}

FinStructure FinStructure::induced(const std::vector<int>& labels) const {
    auto ls = sorted_unique(labels);
    for (int l : ls)
        if (!has(l)) throw ConfigError("induced: label outside the universe");
    FinStructure out;
    out.sig_ = sig_;
    out.universe_ = ls;
    switch (sig_) {
        case Signature::pure_set:
            break;
        case Signature::ultrametric:
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (std::size_t j = i + 1; j < ls.size(); ++j)
                    out.dist_.emplace(okey(ls[i], ls[j]), dist(ls[i], ls[j]));
            break;
        case Signature::vector_space: {
            out.q_ = q_;
            out.zero_ = zero_;
            for (int x : ls)
                for (int y : ls) {
                    int s = add(x, y);
                    if (!std::binary_search(ls.begin(), ls.end(), s))
                        throw ConfigError("induced: label set is not a subspace");
                    out.add_.emplace(std::make_pair(x, y), s);
                }
            if (!std::binary_search(ls.begin(), ls.end(), zero_))
                throw ConfigError("induced: subspace must contain zero");
            break;
        }
        case Signature::quad_selector:
            for (const auto& [quad, val] : selector_) {
                bool inside = true;
                for (int v : quad) inside = inside && std::binary_search(ls.begin(), ls.end(), v);
                if (inside) out.selector_.emplace(quad, val);
            }
            break;
    }
    return out;
}

FinStructure FinStructure::relabel(const std::map<int, int>& f) const {
    auto fmap = [&](int x) {
        auto it = f.find(x);
        if (it == f.end()) throw ConfigError("relabel: map not total on the universe");
        return it->second;
    };
    FinStructure out;
    out.sig_ = sig_;
    for (int x : universe_) out.universe_.push_back(fmap(x));
    out.universe_ = sorted_unique(std::move(out.universe_));
    if (out.universe_.size() != universe_.size())
        throw ConfigError("relabel: map not injective");
    switch (sig_) {
        case Signature::pure_set:
            break;
        case Signature::ultrametric:
            for (const auto& [k, v] : dist_)
                out.dist_.emplace(okey(fmap(k.first), fmap(k.second)), v);
            break;
        case Signature::vector_space:
            out.q_ = q_;
            out.zero_ = fmap(zero_);
            for (const auto& [k, v] : add_)
                out.add_.emplace(std::make_pair(fmap(k.first), fmap(k.second)), fmap(v));
            break;
        case Signature::quad_selector:
            for (const auto& [quad, val] : selector_) {
                std::vector<int> q2;
                for (int v : quad) q2.push_back(fmap(v));
                out.selector_.emplace(sorted_unique(std::move(q2)),
                                      std::make_pair(std::min(fmap(val.first), fmap(val.second)),
                                                     std::max(fmap(val.first), fmap(val.second))));
            }
            break;
    }
    return out;
}

bool FinStructure::is_embedding(const std::map<int, int>& f, const FinStructure& target) const {
    if (target.sig_ != sig_) return false;
    std::vector<int> seen;
    for (int x : universe_) {
        auto it = f.find(x);
        if (it == f.end() || !target.has(it->second)) return false;
        seen.push_back(it->second);
    }
    if (sorted_unique(seen).size() != universe_.size()) return false;
    auto fmap = [&](int x) { return f.at(x); };
    switch (sig_) {
        case Signature::pure_set:
            return true;
        case Signature::ultrametric:
            for (std::size_t i = 0; i < universe_.size(); ++i)
                for (std::size_t j = i + 1; j < universe_.size(); ++j)
                    if (!(dist(universe_[i], universe_[j]) ==
                          target.dist(fmap(universe_[i]), fmap(universe_[j]))))
                        return false;
            return true;
        case Signature::vector_space:
            if (target.q_ != q_ || fmap(zero_) != target.zero_) return false;
            for (int x : universe_)
                for (int y : universe_)
                    if (fmap(add(x, y)) != target.add(fmap(x), fmap(y))) return false;
            return true;
        case Signature::quad_selector:
            for (const auto& [quad, val] : selector_) {
                std::vector<int> img;
                for (int v : quad) img.push_back(fmap(v));
                auto got = target.selected(img);
                std::pair<int, int> want{std::min(fmap(val.first), fmap(val.second)),
                                         std::max(fmap(val.first), fmap(val.second))};
                if (!(got == want)) return false;
            }
            return true;
    }
    return false;
}

bool FinStructure::search(const FinStructure& other, std::map<int, int>& partial,
                          std::vector<bool>& used, std::size_t depth,
                          const std::function<bool(const std::map<int, int>&)>& emit) const {
    if (depth == universe_.size())
        return is_embedding(partial, other) && emit(partial);
    int x = universe_[depth];
    if (partial.count(x)) return search(other, partial, used, depth + 1, emit);
    for (std::size_t i = 0; i < other.universe_.size(); ++i) {
        if (used[i]) continue;
        int y = other.universe_[i];
        partial.emplace(x, y);
        used[i] = true;
        // Cheap partial consistency: distances/sums against already-mapped.
        bool ok = true;
        if (sig_ == Signature::ultrametric) {
            for (const auto& [a, b] : partial)
                if (a != x && !(dist(a, x) == other.dist(b, y))) { ok = false; break; }
        } else if (sig_ == Signature::vector_space) {
            if (x == zero_ && y != other.zero_) ok = false;
        }
        bool stopped = ok && search(other, partial, used, depth + 1, emit);
        partial.erase(x);
        used[i] = false;
        if (stopped) return true;
    }
    return false;
}

std::optional<std::map<int, int>> FinStructure::find_isomorphism(
    const FinStructure& other, const std::map<int, int>& pins) const {
    if (other.universe_.size() != universe_.size()) return std::nullopt;
    return find_embedding(other, pins);
}

std::optional<std::map<int, int>> FinStructure::find_embedding(
    const FinStructure& other, const std::map<int, int>& pins) const {
    std::map<int, int> partial = pins;
    std::vector<bool> used(other.universe_.size(), false);
    for (const auto& [x, y] : pins) {
        auto it = std::lower_bound(other.universe_.begin(), other.universe_.end(), y);
        if (it == other.universe_.end() || *it != y) return std::nullopt;
        used[static_cast<std::size_t>(it - other.universe_.begin())] = true;
    }
    std::optional<std::map<int, int>> found;
    search(other, partial, used, 0, [&](const std::map<int, int>& f) {
        found = f;
        return true;
    });
    return found;
}

std::vector<std::map<int, int>> FinStructure::automorphisms() const {
    std::vector<std::map<int, int>> out;
    std::map<int, int> partial;
    std::vector<bool> used(universe_.size(), false);
    search(*this, partial, used, 0, [&](const std::map<int, int>& f) {
        out.push_back(f);
        return false;
    });
    return out;
}

std::vector<int> FinStructure::algebraic_closure(std::vector<int> labels) const {
    auto ls = sorted_unique(std::move(labels));
    if (sig_ != Signature::vector_space) return ls;
    std::vector<int> span = ls;
    if (!std::binary_search(span.begin(), span.end(), zero_)) span.push_back(zero_);
    span = sorted_unique(std::move(span));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> next = span;
        for (int x : span)
            for (int y : span) {
                int s = add(x, y);
                if (!std::binary_search(span.begin(), span.end(), s)) {
                    next.push_back(s);
                    grew = true;
                }
            }
        span = sorted_unique(std::move(next));
    }
    return span;
}

std::string FinStructure::str() const {
    std::ostringstream os;
    os << signature_name(sig_) << '[';
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (i) os << ' ';
        os << universe_[i];
    }
    os << ']';
    if (sig_ == Signature::ultrametric) {
        for (const auto& [k, v] : dist_)
            os << ' ' << k.first << '-' << k.second << ':' << v.str();
    } else if (sig_ == Signature::vector_space) {
        os << " q=" << q_ << " zero=" << zero_;
    } else if (sig_ == Signature::quad_selector) {
        for (const auto& [quad, val] : selector_) {
            os << " {";
            for (int v : quad) os << v << ' ';
            os << "}->" << val.first << ',' << val.second;
        }
    }
    return os.str();
}

}  // namespace dynideal
