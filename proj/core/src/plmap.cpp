#include "dynideal/plmap.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

PLMap::PLMap() : pieces_{Piece{Rational(1), Rational(0)}} {}

PLMap::PLMap(std::vector<Rational> breaks, std::vector<Piece> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    validate_and_canonicalize();
}

void PLMap::validate_and_canonicalize() {
    if (pieces_.size() != breaks_.size() + 1)
        throw ConfigError("PLMap: piece/breakpoint count mismatch");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw ConfigError("PLMap: breakpoints not strictly increasing");
    for (const auto& p : pieces_)
        if (p.slope.sign() <= 0) throw ConfigError("PLMap: nonpositive slope");
    for (std::size_t i = 0; i < breaks_.size(); ++i)
        if (pieces_[i].eval(breaks_[i]) != pieces_[i + 1].eval(breaks_[i]))
            throw ConfigError("PLMap: discontinuous at " + breaks_[i].str());
    // Drop breakpoints between identical pieces.
    std::vector<Rational> nb;
    std::vector<Piece> np{pieces_.front()};
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (pieces_[i + 1] == np.back()) continue;
        nb.push_back(breaks_[i]);
        np.push_back(pieces_[i + 1]);
    }
    breaks_ = std::move(nb);
    pieces_ = std::move(np);
}

PLMap PLMap::from_anchors(const std::vector<std::pair<Rational, Rational>>& anchors,
                          const Rational& left_slope, const Rational& right_slope) {
    if (anchors.empty()) return PLMap();
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        if (!(anchors[i].first < anchors[i + 1].first))
            throw ConfigError("PLMap::from_anchors: x not strictly increasing");
        if (!(anchors[i].second < anchors[i + 1].second))
            throw ConfigError("PLMap::from_anchors: y not strictly increasing");
    }
    std::vector<Rational> breaks;
    std::vector<Piece> pieces;
    pieces.push_back(Piece{left_slope, anchors.front().second - left_slope * anchors.front().first});
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const auto& [x0, y0] = anchors[i];
        const auto& [x1, y1] = anchors[i + 1];
        Rational slope = (y1 - y0) / (x1 - x0);
        breaks.push_back(x0);
        pieces.push_back(Piece{slope, y0 - slope * x0});
    }
    breaks.push_back(anchors.back().first);
    pieces.push_back(Piece{right_slope,
                           anchors.back().second - right_slope * anchors.back().first});
    return PLMap(std::move(breaks), std::move(pieces));
}

PLMap PLMap::translation(const Rational& delta) {
    return PLMap({}, {Piece{Rational(1), delta}});
}

bool PLMap::is_identity() const {
    return breaks_.empty() && pieces_.front().slope == Rational(1) &&
           pieces_.front().offset == Rational(0);
}

std::size_t PLMap::piece_index_at(const Rational& x) const {
    // First piece whose right endpoint is >= x; at a breakpoint both
    // neighbours agree, we return the left one.
    std::size_t lo = 0, hi = breaks_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (breaks_[mid] < x) lo = mid + 1; else hi = mid;
    }
    return lo;
}

const PLMap::Piece& PLMap::piece_at(const Rational& x) const {
    return pieces_[piece_index_at(x)];
}

const PLMap::Piece& PLMap::piece_at(const QuadExt& x) const {
    std::size_t lo = 0, hi = breaks_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (QuadExt(breaks_[mid]) < x) lo = mid + 1; else hi = mid;
    }
    return pieces_[lo];
}

Rational PLMap::apply(const Rational& x) const { return piece_at(x).eval(x); }
QuadExt PLMap::apply(const QuadExt& x) const { return piece_at(x).eval(x); }

PLMap PLMap::inverse() const {
    std::vector<Rational> nb;
    nb.reserve(breaks_.size());
    for (std::size_t i = 0; i < breaks_.size(); ++i) nb.push_back(apply(breaks_[i]));
    std::vector<Piece> np;
    np.reserve(pieces_.size());
    for (const auto& p : pieces_)
        np.push_back(Piece{Rational(1) / p.slope, -p.offset / p.slope});
    return PLMap(std::move(nb), std::move(np));
}

PLMap PLMap::compose(const PLMap& g) const {
    const PLMap& f = *this;
    PLMap ginv = g.inverse();
    std::vector<Rational> nb = g.breaks_;
    for (const auto& b : f.breaks_) nb.push_back(ginv.apply(b));
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());

    std::vector<Piece> np;
    np.reserve(nb.size() + 1);
    for (std::size_t i = 0; i <= nb.size(); ++i) {
        // A probe inside the i-th interval of the refined partition.
        Rational probe;
        if (nb.empty()) probe = Rational(0);
        else if (i == 0) probe = nb.front() - Rational(1);
        else if (i == nb.size()) probe = nb.back() + Rational(1);
        else probe = midpoint(nb[i - 1], nb[i]);
        const Piece& pg = g.piece_at(probe);
        const Piece& pf = f.piece_at(g.apply(probe));
        np.push_back(Piece{pf.slope * pg.slope, pf.slope * pg.offset + pf.offset});
    }
    return PLMap(std::move(nb), std::move(np));
}

std::string PLMap::str() const {
    std::ostringstream os;
    os << "pl[";
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (i) os << ' ';
        os << breaks_[i];
    }
    os << " | ";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << ' ';
        os << pieces_[i].slope << ',' << pieces_[i].offset;
    }
    os << ']';
    return os.str();
}

}  // namespace dynideal
