#include "dynideal/grid.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

GridSet gs_normalize(GridSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

GridSet gs_union(const GridSet& a, const GridSet& b) {
    GridSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return gs_normalize(std::move(out));
}

std::vector<int> gs_columns(const GridSet& s) {
    std::vector<int> cols;
    for (const auto& c : s) cols.push_back(c.col);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

GridSet full_column(int col, int modulus) {
    GridSet out;
    for (int v = 0; v < modulus; ++v) out.push_back(GridCell{col, v});
    return out;
}

GridElement::GridElement(std::vector<int> shifts, int modulus)
    : shifts_(std::move(shifts)), modulus_(modulus) {
    if (modulus_ <= 0) throw ConfigError("GridElement: modulus must be positive");
    for (auto& s : shifts_) s = ((s % modulus_) + modulus_) % modulus_;
}

GridElement GridElement::unit(int m, int modulus, int col) {
    std::vector<int> shifts(static_cast<std::size_t>(m), 0);
    shifts[static_cast<std::size_t>(col)] = 1;
    return GridElement(std::move(shifts), modulus);
}

GridElement GridElement::compose(const GridElement& other) const {
    if (columns() != other.columns() || modulus_ != other.modulus_)
        throw KindMismatch("grid element shapes differ");
    std::vector<int> out(shifts_.size());
    for (std::size_t i = 0; i < shifts_.size(); ++i)
        out[i] = shifts_[i] + other.shifts_[i];
    return GridElement(std::move(out), modulus_);
}

GridElement GridElement::inverse() const {
    std::vector<int> out(shifts_.size());
    for (std::size_t i = 0; i < shifts_.size(); ++i) out[i] = -shifts_[i];
    return GridElement(std::move(out), modulus_);
}

bool GridElement::is_identity() const {
    return std::all_of(shifts_.begin(), shifts_.end(), [](int s) { return s == 0; });
}

GridCell GridElement::act(const GridCell& c) const {
    return GridCell{c.col, (c.val + shift(c.col)) % modulus_};
}

GridSet GridElement::act(const GridSet& s) const {
    GridSet out;
    out.reserve(s.size());
    for (const auto& c : s) out.push_back(act(c));
    return gs_normalize(std::move(out));
}

bool GridElement::fixes_pointwise(const GridSet& s) const {
    for (const auto& c : s)
        if (shift(c.col) != 0) return false;
    return true;
}

std::string GridElement::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
        if (i) os << ' ';
        os << shifts_[i];
    }
    os << ") mod " << modulus_;
    return os.str();
}

}  // namespace dynideal
