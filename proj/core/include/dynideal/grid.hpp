// The abelian grid: columns 0..m-1, each a copy of Z/(modulus), acted on by
// the componentwise shift group (Z/modulus)^m.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dynideal {

struct GridCell {
    int col = 0;
    int val = 0;
    friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

// Sorted, duplicate-free finite subsets of the grid.
using GridSet = std::vector<GridCell>;

GridSet gs_normalize(GridSet s);
GridSet gs_union(const GridSet& a, const GridSet& b);
std::vector<int> gs_columns(const GridSet& s);
GridSet full_column(int col, int modulus);

class GridElement {
public:
    GridElement() = default;
    GridElement(std::vector<int> shifts, int modulus);

    static GridElement identity(int m, int modulus) {
        return GridElement(std::vector<int>(static_cast<std::size_t>(m), 0), modulus);
    }
    static GridElement unit(int m, int modulus, int col);

    int columns() const { return static_cast<int>(shifts_.size()); }
    int modulus() const { return modulus_; }
    int shift(int col) const { return shifts_[static_cast<std::size_t>(col)]; }
    const std::vector<int>& shifts() const { return shifts_; }

    GridElement compose(const GridElement& other) const;  // componentwise sum
    GridElement inverse() const;
    bool is_identity() const;

    GridCell act(const GridCell& c) const;
    GridSet act(const GridSet& s) const;
    bool fixes_pointwise(const GridSet& s) const;

    friend bool operator==(const GridElement&, const GridElement&) = default;

    std::string str() const;

private:
    std::vector<int> shifts_;
    int modulus_ = 1;
};

}  // namespace dynideal
