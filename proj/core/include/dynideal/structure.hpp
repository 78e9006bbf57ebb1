// Finite structures in the four signatures of the amalgamation machinery:
// pure sets, rational ultrametric spaces, vector spaces over a finite field
// (stored as full addition tables), and the quadruple-to-pair selector used
// by the impossibility example. Isomorphism and embedding tests are exact
// backtracking searches; universes stay desk-sized.

#pragma once

#include "dynideal/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dynideal {

enum class Signature { pure_set, ultrametric, vector_space, quad_selector };

std::string signature_name(Signature s);
Signature signature_from_name(const std::string& name);

class FinStructure {
public:
    FinStructure() = default;

    static FinStructure pure(std::vector<int> labels);
    static FinStructure ultrametric_space(std::vector<int> labels,
                                          std::map<std::pair<int, int>, Rational> dist);
    static FinStructure vector_space(int q, std::vector<int> labels, int zero,
                                     std::map<std::pair<int, int>, int> add);
    static FinStructure quad_selector(std::vector<int> labels,
                                      std::map<std::vector<int>, std::pair<int, int>> table);

    // The elementary abelian q-space of the given dimension with labels
    // 0..q^dim-1 (label bit/digit patterns are the coordinates).
    static FinStructure cube_space(int q, int dim);

    Signature signature() const { return sig_; }
    const std::vector<int>& universe() const { return universe_; }
    int size() const { return static_cast<int>(universe_.size()); }
    bool has(int label) const;

    const Rational& dist(int x, int y) const;
    int add(int x, int y) const;
    int zero() const { return zero_; }
    int field_order() const { return q_; }
    // The selected pair of a (sorted) quadruple.
    std::pair<int, int> selected(const std::vector<int>& quad) const;
    const std::map<std::vector<int>, std::pair<int, int>>& selector_table() const {
        return selector_;
    }
    const std::map<std::pair<int, int>, Rational>& distance_table() const { return dist_; }

    // Signature axioms: ultrametric inequality on all triples, abelian-group
    // plus characteristic-q laws, selector output inside its quadruple.
    bool check_axioms(std::string* why = nullptr) const;

    // Induced substructure; for vector spaces the label set must be a
    // subspace (ConfigError otherwise).
    FinStructure induced(const std::vector<int>& labels) const;

    // Structure with labels renamed by f (injective on the universe).
    FinStructure relabel(const std::map<int, int>& f) const;

    // Does f embed this structure into target (preserving everything)?
    bool is_embedding(const std::map<int, int>& f, const FinStructure& target) const;

    // Backtracking search for an isomorphism onto `other` extending `pins`.
    std::optional<std::map<int, int>> find_isomorphism(
        const FinStructure& other, const std::map<int, int>& pins = {}) const;

    // Backtracking search for an embedding into `other` extending `pins`.
    std::optional<std::map<int, int>> find_embedding(const FinStructure& other,
                                                     const std::map<int, int>& pins = {}) const;

    // All automorphisms (small universes only).
    std::vector<std::map<int, int>> automorphisms() const;

    // Closure of a label set under the functions of the signature (span for
    // vector spaces, identity otherwise).
    std::vector<int> algebraic_closure(std::vector<int> labels) const;

    friend bool operator==(const FinStructure&, const FinStructure&) = default;

    std::string str() const;

private:
    // Returns true when the search was stopped by the consumer.
    bool search(const FinStructure& other, std::map<int, int>& partial,
                std::vector<bool>& used, std::size_t depth,
                const std::function<bool(const std::map<int, int>&)>& emit) const;

    Signature sig_ = Signature::pure_set;
    std::vector<int> universe_;
    std::map<std::pair<int, int>, Rational> dist_;  // keys ordered (min,max)
    int q_ = 0;
    int zero_ = -1;
    std::map<std::pair<int, int>, int> add_;
    std::map<std::vector<int>, std::pair<int, int>> selector_;
};

}  // namespace dynideal
