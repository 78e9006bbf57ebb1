#include "doctest.h"

#include "dynideal/errors.hpp"
#include "dynideal/instance.hpp"

using namespace dynideal;

TEST_CASE("catalog carries every scenario family") {
    auto cat = instance_catalog();
    std::vector<std::string> names;
    for (const auto& inst : cat) names.push_back(inst->name());
    for (auto expect : {"BoundedQ", "WellOrderedQ", "WellOrderedBoundedBelowQ",
                        "CountableClosedQ", "FiniteSym", "AbelianGrid"})
        CHECK(std::find(names.begin(), names.end(), expect) != names.end());
    CHECK_THROWS_AS(make_instance("NoSuchIdeal"), UnknownInstance);
}

TEST_CASE("size-threshold and column ideals") {
    auto fs = make_instance("FiniteSym", {{"N", 6}, {"k", 3}});
    CHECK(fs->in_ideal(PointSet{0, 1}));
    CHECK(!fs->in_ideal(PointSet{0, 1, 2}));
    CHECK(fs->display_name() == "FiniteSym(6,3)");

    auto ag = make_instance("AbelianGrid", {{"m", 3}, {"mod", 4}});
    CHECK(ag->in_ideal(Element(full_column(0, 4))));
    GridSet everything;
    for (int c = 0; c < 3; ++c)
        for (const auto& cell : full_column(c, 4)) everything.push_back(cell);
    CHECK(!ag->in_ideal(Element(gs_normalize(everything))));
}

TEST_CASE("identity acts trivially and lies in every pointwise stabilizer") {
    for (const auto& inst : instance_catalog()) {
        Element s = inst->sample_ideal(5, 2);
        CHECK(inst->act(inst->identity(), s) == s);
        CHECK(inst->in_pstab(inst->identity(), s));
    }
}

TEST_CASE("samplers are deterministic and land in the ideal") {
    for (const auto& inst : instance_catalog()) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            Element a = inst->sample_ideal(seed, 2);
            Element b = inst->sample_ideal(seed, 2);
            CHECK(a == b);
            CHECK(inst->in_ideal(a));
            GroupElem g = inst->sample_group(seed, 2);
            CHECK(g == inst->sample_group(seed, 2));
            CHECK(inst->in_group(g));
            CHECK(group_elem_is_identity(group_compose(g, group_inverse(g))));
        }
    }
}

TEST_CASE("ideals are invariant under sampled actions") {
    for (const auto& inst : instance_catalog()) {
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            Element a = inst->sample_ideal(seed, 2);
            GroupElem g = inst->sample_group(seed ^ 0x9e37, 3);
            CHECK(inst->in_ideal(inst->act(g, a)));
        }
    }
}

TEST_CASE("pstab is a subgroup and fixing-samplers are legal") {
    for (const auto& inst : instance_catalog()) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            Element a = inst->sample_ideal(seed, 2);
            GroupElem g = inst->sample_fixing(seed * 3 + 1, a, 2);
            GroupElem h = inst->sample_fixing(seed * 5 + 2, a, 2);
            CHECK(inst->in_pstab(g, a));
            CHECK(inst->in_pstab(h, a));
            CHECK(inst->in_pstab(group_compose(g, h), a));
            CHECK(inst->in_pstab(group_inverse(g), a));
        }
    }
}

TEST_CASE("abelian grid action commutes") {
    auto ag = make_instance("AbelianGrid", {{"m", 3}, {"mod", 4}});
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Element s = ag->sample_ideal(seed, 2);
        GroupElem g = ag->sample_group(seed * 7 + 1, 2);
        GroupElem h = ag->sample_group(seed * 11 + 5, 2);
        CHECK(ag->act(g, ag->act(h, s)) == ag->act(h, ag->act(g, s)));
    }
    // Concrete shift: gamma = (0,1,0) moves column 1, fixes column 0.
    GridElement gamma({0, 1, 0}, 4);
    GridSet col1 = full_column(1, 4);
    CHECK(!gamma.fixes_pointwise(col1));
    CHECK(gamma.act(col1) == col1);  // a full column is setwise invariant
    CHECK(gamma.act(GridSet{GridCell{1, 0}}) == GridSet{GridCell{1, 1}});
}

TEST_CASE("kind mismatches are rejected") {
    auto fs = make_instance("FiniteSym", {{"N", 5}, {"k", 3}});
    CHECK_THROWS_AS(fs->act(PLMap(), PointSet{0}), KindMismatch);
    CHECK_THROWS_AS(fs->in_ideal(Element(BlockSet())), KindMismatch);
}
