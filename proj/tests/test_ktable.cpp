#include <doctest.h>

#include "tenfold/ktable.hpp"

using namespace tenfold;

namespace {
const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::cyclic(2);
const AbelianGroup O = AbelianGroup::zero();
} // namespace

TEST_CASE("abelian group algebra") {
    CHECK(Z.direct_sum(Z2).str() == "Z + Z2");
    CHECK(AbelianGroup::multiple(4, Z2).str() == "Z2^4");
    CHECK(AbelianGroup::multiple(3, Z).direct_sum(Z2).str() == "Z^3 + Z2");
    CHECK(O.str() == "0");
    CHECK(Z.direct_sum(Z2) == Z2.direct_sum(Z));
    CHECK(Z.direct_sum(Z2).contains_summand(Z2));
    CHECK(!Z2.contains_summand(Z));
}

TEST_CASE("ko_point table and periodicity") {
    const AbelianGroup expected[8] = {Z, Z2, Z2, O, Z, O, O, O};
    for (int i = 0; i < 8; ++i) CHECK(ko_point(KIndex{i}) == expected[i]);
    CHECK(ko_point(KIndex{11}) == O);   // 11 = 3 mod 8
    CHECK(ko_point(KIndex{-1}) == O);   // -1 = 7 mod 8
    CHECK(ko_point(KIndex{-4}) == Z);
    CHECK(ko_point(KIndex{16}) == Z);
}

TEST_CASE("kr_sphere") {
    CHECK(kr_sphere(KIndex{4}, 2, true) == Z2);
    CHECK(kr_sphere(KIndex{5}, 1, true) == Z);
    CHECK(kr_sphere(KIndex{0}, 3, true) == O);
    // full group keeps the KO^{-i} summand
    CHECK(kr_sphere(KIndex{4}, 2, false) == Z.direct_sum(Z2));
    // reduced sphere at i = d is KO^0 = Z
    for (int d = 1; d <= 6; ++d) CHECK(kr_sphere(KIndex{d}, d, true) == Z);
}

TEST_CASE("kr_torus") {
    CHECK(kr_torus(KIndex{4}, 3, true) == AbelianGroup::multiple(4, Z2));
    CHECK(kr_torus(KIndex{5}, 3, true) == AbelianGroup::multiple(3, Z).direct_sum(Z2));
    CHECK(kr_torus(KIndex{5}, 2, true) == AbelianGroup::multiple(2, Z));
    for (int d = 1; d <= 3; ++d)
        for (int i = 0; i < 8; ++i)
            CHECK(kr_torus(KIndex{i}, d, false).contains_summand(kr_sphere(KIndex{i}, d, false)));
}

TEST_CASE("kq_shift") {
    CHECK(kq_shift(KIndex{0}).mod8() == 4);  // KQ^0 = KR^-4
    CHECK(kq_shift(KIndex{-1}).mod8() == 3); // KQ^-1 = KR^-5
    CHECK(kq_shift(KIndex{-4}).mod8() == 0); // KQ^-4 = KR^0
}

TEST_CASE("class numbers") {
    CHECK(class_number(AZClass::AI) == 0);
    CHECK(class_number(AZClass::AII) == 4);
    CHECK(class_number(AZClass::CI) == 7);
    CHECK_THROWS_WITH_AS(class_number(AZClass::A), doctest::Contains("ComplexClass"), Error);
    CHECK_THROWS_AS(periodic_table_entry(AZClass::AIII, 2), Error);
}

TEST_CASE("periodic table matches the transcribed data") {
    for (AZClass c : real_classes())
        for (int d = 1; d <= 3; ++d) CHECK(periodic_table_entry(c, d) == periodic_table_reference(c, d));
    CHECK(periodic_table_entry(AZClass::D, 2) == Z);
    CHECK(periodic_table_entry(AZClass::AII, 3) == Z2);
    CHECK(periodic_table_entry(AZClass::AI, 1) == O);
}

TEST_CASE("diagonal identity") {
    const auto& order = real_classes();
    for (int k = 0; k < 8; ++k)
        for (int d = 1; d <= 2; ++d)
            CHECK(periodic_table_entry(order[static_cast<size_t>((k + 1) % 8)], d + 1) ==
                  periodic_table_entry(order[static_cast<size_t>(k)], d));
}

TEST_CASE("every Z2 entry sits in KO^-2") {
    for (AZClass c : real_classes())
        for (int d = 1; d <= 3; ++d) {
            if (periodic_table_entry(c, d) == Z2) {
                const ClassTablesEntry meta = class_metadata(c, d);
                REQUIRE(meta.ko_label.has_value());
                CHECK(*meta.ko_label == -2);
            }
        }
}

TEST_CASE("class metadata spot checks") {
    const ClassTablesEntry d1 = class_metadata(AZClass::D, 1);
    CHECK(*d1.ko_label == -2);
    CHECK(*d1.fredholm_label == 1);
    CHECK(d1.homotopy_label->first == 1);
    CHECK(*d1.source_exponent == -3);
    CHECK(d1.index_tag == IndexTag::Ch1WMod2);

    const ClassTablesEntry diii3 = class_metadata(AZClass::DIII, 3);
    CHECK(*diii3.ko_label == 0);
    CHECK(*diii3.fredholm_label == 0);
    CHECK(diii3.index_tag == IndexTag::Ch3W);

    const ClassTablesEntry c2 = class_metadata(AZClass::C, 2);
    CHECK(*c2.ko_label == -4);
    CHECK(c2.index_tag == IndexTag::Ch1P);

    CHECK(class_metadata(AZClass::AI, 2).index_tag == IndexTag::None);
}

TEST_CASE("class metadata internal consistency") {
    for (AZClass c : real_classes())
        for (int d = 1; d <= 3; ++d) {
            const ClassTablesEntry meta = class_metadata(c, d);
            const AbelianGroup entry = periodic_table_entry(c, d);
            // cells are filled exactly where the table is nonzero
            CHECK(meta.ko_label.has_value() == !entry.is_zero());
            if (!meta.ko_label) continue;
            // group value agrees with the KO label
            CHECK(entry == ko_point(KIndex{-*meta.ko_label}));
            // bulk source exponent is -(|ko| + d)
            CHECK(*meta.source_exponent == -(-*meta.ko_label + d));
            // pi_1(F_i) lands one step deeper than pi_0(F_i)
            const auto [pi, fred] = *meta.homotopy_label;
            CHECK(fred == *meta.fredholm_label);
            CHECK(-*meta.ko_label == fred + pi);
        }
}
