#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenfold/symmetry.hpp"

namespace tenfold {

/// Finitely generated abelian group: free rank plus a sorted torsion multiset.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<int> torsion; // orders >= 2, ascending

    static AbelianGroup zero() { return {}; }
    static AbelianGroup free(int rank);
    static AbelianGroup cyclic(int order);

    AbelianGroup direct_sum(const AbelianGroup& other) const;
    static AbelianGroup multiple(int copies, const AbelianGroup& g);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool contains_summand(const AbelianGroup& other) const;
    bool operator==(const AbelianGroup&) const = default;

    /// "0", "Z", "Z^3", "Z2^4", "Z^3 + Z2", ...
    std::string str() const;
};

/// Degree index, interpreted mod 8 (Bott periodicity).
struct KIndex {
    int value = 0;
    int mod8() const { return ((value % 8) + 8) % 8; }
};

/// KO^{-i}(pt): [Z, Z2, Z2, 0, Z, 0, 0, 0] for i = 0..7.
AbelianGroup ko_point(KIndex i);

/// KR^{-i}(S^{1,d}) = KO^{-i} + KO^{-(i-d)}; reduced keeps the second summand.
AbelianGroup kr_sphere(KIndex i, int d, bool reduced);

/// KR^{-i}(T^d) = sum_k C(d,k) KO^{-(i-k)}; reduced drops the k = 0 term.
AbelianGroup kr_torus(KIndex i, int d, bool reduced);

/// KQ^n = KR^{n-4}.
KIndex kq_shift(KIndex n);

/// Real classes in cyclic order AI=0, BDI=1, D=2, DIII=3, AII=4, CII=5, C=6, CI=7.
const std::array<AZClass, 8>& real_classes();
int class_number(AZClass c);

/// KO^{-(class_number - d mod 8)}(pt); reproduces the tenfold table.
AbelianGroup periodic_table_entry(AZClass c, int d);

/// Verbatim transcription of the tenfold table, d = 1..3, kept separate from
/// the generated one so either transcription or formula errors are caught.
AbelianGroup periodic_table_reference(AZClass c, int d);

enum class IndexTag {
    None,           // empty cell: trivial
    Ch1P,           // first Chern number of the occupied projector
    Ch1W,           // 1d winding number of the chiral block
    Ch1WMod2,       // 1d winding, Z2-valued
    Ch3W,           // 3d winding number
    Ch3WMod2,       // 3d winding, Z2-valued
    Ch1WMod2DimRed, // Z2 index after the 2d -> 1d dimensional reduction
};

const char* index_tag_name(IndexTag tag);

struct ClassTablesEntry {
    AZClass az_class = AZClass::AI;
    int d = 1;
    std::optional<int> ko_label;                    // exponent: 0, -2 or -4
    std::optional<int> fredholm_label;              // classifying-space index: 0, 1, 2, 4
    std::optional<std::pair<int, int>> homotopy_label; // (pi_0 or pi_1, fredholm index)
    std::optional<int> source_exponent;             // bulk KR exponent (negative)
    IndexTag index_tag = IndexTag::None;
};

/// Per-(class, d) metadata: KO label, Fredholm classifying space, homotopy
/// group, bulk KR source, and the topological-index formula tag.
ClassTablesEntry class_metadata(AZClass c, int d);

} // namespace tenfold
