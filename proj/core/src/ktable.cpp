#include "tenfold/ktable.hpp"

#include <algorithm>
#include <set>

namespace tenfold {

AbelianGroup AbelianGroup::free(int rank) {
    AbelianGroup g;
    g.free_rank = rank;
    return g;
}

AbelianGroup AbelianGroup::cyclic(int order) {
    AbelianGroup g;
    g.torsion.push_back(order);
    return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    AbelianGroup g;
    g.free_rank = free_rank + other.free_rank;
    g.torsion = torsion;
    g.torsion.insert(g.torsion.end(), other.torsion.begin(), other.torsion.end());
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

AbelianGroup AbelianGroup::multiple(int copies, const AbelianGroup& g) {
    AbelianGroup out;
    for (int i = 0; i < copies; ++i) out = out.direct_sum(g);
    return out;
}

bool AbelianGroup::contains_summand(const AbelianGroup& other) const {
    if (other.free_rank > free_rank) return false;
    std::multiset<int> mine(torsion.begin(), torsion.end());
    for (int t : other.torsion) {
        auto it = mine.find(t);
        if (it == mine.end()) return false;
        mine.erase(it);
    }
    return true;
}

std::string AbelianGroup::str() const {
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    // group equal torsion orders: Z2^4 etc.
    size_t i = 0;
    while (i < torsion.size()) {
        size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        const size_t count = j - i;
        std::string base = "Z" + std::to_string(torsion[i]);
        parts.push_back(count == 1 ? base : base + "^" + std::to_string(count));
        i = j;
    }
    std::string out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
}

AbelianGroup ko_point(KIndex i) {
    switch (i.mod8()) {
    case 0: return AbelianGroup::free(1);
    case 1: return AbelianGroup::cyclic(2);
    case 2: return AbelianGroup::cyclic(2);
    case 4: return AbelianGroup::free(1);
    default: return AbelianGroup::zero(); // 3, 5, 6, 7
    }
}

AbelianGroup kr_sphere(KIndex i, int d, bool reduced) {
    if (d < 1) throw Error(ErrorCode::UsageError, "sphere dimension must be >= 1");
    const AbelianGroup far = ko_point(KIndex{i.value - d});
    if (reduced) return far;
    return ko_point(i).direct_sum(far);
}

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - j + 1) / j;
    return out;
}

} // namespace

AbelianGroup kr_torus(KIndex i, int d, bool reduced) {
    if (d < 1) throw Error(ErrorCode::UsageError, "torus dimension must be >= 1");
    AbelianGroup out;
    for (int k = reduced ? 1 : 0; k <= d; ++k) {
        const AbelianGroup part = ko_point(KIndex{i.value - k});
        out = out.direct_sum(AbelianGroup::multiple(static_cast<int>(binomial(d, k)), part));
    }
    return out;
}

KIndex kq_shift(KIndex n) { return KIndex{n.value - 4}; }

const std::array<AZClass, 8>& real_classes() {
    static const std::array<AZClass, 8> order = {AZClass::AI, AZClass::BDI, AZClass::D,
                                                 AZClass::DIII, AZClass::AII, AZClass::CII,
                                                 AZClass::C, AZClass::CI};
    return order;
}

int class_number(AZClass c) {
    if (!is_real_class(c))
        throw Error(ErrorCode::ComplexClass,
                    std::string("class ") + az_class_name(c) + " is outside the real eightfold cycle");
    const auto& order = real_classes();
    for (int k = 0; k < 8; ++k)
        if (order[static_cast<size_t>(k)] == c) return k;
    throw Error(ErrorCode::ComplexClass, "unreachable");
}

AbelianGroup periodic_table_entry(AZClass c, int d) {
    if (d < 1) throw Error(ErrorCode::UsageError, "dimension must be >= 1");
    return ko_point(KIndex{class_number(c) - d});
}

namespace {

enum GroupCode { G0, GZ, GZ2 };

AbelianGroup from_code(GroupCode g) {
    switch (g) {
    case GZ: return AbelianGroup::free(1);
    case GZ2: return AbelianGroup::cyclic(2);
    default: return AbelianGroup::zero();
    }
}

// Tenfold table, rows AI..CI in cyclic order, columns d = 1, 2, 3.
constexpr GroupCode kTableRef[8][3] = {
    {G0, G0, G0},   // AI
    {GZ, G0, G0},   // BDI
    {GZ2, GZ, G0},  // D
    {GZ2, GZ2, GZ}, // DIII
    {G0, GZ2, GZ2}, // AII
    {GZ, G0, GZ2},  // CII
    {G0, GZ, G0},   // C
    {G0, G0, GZ},   // CI
};

struct MetaCell {
    bool filled = false;
    int ko = 0;       // KO exponent: 0, -2, -4
    int fredholm = 0; // classifying-space index
    int pi = 0;       // 0 or 1
    int source = 0;   // bulk KR exponent
    IndexTag tag = IndexTag::None;
};

constexpr MetaCell kMeta[8][3] = {
    // AI
    {{}, {}, {}},
    // BDI
    {{true, 0, 0, 0, -1, IndexTag::Ch1W}, {}, {}},
    // D
    {{true, -2, 1, 1, -3, IndexTag::Ch1WMod2}, {true, 0, 0, 0, -2, IndexTag::Ch1P}, {}},
    // DIII
    {{true, -2, 2, 0, -3, IndexTag::Ch1WMod2},
     {true, -2, 1, 1, -4, IndexTag::Ch1WMod2DimRed},
     {true, 0, 0, 0, -3, IndexTag::Ch3W}},
    // AII
    {{},
     {true, -2, 2, 0, -4, IndexTag::Ch1WMod2DimRed},
     {true, -2, 1, 1, -5, IndexTag::Ch3WMod2}},
    // CII
    {{true, -4, 4, 0, -5, IndexTag::Ch1W}, {}, {true, -2, 2, 0, -5, IndexTag::Ch3WMod2}},
    // C
    {{}, {true, -4, 4, 0, -6, IndexTag::Ch1P}, {}},
    // CI
    {{}, {}, {true, -4, 4, 0, -7, IndexTag::Ch3W}},
};

} // namespace

AbelianGroup periodic_table_reference(AZClass c, int d) {
    if (d < 1 || d > 3) throw Error(ErrorCode::UsageError, "reference table covers d = 1..3");
    return from_code(kTableRef[class_number(c)][d - 1]);
}

const char* index_tag_name(IndexTag tag) {
    switch (tag) {
    case IndexTag::None: return "none";
    case IndexTag::Ch1P: return "ch1(p)";
    case IndexTag::Ch1W: return "ch1(w)";
    case IndexTag::Ch1WMod2: return "ch1_2(w)";
    case IndexTag::Ch3W: return "ch3(w)";
    case IndexTag::Ch3WMod2: return "ch3_2(w)";
    case IndexTag::Ch1WMod2DimRed: return "ch1_2(w)_2to1";
    }
    return "?";
}

ClassTablesEntry class_metadata(AZClass c, int d) {
    if (d < 1 || d > 3) throw Error(ErrorCode::UsageError, "metadata covers d = 1..3");
    const MetaCell& cell = kMeta[class_number(c)][d - 1];
    ClassTablesEntry out;
    out.az_class = c;
    out.d = d;
    if (cell.filled) {
        out.ko_label = cell.ko;
        out.fredholm_label = cell.fredholm;
        out.homotopy_label = std::make_pair(cell.pi, cell.fredholm);
        out.source_exponent = cell.source;
        out.index_tag = cell.tag;
    }
    return out;
}

} // namespace tenfold
