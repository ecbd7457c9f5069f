#include <doctest.h>

#include <cmath>

#include "tenfold/ktable.hpp"
#include "tenfold/models.hpp"
#include "tenfold/symmetry.hpp"

using namespace tenfold;

namespace {

ModelParams params_of(std::initializer_list<std::pair<const char*, double>> kv) {
    ModelParams p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

SampledBloch kitaev(double mu, int n = 16) {
    return sample_grid(make_model("kitaev_chain", params_of({{"mu", mu}, {"t", 1}, {"delta", 1}})), n);
}

} // namespace

TEST_CASE("anti-unitary squares") {
    AntiUnitaryOp k_only{pauli(0), OpKind::TRS, "K"};
    CHECK(k_only.square_sign() == 1);
    AntiUnitaryOp sy{pauli(2), OpKind::TRS, "pauli:y K"};
    CHECK(sy.square_sign() == -1);
    AntiUnitaryOp bad{0.5 * pauli(0), OpKind::TRS, "half"};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("check_antiunitary on the kitaev chain") {
    const SampledBloch s = kitaev(0.5);

    const auto phs = check_antiunitary(s, {pauli(1), OpKind::PHS, "pauli:x K"}, 1e-9);
    CHECK(phs.holds);
    CHECK(phs.sign == 1);

    const auto trs = check_antiunitary(s, {pauli(0), OpKind::TRS, "K"}, 1e-9);
    CHECK(trs.holds);
    CHECK(trs.sign == 1);

    const SampledBloch pw =
        sample_grid(make_model("chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}})), 12);
    CHECK(!check_antiunitary(pw, {pauli(0), OpKind::TRS, "K"}, 1e-9).holds);

    CHECK_THROWS_WITH_AS(check_antiunitary(pw, {pauli_string("x*x"), OpKind::TRS, "big"}, 1e-9),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("involution consistency: reflected grid satisfies the same symmetry") {
    const SampledBloch s = kitaev(0.5);
    SampledBloch reflected = s;
    for (int lin = 0; lin < s.grid.point_count(); ++lin)
        reflected.values[static_cast<size_t>(lin)] = s.at(s.grid.reflect(lin));
    CHECK(check_antiunitary(reflected, {pauli(0), OpKind::TRS, "K"}, 1e-9).holds);
    CHECK(check_antiunitary(reflected, {pauli(1), OpKind::PHS, "pauli:x K"}, 1e-9).holds);
}

TEST_CASE("check_chiral") {
    // block off-diagonal model with S = diag(I, -I)
    BlochModel block;
    block.name = "block";
    block.dim = 1;
    block.bands = 2;
    block.eval = [](const MomentumPoint& k) {
        CMatrix h(2);
        h(0, 1) = cplx(std::cos(k[0]), -0.4 * std::sin(k[0]));
        h(1, 0) = std::conj(h(0, 1));
        return h;
    };
    CHECK(check_chiral(sample_grid(block, 8), {pauli(3), "pauli:z"}, 1e-9));

    BlochModel diag;
    diag.name = "diag";
    diag.dim = 1;
    diag.bands = 2;
    diag.eval = [](const MomentumPoint&) { return pauli(3); };
    CHECK(!check_chiral(sample_grid(diag, 8), {pauli(3), "pauli:z"}, 1e-9));

    CHECK(check_chiral(kitaev(0.5), {pauli(1), "pauli:x"}, 1e-9));
}

TEST_CASE("az_class_of covers exactly the ten signatures") {
    CHECK(az_class_of({-1, 0, 0}) == AZClass::AII);
    CHECK(az_class_of({0, 1, 0}) == AZClass::D);
    CHECK(az_class_of({0, 0, 0}) == AZClass::A);
    int matched = 0;
    for (int trs : {-1, 0, 1})
        for (int phs : {-1, 0, 1})
            for (int cs : {0, 1}) {
                SymmetrySignature sig{trs, phs, cs};
                try {
                    const AZClass c = az_class_of(sig);
                    CHECK(signature_of(c) == sig);
                    ++matched;
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::InconsistentSignature);
                }
            }
    CHECK(matched == 10);
    CHECK_THROWS_AS(az_class_of({1, 1, 0}), Error);
}

TEST_CASE("classify the model zoo") {
    SUBCASE("kitaev chain: BDI, with D also reported") {
        const Classification c = classify(kitaev(0.5));
        CHECK(c.az_class == AZClass::BDI);
        REQUIRE(c.consistent.size() == 2);
        CHECK(c.consistent[0] == AZClass::BDI);
        CHECK(c.consistent[1] == AZClass::D);
        CHECK(c.trs_witness->label == "pauli:0 K");
        CHECK(c.phs_witness->label == "pauli:x K");
    }
    SUBCASE("chiral p-wave: D") {
        const auto s = sample_grid(make_model("chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}})), 16);
        const Classification c = classify(s);
        CHECK(c.az_class == AZClass::D);
        CHECK(c.signature.phs == 1);
        CHECK(!c.trs_witness);
    }
    SUBCASE("d+id: C via the supplied candidate") {
        const auto s = sample_grid(
            make_model("d_id_wave", params_of({{"mu", 2}, {"t", 1}, {"dx2y2", 1}, {"dxy", 1}})), 16);
        CandidateSet cand;
        cand.antiunitary.push_back({pauli(2), OpKind::PHS, "pauli:y K"});
        const Classification c = classify(s, cand);
        CHECK(c.az_class == AZClass::C);
        CHECK(c.signature.phs == -1);
        // and the built-in sweep agrees
        CHECK(classify(s).az_class == AZClass::C);
    }
    SUBCASE("diii superposition: ambiguous under the sweep, DIII with its operators") {
        const BlochModel m = make_model("diii_superposition", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
        const auto s = sample_grid(m, 16);
        CHECK_THROWS_WITH_AS(classify(s), doctest::Contains("AmbiguousWitness"), Error);
        const Classification c = classify(s, m.default_candidates);
        CHECK(c.az_class == AZClass::DIII);
        CHECK(c.signature.trs == -1);
        CHECK(c.signature.phs == 1);
        CHECK(c.signature.cs == 1);
        CHECK(c.consistent.size() == 1);
    }
    SUBCASE("bhz: AII via the sweep") {
        const auto s = sample_grid(make_model("bhz_qsh", params_of({{"m", 1}, {"coupling", 0.25}})), 16);
        const Classification c = classify(s);
        CHECK(c.az_class == AZClass::AII);
        CHECK(c.signature.trs == -1);
        CHECK(c.signature.phs == 0);
    }
    SUBCASE("3d chiral dirac model: DIII via the sweep") {
        const auto s = sample_grid(make_model("dirac_3d_chiral", params_of({{"m", 2}})), 8);
        const Classification c = classify(s);
        CHECK(c.az_class == AZClass::DIII);
        CHECK(c.chiral_witness.has_value());
    }
}

TEST_CASE("classify rejects gapless models") {
    CHECK_THROWS_WITH_AS(classify(kitaev(1.0)), doctest::Contains("GaplessModel"), Error);
}

TEST_CASE("classify without candidates needs 2 or 4 bands") {
    const BlochModel a = make_model("diii_superposition", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
    const BlochModel b = make_model("bhz_qsh", params_of({{"m", 1}, {"coupling", 0.25}}));
    const auto s = sample_grid(direct_sum(a, b), 8);
    CHECK_THROWS_WITH_AS(classify(s), doctest::Contains("NoCandidates"), Error);
}

TEST_CASE("product of TRS and PHS witnesses is chiral at 2 tol") {
    const SampledBloch s = kitaev(0.5);
    const Classification c = classify(s);
    REQUIRE(c.trs_witness);
    REQUIRE(c.phs_witness);
    UnitaryOp product{c.trs_witness->u * c.phs_witness->u.conjugate(), "product"};
    CHECK(check_chiral(s, product, 2e-9));

    const BlochModel diii = make_model("diii_superposition", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
    const auto sd = sample_grid(diii, 12);
    const Classification cd = classify(sd, diii.default_candidates);
    UnitaryOp pd{cd.trs_witness->u * cd.phs_witness->u.conjugate(), "product"};
    CHECK(check_chiral(sd, pd, 2e-9));
    CHECK(pd.square_sign() == -1); // DIII: S^2 = -1
}

TEST_CASE("a model with no discrete symmetry lands in A") {
    BlochModel plain;
    plain.name = "plain";
    plain.dim = 1;
    plain.bands = 2;
    plain.eval = [](const MomentumPoint& k) {
        CMatrix h(2);
        const double id = 2.0 + 0.3 * std::cos(k[0]);
        const double z = std::cos(k[0]) + 0.2 * std::sin(2.0 * k[0]);
        h(0, 0) = id + z;
        h(1, 1) = id - z;
        h(0, 1) = cplx(std::sin(k[0]), -0.4);
        h(1, 0) = cplx(std::sin(k[0]), 0.4);
        return h;
    };
    const Classification c = classify(sample_grid(plain, 16));
    CHECK(c.az_class == AZClass::A);
    CHECK(!c.trs_witness);
    CHECK(!c.phs_witness);
    CHECK(!c.chiral_witness);
    // complex classes have no KR-side data
    CHECK_THROWS_WITH_AS(periodic_table_entry(AZClass::A, 1), doctest::Contains("ComplexClass"),
                         Error);
}

TEST_CASE("chiral symmetry alone lands in AIII") {
    BlochModel block;
    block.name = "hopping";
    block.dim = 1;
    block.bands = 2;
    block.eval = [](const MomentumPoint& k) {
        CMatrix h(2);
        h(0, 1) = cplx(1.0 + 0.5 * std::cos(k[0]), 0.7 + 0.3 * std::sin(k[0]));
        h(1, 0) = std::conj(h(0, 1));
        return h;
    };
    CandidateSet cand;
    cand.chiral.push_back({pauli(3), "pauli:z"});
    const Classification c = classify(sample_grid(block, 16), cand);
    CHECK(c.az_class == AZClass::AIII);
    CHECK(c.signature == SymmetrySignature{0, 0, 1});
}

TEST_CASE("chiral plus one anti-unitary witness derives the other") {
    const SampledBloch s = kitaev(0.5);
    CandidateSet cand;
    cand.antiunitary.push_back({pauli(0), OpKind::TRS, "K"});
    cand.chiral.push_back({pauli(1), "pauli:x"});
    const Classification c = classify(s, cand);
    CHECK(c.az_class == AZClass::BDI);
    REQUIRE(c.phs_witness.has_value()); // derived as S * Theta
    CHECK(c.phs_witness->square_sign() == 1);
}
