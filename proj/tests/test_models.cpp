#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tenfold/models.hpp"

using namespace tenfold;

namespace {

ModelParams params_of(std::initializer_list<std::pair<const char*, double>> kv) {
    ModelParams p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

const ModelParams kKitaevHalf = params_of({{"mu", 0.5}, {"t", 1}, {"delta", 1}});

} // namespace

TEST_CASE("kitaev chain at the high-symmetry momenta") {
    const BlochModel m = make_model("kitaev_chain", kKitaevHalf);
    const CMatrix h0 = m.eval(MomentumPoint::of({0.0}));
    CHECK(h0(0, 0).real() == doctest::Approx(-1.5));
    CHECK(h0(1, 1).real() == doctest::Approx(1.5));
    CHECK(std::abs(h0(0, 1)) < 1e-15);

    const CMatrix hpi = m.eval(MomentumPoint::of({M_PI}));
    CHECK(hpi(0, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(hpi(0, 1)) < 1e-12);
}

TEST_CASE("chiral p-wave at k = (pi/2, 0)") {
    const BlochModel m = make_model("chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
    const CMatrix h = m.eval(MomentumPoint::of({M_PI / 2, 0.0}));
    // tau_x - 4 tau_z
    CHECK(h(0, 0).real() == doctest::Approx(-4.0));
    CHECK(h(0, 1).real() == doctest::Approx(1.0));
    CHECK(h(0, 1).imag() == doctest::Approx(0.0));
}

TEST_CASE("model registry errors") {
    CHECK_THROWS_WITH_AS(make_model("no_such_model", {}), doctest::Contains("UnknownModel"), Error);
    CHECK_THROWS_WITH_AS(make_model("kitaev_chain", params_of({{"mu", 1}})),
                         doctest::Contains("MissingParam"), Error);
}

TEST_CASE("zoo models are Hermitian and periodic at random momenta") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    const std::vector<std::pair<std::string, ModelParams>> zoo = {
        {"kitaev_chain", kKitaevHalf},
        {"chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}})},
        {"d_id_wave", params_of({{"mu", 2}, {"t", 1}, {"dx2y2", 1}, {"dxy", 1}})},
        {"diii_superposition", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}})},
        {"bhz_qsh", params_of({{"m", 1}, {"coupling", 0.25}})},
        {"dirac_3d_chiral", params_of({{"m", 2}})},
    };
    for (const auto& [name, p] : zoo) {
        const BlochModel m = make_model(name, p);
        for (int trial = 0; trial < 100; ++trial) {
            MomentumPoint k;
            k.dim = m.dim;
            for (int a = 0; a < m.dim; ++a) k.coords[static_cast<size_t>(a)] = u(rng);
            const CMatrix h = m.eval(k);
            CHECK(h.hermiticity_defect() < 1e-12);
            for (int a = 0; a < m.dim; ++a) {
                MomentumPoint kp = k;
                kp.coords[static_cast<size_t>(a)] += 2.0 * M_PI;
                CHECK((m.eval(kp) - h).frobenius_norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("sample_grid basics and errors") {
    const BlochModel m = make_model("kitaev_chain", kKitaevHalf);
    const SampledBloch s = sample_grid(m, 8);
    CHECK(s.values.size() == 8);
    CHECK(s.min_gap > 0.0);

    const SampledBloch closing =
        sample_grid(make_model("kitaev_chain", params_of({{"mu", 1}, {"t", 1}, {"delta", 1}})), 8);
    CHECK(closing.min_gap < 1e-12); // mass vanishes at k = pi

    CHECK_THROWS_WITH_AS(sample_grid(m, 5), doctest::Contains("NotEven"), Error);
    CHECK_THROWS_WITH_AS(sample_grid(m, 2), doctest::Contains("GridTooSmall"), Error);
}

TEST_CASE("min_gap closed forms") {
    BlochModel flat;
    flat.name = "flat";
    flat.dim = 1;
    flat.bands = 2;
    flat.eval = [](const MomentumPoint&) { return pauli(3); };
    CHECK(min_gap(sample_grid(flat, 8)) == doctest::Approx(1.0));

    const SampledBloch s =
        sample_grid(make_model("kitaev_chain", params_of({{"mu", 0}, {"t", 1}, {"delta", 1}})), 16);
    CHECK(min_gap(s) == doctest::Approx(1.0)); // sqrt(cos^2 + sin^2) = 1
}

TEST_CASE("sampled gap matches the closed-form Kitaev spectrum") {
    for (double mu : {-1.7, -0.4, 0.3, 0.9, 1.3}) {
        const SampledBloch s =
            sample_grid(make_model("kitaev_chain", params_of({{"mu", mu}, {"t", 1}, {"delta", 1}})), 32);
        CHECK(s.min_gap == doctest::Approx(oracles::kitaev_grid_gap(mu, 1, 1, 32)).epsilon(1e-10));
    }
}

TEST_CASE("kitaev gap closes exactly at |mu| = |t|") {
    for (int step = 0; step <= 80; ++step) {
        const double mu = -2.0 + 0.05 * step;
        const SampledBloch s =
            sample_grid(make_model("kitaev_chain", params_of({{"mu", mu}, {"t", 1}, {"delta", 1}})), 32);
        const bool closed = s.min_gap < 1e-9;
        const bool critical = std::abs(std::abs(mu) - 1.0) < 1e-12;
        CHECK(closed == critical);
    }
}

TEST_CASE("grid involution is exact") {
    GridIndexer g{2, 16};
    for (int lin = 0; lin < g.point_count(); ++lin) {
        const int refl = g.reflect(lin);
        const MomentumPoint k = g.momentum(lin);
        const MomentumPoint mk = g.momentum(refl);
        // -k reduced into [-pi, pi) must hit the grid bitwise
        for (int a = 0; a < 2; ++a) CHECK(mk[a] == (k[a] == -M_PI ? -M_PI : -k[a]));
    }
    // TRIM points are on the grid: 0 and -pi per axis
    CHECK(g.momentum_component(8) == 0.0);
    CHECK(g.momentum_component(0) == -M_PI);
}

TEST_CASE("momentum reduction") {
    CHECK(reduce_to_bz(M_PI) == doctest::Approx(-M_PI));
    CHECK(reduce_to_bz(-M_PI) == doctest::Approx(-M_PI));
    CHECK(reduce_to_bz(3.0 * M_PI / 2.0) == doctest::Approx(-M_PI / 2.0));
    CHECK(reduce_to_bz(0.0) == 0.0);
}

TEST_CASE("direct sum and conjugated model") {
    const BlochModel a = make_model("chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
    const BlochModel b = make_model("d_id_wave", params_of({{"mu", 2}, {"t", 1}, {"dx2y2", 1}, {"dxy", 1}}));
    const BlochModel sum = direct_sum(a, b);
    CHECK(sum.bands == 4);
    const MomentumPoint k = MomentumPoint::of({0.3, -1.1});
    const CMatrix h = sum.eval(k);
    CHECK(h(0, 0) == a.eval(k)(0, 0));
    CHECK(h(2, 2) == b.eval(k)(0, 0));
    CHECK(h(0, 2) == cplx(0.0));

    const BlochModel conj = conjugated_model(a);
    const CMatrix hc = conj.eval(k);
    MomentumPoint mk = k;
    mk.coords[0] = -k[0];
    mk.coords[1] = -k[1];
    CHECK((hc - a.eval(mk).conjugate()).frobenius_norm() == doctest::Approx(0.0));

    CHECK_THROWS_AS(direct_sum(make_model("kitaev_chain", kKitaevHalf), a), Error);
}
