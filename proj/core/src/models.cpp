#include "tenfold/models.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace tenfold {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
} // namespace

double reduce_to_bz(double k) {
    double r = std::fmod(k + kPi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r - kPi;
}

MomentumPoint MomentumPoint::of(std::initializer_list<double> ks) {
    MomentumPoint p;
    p.dim = static_cast<int>(ks.size());
    int i = 0;
    for (double k : ks) p.coords[static_cast<size_t>(i++)] = reduce_to_bz(k);
    return p;
}

double ModelParams::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw Error(ErrorCode::MissingParam, "missing parameter '" + name + "'");
    return it->second;
}

double ModelParams::get_or(const std::string& name, double fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

void BlochModel::validate() const {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uk(-kPi, kPi);
    for (int trial = 0; trial < 8; ++trial) {
        MomentumPoint k;
        k.dim = dim;
        for (int a = 0; a < dim; ++a) k.coords[static_cast<size_t>(a)] = uk(rng);
        const CMatrix h = eval(k);
        if (h.rows() != bands || h.cols() != bands)
            throw Error(ErrorCode::DimensionMismatch, "model '" + name + "' returned a wrong-sized matrix");
        if (!h.all_finite())
            throw Error(ErrorCode::BadModelFile, "model '" + name + "' returned non-finite entries");
        if (h.hermiticity_defect() > 1e-12 * std::max(1.0, h.frobenius_norm()))
            throw Error(ErrorCode::NotHermitian, "model '" + name + "' is not Hermitian");
        for (int a = 0; a < dim; ++a) {
            MomentumPoint kp = k;
            kp.coords[static_cast<size_t>(a)] += kTwoPi;
            if ((eval(kp) - h).frobenius_norm() > 1e-12 * std::max(1.0, h.frobenius_norm()))
                throw Error(ErrorCode::BadModelFile, "model '" + name + "' is not 2pi-periodic");
        }
    }
}

int GridIndexer::point_count() const {
    int count = 1;
    for (int a = 0; a < dim; ++a) count *= n;
    return count;
}

int GridIndexer::linear(const std::array<int, 3>& idx) const {
    int lin = 0;
    for (int a = dim - 1; a >= 0; --a) lin = lin * n + idx[static_cast<size_t>(a)];
    return lin;
}

std::array<int, 3> GridIndexer::unpack(int lin) const {
    std::array<int, 3> idx{};
    for (int a = 0; a < dim; ++a) {
        idx[static_cast<size_t>(a)] = lin % n;
        lin /= n;
    }
    return idx;
}

int GridIndexer::reflect(int lin) const {
    std::array<int, 3> idx = unpack(lin);
    for (int a = 0; a < dim; ++a) idx[static_cast<size_t>(a)] = (n - idx[static_cast<size_t>(a)]) % n;
    return linear(idx);
}

int GridIndexer::shift(int lin, int axis, int delta) const {
    std::array<int, 3> idx = unpack(lin);
    int& c = idx[static_cast<size_t>(axis)];
    c = ((c + delta) % n + n) % n;
    return linear(idx);
}

double GridIndexer::momentum_component(int axis_index) const {
    // 2pi*m/N with integer m keeps k -> -k exact in floating point.
    return (kTwoPi * (axis_index - n / 2)) / n;
}

MomentumPoint GridIndexer::momentum(int lin) const {
    const std::array<int, 3> idx = unpack(lin);
    MomentumPoint k;
    k.dim = dim;
    for (int a = 0; a < dim; ++a)
        k.coords[static_cast<size_t>(a)] = momentum_component(idx[static_cast<size_t>(a)]);
    return k;
}

namespace {

CMatrix two_band(double cx, double cy, double cz) {
    CMatrix h(2);
    h(0, 0) = cz;
    h(1, 1) = -cz;
    h(0, 1) = cplx(cx, -cy);
    h(1, 0) = cplx(cx, cy);
    return h;
}

BlochModel make_kitaev_chain(const ModelParams& params) {
    const double mu = params.get("mu");
    const double t = params.get("t");
    const double delta = params.get("delta");
    BlochModel m;
    m.name = "kitaev_chain";
    m.dim = 1;
    m.bands = 2;
    m.eval = [mu, t, delta](const MomentumPoint& k) {
        return two_band(0.0, delta * std::sin(k[0]), -mu - t * std::cos(k[0]));
    };
    return m;
}

BlochModel make_chiral_p_wave(const ModelParams& params) {
    const double mu = params.get("mu");
    const double t = params.get("t");
    const double pd = params.get("pd");
    BlochModel m;
    m.name = "chiral_p_wave";
    m.dim = 2;
    m.bands = 2;
    m.eval = [mu, t, pd](const MomentumPoint& k) {
        return two_band(pd * std::sin(k[0]), pd * std::sin(k[1]),
                        -mu - 2.0 * t * (std::cos(k[0]) + std::cos(k[1])));
    };
    return m;
}

BlochModel make_d_id_wave(const ModelParams& params) {
    const double mu = params.get("mu");
    const double t = params.get("t");
    const double dx2y2 = params.get("dx2y2");
    const double dxy = params.get("dxy");
    BlochModel m;
    m.name = "d_id_wave";
    m.dim = 2;
    m.bands = 2;
    m.eval = [mu, t, dx2y2, dxy](const MomentumPoint& k) {
        return two_band(dx2y2 * (std::cos(k[0]) - std::cos(k[1])),
                        dxy * std::sin(k[0]) * std::sin(k[1]),
                        -mu - 2.0 * t * (std::cos(k[0]) + std::cos(k[1])));
    };
    return m;
}

// Equal superposition of p_x + i p_y and p_x - i p_y pairing on a square
// lattice: H = [[eps I, D], [D^dag, -eps I]] with D = pd diag(sx + i sy, -sx + i sy).
BlochModel make_diii_superposition(const ModelParams& params) {
    const double mu = params.get("mu");
    const double t = params.get("t");
    const double pd = params.get("pd");
    BlochModel m;
    m.name = "diii_superposition";
    m.dim = 2;
    m.bands = 4;
    m.eval = [mu, t, pd](const MomentumPoint& k) {
        const double eps = -mu - 2.0 * t * (std::cos(k[0]) + std::cos(k[1]));
        const double sx = std::sin(k[0]);
        const double sy = std::sin(k[1]);
        CMatrix h(4);
        h(0, 0) = eps;
        h(1, 1) = eps;
        h(2, 2) = -eps;
        h(3, 3) = -eps;
        const cplx dup = pd * cplx(sx, sy);
        const cplx ddn = pd * cplx(-sx, sy);
        h(0, 2) = dup;
        h(2, 0) = std::conj(dup);
        h(1, 3) = ddn;
        h(3, 1) = std::conj(ddn);
        return h;
    };
    AntiUnitaryOp trs{kron(pauli(0), cplx(0.0, 1.0) * pauli(2)), OpKind::TRS, "i pauli:0*y K"};
    AntiUnitaryOp phs{kron(pauli(1), pauli(0)), OpKind::PHS, "pauli:x*0 K"};
    UnitaryOp chiral{kron(pauli(1), cplx(0.0, 1.0) * pauli(2)), "i pauli:x*y"};
    m.default_candidates.antiunitary = {trs, phs};
    m.default_candidates.chiral = {chiral};
    return m;
}

// Synthetic quantum-spin-Hall testbed: two time-reversed Chern blocks with a
// small time-reversal-preserving spin coupling. Not a literature model.
BlochModel make_bhz_qsh(const ModelParams& params) {
    const double mass = params.get("m");
    const double coupling = params.get_or("coupling", 0.25);
    BlochModel m;
    m.name = "bhz_qsh";
    m.dim = 2;
    m.bands = 4;
    m.eval = [mass, coupling](const MomentumPoint& k) {
        const double sx = std::sin(k[0]);
        const double sy = std::sin(k[1]);
        const double mz = mass + std::cos(k[0]) + std::cos(k[1]);
        CMatrix h(4);
        // spin-up block: sx ox + sy oy + mz oz
        h(0, 0) = mz;
        h(1, 1) = -mz;
        h(0, 1) = cplx(sx, -sy);
        h(1, 0) = cplx(sx, sy);
        // spin-down block: conj(h_up(-k)) = -sx ox + sy oy + mz oz
        h(2, 2) = mz;
        h(3, 3) = -mz;
        h(2, 3) = cplx(-sx, -sy);
        h(3, 2) = cplx(-sx, sy);
        // coupling c sin(kx) (oz + ox) between spins; odd in k so TRS survives,
        // and the ox admixture kills the accidental particle-hole channels
        h(0, 2) = coupling * sx;
        h(2, 0) = coupling * sx;
        h(1, 3) = -coupling * sx;
        h(3, 1) = -coupling * sx;
        h(0, 3) = coupling * sx;
        h(3, 0) = coupling * sx;
        h(1, 2) = coupling * sx;
        h(2, 1) = coupling * sx;
        return h;
    };
    CMatrix j = kron(cplx(0.0, 1.0) * pauli(2), pauli(0)); // i oy (spin) x id (orbital)
    m.default_candidates.antiunitary = {AntiUnitaryOp{j, OpKind::TRS, "i pauli:y*0 K"}};
    return m;
}

// Synthetic 4-band chiral Dirac lattice model in 3d. Not a literature model.
BlochModel make_dirac_3d_chiral(const ModelParams& params) {
    const double mass = params.get("m");
    BlochModel m;
    m.name = "dirac_3d_chiral";
    m.dim = 3;
    m.bands = 4;
    const CMatrix g1 = kron(pauli(1), pauli(1));
    const CMatrix g2 = kron(pauli(1), pauli(2));
    const CMatrix g3 = kron(pauli(1), pauli(3));
    const CMatrix g4 = kron(pauli(2), pauli(0));
    m.eval = [mass, g1, g2, g3, g4](const MomentumPoint& k) {
        const double mk = mass - std::cos(k[0]) - std::cos(k[1]) - std::cos(k[2]);
        return std::sin(k[0]) * g1 + std::sin(k[1]) * g2 + std::sin(k[2]) * g3 + mk * g4;
    };
    return m;
}

} // namespace

const std::vector<std::string>& builtin_model_names() {
    static const std::vector<std::string> names = {
        "kitaev_chain",  "chiral_p_wave",      "d_id_wave",
        "diii_superposition", "bhz_qsh",       "dirac_3d_chiral",
    };
    return names;
}

BlochModel make_model(const std::string& name, const ModelParams& params) {
    BlochModel m;
    if (name == "kitaev_chain") m = make_kitaev_chain(params);
    else if (name == "chiral_p_wave") m = make_chiral_p_wave(params);
    else if (name == "d_id_wave") m = make_d_id_wave(params);
    else if (name == "diii_superposition") m = make_diii_superposition(params);
    else if (name == "bhz_qsh") m = make_bhz_qsh(params);
    else if (name == "dirac_3d_chiral") m = make_dirac_3d_chiral(params);
    else throw Error(ErrorCode::UnknownModel, "unknown model '" + name + "'");
    m.params = params;
    m.validate();
    return m;
}

SampledBloch sample_grid(const BlochModel& model, int n) {
    if (n < 4) throw Error(ErrorCode::GridTooSmall, "grid size must be at least 4");
    if (n % 2 != 0) throw Error(ErrorCode::NotEven, "grid size must be even");
    if (model.dim < 1 || model.dim > 3)
        throw Error(ErrorCode::DimensionMismatch, "model dimension must be 1..3");

    SampledBloch out;
    out.model = model;
    out.grid = GridIndexer{model.dim, n};
    const int count = out.grid.point_count();
    out.values.reserve(static_cast<size_t>(count));
    double gap = std::numeric_limits<double>::infinity();
    for (int lin = 0; lin < count; ++lin) {
        CMatrix h = model.eval(out.grid.momentum(lin));
        const EigDecomposition eig = eig_hermitian(h);
        for (double lambda : eig.eigenvalues) gap = std::min(gap, std::abs(lambda));
        out.values.push_back(std::move(h));
    }
    out.min_gap = gap;
    return out;
}

double min_gap(const SampledBloch& sampled) { return sampled.min_gap; }

BlochModel direct_sum(const BlochModel& a, const BlochModel& b) {
    if (a.dim != b.dim) throw Error(ErrorCode::DimensionMismatch, "direct_sum needs equal dimensions");
    BlochModel m;
    m.name = a.name + "+" + b.name;
    m.dim = a.dim;
    m.bands = a.bands + b.bands;
    auto ea = a.eval;
    auto eb = b.eval;
    const int na = a.bands;
    const int nb = b.bands;
    m.eval = [ea, eb, na, nb](const MomentumPoint& k) {
        const CMatrix ha = ea(k);
        const CMatrix hb = eb(k);
        CMatrix h(na + nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) h(i, j) = ha(i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) h(na + i, na + j) = hb(i, j);
        return h;
    };
    return m;
}

BlochModel conjugated_model(const BlochModel& a) {
    BlochModel m;
    m.name = a.name + "~";
    m.dim = a.dim;
    m.bands = a.bands;
    auto ea = a.eval;
    m.eval = [ea](const MomentumPoint& k) {
        MomentumPoint mk = k;
        for (int i = 0; i < k.dim; ++i) mk.coords[static_cast<size_t>(i)] = -k.coords[static_cast<size_t>(i)];
        return ea(mk).conjugate();
    };
    return m;
}

BlochModel transposed_model(const BlochModel& a) {
    BlochModel m;
    m.name = a.name + "^T";
    m.dim = a.dim;
    m.bands = a.bands;
    auto ea = a.eval;
    m.eval = [ea](const MomentumPoint& k) { return ea(k).conjugate(); };
    return m;
}

} // namespace tenfold
