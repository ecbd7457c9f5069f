#include "tenfold/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tenfold {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

double principal(double phase) {
    while (phase > kPi) phase -= kTwoPi;
    while (phase <= -kPi) phase += kTwoPi;
    return phase;
}

} // namespace

const char* invariant_kind_name(InvariantKind kind) {
    switch (kind) {
    case InvariantKind::Integer: return "integer";
    case InvariantKind::Mod2: return "mod2";
    case InvariantKind::Trivial: return "trivial";
    }
    return "?";
}

InvariantValue flatten_and_round(double raw, int grid_size, double residual_cap) {
    InvariantValue v;
    v.kind = InvariantKind::Integer;
    v.raw = raw;
    v.grid_size = grid_size;
    v.value = std::lround(raw);
    v.residual = std::abs(raw - static_cast<double>(v.value));
    if (v.residual >= residual_cap)
        throw Error(ErrorCode::NonConvergent, "residual " + std::to_string(v.residual) +
                                                  " above rounding threshold");
    return v;
}

FlattenedBloch flatten(const SampledBloch& sampled, double fermi) {
    FlattenedBloch out;
    out.grid = sampled.grid;
    out.bands = sampled.bands();
    out.q.reserve(sampled.values.size());
    out.n_occ = -1;
    for (const CMatrix& h : sampled.values) {
        const EigDecomposition eig = eig_hermitian(h);
        int occ = 0;
        for (double lambda : eig.eigenvalues) {
            if (std::abs(lambda - fermi) < 1e-6)
                throw Error(ErrorCode::GaplessModel, "band touches the Fermi level on the grid");
            if (lambda < fermi) ++occ;
        }
        if (out.n_occ < 0) out.n_occ = occ;
        else if (out.n_occ != occ)
            throw Error(ErrorCode::InconsistentOccupation,
                        "occupied count changes across the grid; gap crosses the Fermi level");
        const int n = out.bands;
        CMatrix q(n);
        const CMatrix& v = eig.eigenvectors;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx sum = 0.0;
                for (int a = 0; a < n; ++a) {
                    const double sign = eig.eigenvalues[static_cast<size_t>(a)] < fermi ? -1.0 : 1.0;
                    sum += v(i, a) * sign * std::conj(v(j, a));
                }
                q(i, j) = sum;
            }
        out.q.push_back(std::move(q));
    }
    return out;
}

ChiralBlock chiral_block(const FlattenedBloch& flat, const UnitaryOp& s_op) {
    s_op.validate();
    if (s_op.s.rows() != flat.bands)
        throw Error(ErrorCode::DimensionMismatch, "chiral operator size does not match band count");

    // Normalize so the operator is Hermitian with eigenvalues +-1.
    CMatrix s = s_op.s;
    if (s_op.square_sign() < 0) s *= cplx(0.0, 1.0);

    const int n = flat.bands;
    const EigDecomposition eig = eig_hermitian(s);
    int minus = 0;
    for (double lambda : eig.eigenvalues)
        if (lambda < 0.0) ++minus;
    if (minus * 2 != n)
        throw Error(ErrorCode::OddSplit, "chiral eigenspaces differ in dimension");
    const int half = n / 2;

    // Columns: + eigenvectors first, then - eigenvectors.
    CMatrix basis(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis(i, j) = eig.eigenvectors(i, (j + half) % n);

    ChiralBlock out;
    out.grid = flat.grid;
    out.q.reserve(flat.q.size());
    const CMatrix bdag = basis.adjoint();
    for (const CMatrix& q : flat.q) {
        const CMatrix anti = s * q + q * s;
        if (anti.frobenius_norm() > 1e-8 * std::max(1.0, q.frobenius_norm()))
            throw Error(ErrorCode::NotChiral, "operator does not anticommute with the flattened grid");
        const CMatrix rotated = bdag * q * basis;
        CMatrix block(half);
        for (int i = 0; i < half; ++i)
            for (int j = 0; j < half; ++j) block(i, j) = rotated(i, half + j);
        if (unitary_distance(block) > 1e-8)
            throw Error(ErrorCode::NotChiral, "off-diagonal block is not unitary");
        out.q.push_back(std::move(block));
    }
    return out;
}

std::vector<CMatrix> occupied_frames(const FlattenedBloch& flat) {
    std::vector<CMatrix> frames;
    frames.reserve(flat.q.size());
    for (const CMatrix& q : flat.q) {
        const EigDecomposition eig = eig_hermitian(q);
        CMatrix f(flat.bands, flat.n_occ);
        for (int i = 0; i < flat.bands; ++i)
            for (int j = 0; j < flat.n_occ; ++j) f(i, j) = eig.eigenvectors(i, j);
        frames.push_back(std::move(f));
    }
    return frames;
}

namespace {

cplx frame_overlap_det(const CMatrix& a, const CMatrix& b) {
    const CMatrix m = a.adjoint() * b;
    return det(m);
}

} // namespace

InvariantValue chern_from_frames(const std::vector<CMatrix>& frames, const GridIndexer& grid) {
    if (grid.dim != 2) throw Error(ErrorCode::DimensionMismatch, "chern number needs a 2d grid");
    const int count = grid.point_count();
    if (static_cast<int>(frames.size()) != count)
        throw Error(ErrorCode::DimensionMismatch, "frame count does not match the grid");
    double total = 0.0;
    for (int lin = 0; lin < count; ++lin) {
        const int right = grid.shift(lin, 0, 1);
        const int up = grid.shift(lin, 1, 1);
        const int diag = grid.shift(right, 1, 1);
        const cplx u1 = frame_overlap_det(frames[static_cast<size_t>(lin)], frames[static_cast<size_t>(right)]);
        const cplx u2 = frame_overlap_det(frames[static_cast<size_t>(right)], frames[static_cast<size_t>(diag)]);
        const cplx u3 = frame_overlap_det(frames[static_cast<size_t>(up)], frames[static_cast<size_t>(diag)]);
        const cplx u4 = frame_overlap_det(frames[static_cast<size_t>(lin)], frames[static_cast<size_t>(up)]);
        for (const cplx& u : {u1, u2, u3, u4})
            if (std::abs(u) < 1e-6)
                throw Error(ErrorCode::SingularOverlap, "link overlap nearly singular; grid too coarse");
        // counterclockwise plaquette in (kx, ky)
        total += std::arg(u1 * u2 * std::conj(u3) * std::conj(u4));
    }
    return flatten_and_round(total / kTwoPi, grid.n);
}

InvariantValue chern_number(const FlattenedBloch& flat) {
    return chern_from_frames(occupied_frames(flat), flat.grid);
}

InvariantValue winding_1d(const ChiralBlock& block) {
    if (block.grid.dim != 1) throw Error(ErrorCode::DimensionMismatch, "winding_1d needs a 1d grid");
    const int n = block.grid.n;
    double total = 0.0;
    double prev = std::arg(det(block.at(0)));
    for (int i = 1; i <= n; ++i) {
        const double cur = std::arg(det(block.at(i % n)));
        const double step = principal(cur - prev);
        if (std::abs(step) > kPi / 2.0)
            throw Error(ErrorCode::NonConvergent, "det phase step above pi/2; grid too coarse");
        total += step;
        prev = cur;
    }
    return flatten_and_round(total / kTwoPi, n);
}

InvariantValue winding_3d(const ChiralBlock& block) {
    if (block.grid.dim != 3) throw Error(ErrorCode::DimensionMismatch, "winding_3d needs a 3d grid");
    const int n = block.grid.n;
    const int count = block.grid.point_count();
    const double h = kTwoPi / n;

    for (int lin = 0; lin < count; ++lin)
        for (int axis = 0; axis < 3; ++axis) {
            const CMatrix diff = block.at(block.grid.shift(lin, axis, 1)) - block.at(lin);
            if (diff.frobenius_norm() >= 0.5)
                throw Error(ErrorCode::NotSmooth, "neighboring chiral blocks differ too much");
        }

    double total = 0.0;
    for (int lin = 0; lin < count; ++lin) {
        const CMatrix qdag = block.at(lin).adjoint();
        CMatrix a[3];
        for (int axis = 0; axis < 3; ++axis) {
            const CMatrix& fwd = block.at(block.grid.shift(lin, axis, 1));
            const CMatrix& bwd = block.at(block.grid.shift(lin, axis, -1));
            a[axis] = qdag * ((fwd - bwd) * cplx(1.0 / (2.0 * h)));
        }
        // eps^{ijk} tr(A_i A_j A_k) = 3 tr(A_x [A_y, A_z]), real for anti-Hermitian A
        const cplx t = (a[0] * (a[1] * a[2] - a[2] * a[1])).trace();
        total += 3.0 * t.real();
    }
    const double raw = total * h * h * h / (24.0 * kPi * kPi);
    return flatten_and_round(raw, n);
}

InvariantValue mod2_reduce(const InvariantValue& v, const RealityConstraint& compat) {
    if (v.kind != InvariantKind::Integer)
        throw Error(ErrorCode::UsageError, "mod2_reduce expects an integer invariant");
    if (!compat.confirmed)
        throw Error(ErrorCode::NoRealityConstraint,
                    "no reality constraint evidence; refusing to truncate an unconstrained integer");
    InvariantValue out = v;
    out.kind = InvariantKind::Mod2;
    out.value = ((v.value % 2) + 2) % 2;
    return out;
}

namespace {

// Real symmetric Jacobi, returning a real orthogonal eigenbasis.
void eig_real_symmetric(std::vector<double>& a, std::vector<double>& o, int n) {
    o.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) o[static_cast<size_t>(i) * n + i] = 1.0;
    auto at = [&](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<size_t>(i) * n + j];
    };
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * at(a, p, q) * at(a, p, q);
        if (std::sqrt(off) < 1e-14) return;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p);
                    const double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p, k);
                    const double aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double okp = at(o, k, p);
                    const double okq = at(o, k, q);
                    at(o, k, p) = c * okp - s * okq;
                    at(o, k, q) = s * okp + c * okq;
                }
            }
    }
    throw Error(ErrorCode::NoConvergence, "real jacobi did not converge");
}

// Takagi factorization U = W W^T of a symmetric unitary, via a simultaneous
// real-orthogonal diagonalization of Re U and Im U.
CMatrix takagi_symmetric_unitary(const CMatrix& u) {
    const int n = u.rows();
    if ((u - u.transpose()).frobenius_norm() > 1e-8)
        throw Error(ErrorCode::NotClassD, "particle-hole unitary is not symmetric");

    std::vector<double> re(static_cast<size_t>(n) * n);
    std::vector<double> im(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            re[static_cast<size_t>(i) * n + j] = u(i, j).real();
            im[static_cast<size_t>(i) * n + j] = u(i, j).imag();
        }

    std::vector<double> a = re;
    std::vector<double> o;
    eig_real_symmetric(a, o, n);

    // Group equal eigenvalues of Re U and diagonalize Im U inside each group.
    std::vector<std::pair<double, int>> eigs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<size_t>(i)] = {a[static_cast<size_t>(i) * n + i], i};
    std::sort(eigs.begin(), eigs.end());

    std::vector<double> basis(static_cast<size_t>(n) * n, 0.0); // columns: sorted O
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row)
            basis[static_cast<size_t>(row) * n + col] = o[static_cast<size_t>(row) * n + eigs[static_cast<size_t>(col)].second];

    std::vector<double> theta(static_cast<size_t>(n), 0.0);
    int start = 0;
    while (start < n) {
        int stop = start;
        while (stop < n && std::abs(eigs[static_cast<size_t>(stop)].first - eigs[static_cast<size_t>(start)].first) < 1e-8)
            ++stop;
        const int m = stop - start;
        // restriction of Im U to the group
        std::vector<double> sub(static_cast<size_t>(m) * m, 0.0);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                double sum = 0.0;
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        sum += basis[static_cast<size_t>(r) * n + start + p] * im[static_cast<size_t>(r) * n + c] *
                               basis[static_cast<size_t>(c) * n + start + q];
                sub[static_cast<size_t>(p) * m + q] = sum;
            }
        std::vector<double> rot;
        eig_real_symmetric(sub, rot, m);
        std::vector<double> updated(static_cast<size_t>(n) * m, 0.0);
        for (int r = 0; r < n; ++r)
            for (int q = 0; q < m; ++q) {
                double sum = 0.0;
                for (int p = 0; p < m; ++p)
                    sum += basis[static_cast<size_t>(r) * n + start + p] * rot[static_cast<size_t>(p) * m + q];
                updated[static_cast<size_t>(r) * m + q] = sum;
            }
        for (int r = 0; r < n; ++r)
            for (int q = 0; q < m; ++q)
                basis[static_cast<size_t>(r) * n + start + q] = updated[static_cast<size_t>(r) * m + q];
        for (int q = 0; q < m; ++q)
            theta[static_cast<size_t>(start + q)] =
                std::atan2(sub[static_cast<size_t>(q) * m + q], eigs[static_cast<size_t>(start)].first);
        start = stop;
    }

    // W = O diag(e^{i theta/2}) O^T
    CMatrix w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += basis[static_cast<size_t>(i) * n + k] *
                       std::exp(cplx(0.0, theta[static_cast<size_t>(k)] / 2.0)) *
                       basis[static_cast<size_t>(j) * n + k];
            w(i, j) = sum;
        }
    if ((w * w.transpose() - u).frobenius_norm() > 1e-8)
        throw Error(ErrorCode::NotClassD, "takagi factorization failed");
    return w;
}

} // namespace

InvariantValue class_d_1d_z2(const SampledBloch& sampled, const AntiUnitaryOp& phs) {
    if (sampled.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "class_d_1d_z2 needs a 1d model");
    if (sampled.min_gap < 1e-6) throw Error(ErrorCode::GaplessModel, "gap closes on the grid");
    AntiUnitaryOp op = phs;
    op.kind = OpKind::PHS;
    const AntiUnitaryCheck check = check_antiunitary(sampled, op, 1e-8);
    if (!check.holds || check.sign != +1)
        throw Error(ErrorCode::NotClassD, "particle-hole symmetry with square +1 does not hold");

    const CMatrix w = takagi_symmetric_unitary(op.u);
    const CMatrix wdag = w.adjoint();
    const int n = sampled.grid.n;

    double product = 1.0;
    for (int idx : {n / 2, 0}) { // k = 0 and k = -pi (= pi)
        const CMatrix majorana = wdag * sampled.at(idx) * w;
        const CMatrix antisym = cplx(0.0, -1.0) * majorana;
        product *= pfaffian(antisym, 1e-7 * std::max(1.0, antisym.frobenius_norm()));
    }

    InvariantValue out;
    out.kind = InvariantKind::Mod2;
    out.value = product < 0.0 ? 1 : 0;
    out.raw = product;
    out.grid_size = n;
    out.residual = 0.0;
    return out;
}

namespace {

// Eigenphases of a (nearly) unitary matrix: polar-project, then jointly
// diagonalize the commuting Hermitian pair (W + W^dag)/2, (W - W^dag)/2i.
std::vector<double> unitary_eigenphases(const CMatrix& w) {
    const int n = w.rows();
    // polar unitarization
    const EigDecomposition gram = eig_hermitian(w.adjoint() * w);
    CMatrix inv_sqrt(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (int k = 0; k < n; ++k) {
                const double s = gram.eigenvalues[static_cast<size_t>(k)];
                if (s < 1e-12) throw Error(ErrorCode::SingularOverlap, "wilson loop nearly singular");
                sum += gram.eigenvectors(i, k) * (1.0 / std::sqrt(s)) * std::conj(gram.eigenvectors(j, k));
            }
            inv_sqrt(i, j) = sum;
        }
    const CMatrix u = w * inv_sqrt;

    const CMatrix a = 0.5 * (u + u.adjoint());
    const CMatrix b = cplx(0.0, -0.5) * (u - u.adjoint());
    const EigDecomposition ea = eig_hermitian(a);

    std::vector<double> phases;
    phases.reserve(static_cast<size_t>(n));
    int start = 0;
    while (start < n) {
        int stop = start;
        while (stop < n && std::abs(ea.eigenvalues[static_cast<size_t>(stop)] -
                                    ea.eigenvalues[static_cast<size_t>(start)]) < 1e-8)
            ++stop;
        const int m = stop - start;
        CMatrix sub(m);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                cplx sum = 0.0;
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        sum += std::conj(ea.eigenvectors(r, start + p)) * b(r, c) * ea.eigenvectors(c, start + q);
                sub(p, q) = sum;
            }
        const EigDecomposition eb = eig_hermitian(sub);
        for (int q = 0; q < m; ++q)
            phases.push_back(std::atan2(eb.eigenvalues[static_cast<size_t>(q)],
                                        ea.eigenvalues[static_cast<size_t>(start)]));
        start = stop;
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

// Wannier phases for one kx column: eigenphases of the Wilson loop along ky.
std::vector<double> wannier_phases(const std::vector<CMatrix>& frames, const GridIndexer& grid,
                                   int ix, int stride) {
    const int n = grid.n;
    CMatrix loop;
    bool first = true;
    for (int j = 0; j < n; j += stride) {
        const int from = grid.linear({ix, j, 0});
        const int to = grid.linear({ix, (j + stride) % n, 0});
        const CMatrix overlap = frames[static_cast<size_t>(from)].adjoint() * frames[static_cast<size_t>(to)];
        loop = first ? overlap : loop * overlap;
        first = false;
    }
    return unitary_eigenphases(loop);
}

double circle_gap_midpoint(const std::vector<double>& phases) {
    // midpoint of the largest gap between consecutive phases on the circle
    std::vector<double> sorted = phases;
    std::sort(sorted.begin(), sorted.end());
    double best_gap = -1.0;
    double mid = 0.0;
    const size_t m = sorted.size();
    for (size_t i = 0; i < m; ++i) {
        const double lo = sorted[i];
        const double hi = (i + 1 < m) ? sorted[i + 1] : sorted[0] + kTwoPi;
        if (hi - lo > best_gap) {
            best_gap = hi - lo;
            mid = principal(0.5 * (lo + hi));
        }
    }
    return mid;
}

// Count Wannier-band crossings along kx in [0, pi] by tracking the midpoint
// of the largest spectral gap: every phase the moving gap center sweeps over
// is one crossing. The center sits in a gap at each column, so the count has
// no tangency ambiguity at the Kramers-degenerate endpoints.
int count_wannier_crossings(const std::vector<CMatrix>& frames, const GridIndexer& grid,
                            int stride) {
    const int n = grid.n;
    std::vector<int> columns;
    for (int ix = n / 2; ix <= n; ix += stride) columns.push_back(ix % n);

    double gap_prev = circle_gap_midpoint(wannier_phases(frames, grid, columns[0], stride));
    int crossings = 0;
    for (size_t c = 1; c < columns.size(); ++c) {
        const std::vector<double> phases = wannier_phases(frames, grid, columns[c], stride);
        const double gap_cur = circle_gap_midpoint(phases);
        const double sweep = principal(gap_cur - gap_prev);
        for (double p : phases) {
            const double rel = principal(p - gap_prev);
            if (sweep > 0 ? (rel > 0 && rel <= sweep) : (rel < 0 && rel >= sweep)) ++crossings;
        }
        gap_prev = gap_cur;
    }
    return crossings;
}

} // namespace

InvariantValue z2_wannier_2d(const FlattenedBloch& flat, const AntiUnitaryOp& trs) {
    if (flat.grid.dim != 2) throw Error(ErrorCode::DimensionMismatch, "z2_wannier_2d needs a 2d model");
    if (flat.n_occ % 2 != 0)
        throw Error(ErrorCode::OddOccupation, "odd occupied count; no Kramers pairing");
    AntiUnitaryOp op = trs;
    op.kind = OpKind::TRS;
    op.validate();
    if (op.u.rows() != flat.bands)
        throw Error(ErrorCode::DimensionMismatch, "operator size does not match band count");
    if (op.square_sign() != -1)
        throw Error(ErrorCode::NotTimeReversal, "wannier flow needs Kramers pairs (Theta^2 = -1)");
    // The flattened grid inherits the symmetry; verify on Q directly.
    const CMatrix udag = op.u.adjoint();
    const int count = flat.grid.point_count();
    for (int lin = 0; lin < count; ++lin) {
        const CMatrix lhs = op.u * flat.at(lin).conjugate() * udag;
        const CMatrix diff = lhs - flat.at(flat.grid.reflect(lin));
        if (diff.frobenius_norm() > 1e-8 * std::max(1.0, flat.at(lin).frobenius_norm()))
            throw Error(ErrorCode::NotTimeReversal, "time reversal does not hold on the flattened grid");
    }

    const std::vector<CMatrix> frames = occupied_frames(flat);
    const int fine = count_wannier_crossings(frames, flat.grid, 1);
    if (flat.grid.n % 4 == 0) {
        const int coarse = count_wannier_crossings(frames, flat.grid, 2);
        if (fine % 2 != coarse % 2)
            throw Error(ErrorCode::NonConvergent, "wannier crossing parity unstable under grid refinement");
    }

    InvariantValue out;
    out.kind = InvariantKind::Mod2;
    out.value = fine % 2;
    out.raw = static_cast<double>(fine);
    out.grid_size = flat.grid.n;
    out.residual = 0.0;
    return out;
}

Witnesses Witnesses::from(const Classification& c) {
    Witnesses w;
    w.trs = c.trs_witness;
    w.phs = c.phs_witness;
    w.chiral = c.chiral_witness;
    return w;
}

namespace {

const UnitaryOp& require_chiral(const Witnesses& w) {
    if (!w.chiral) throw Error(ErrorCode::NotChiral, "no chiral witness available");
    return *w.chiral;
}

RealityConstraint constraint_from(AZClass c, const Witnesses& w) {
    RealityConstraint out;
    out.confirmed = w.trs.has_value() || w.phs.has_value();
    out.note = std::string("anti-unitary witnesses of class ") + az_class_name(c);
    return out;
}

} // namespace

InvariantValue dispatch(AZClass az_class, const SampledBloch& sampled, const Witnesses& witnesses) {
    if (!is_real_class(az_class))
        throw Error(ErrorCode::ComplexClass, "dispatch covers the eight real classes");
    const int d = sampled.dim();
    const ClassTablesEntry meta = class_metadata(az_class, d);

    switch (meta.index_tag) {
    case IndexTag::None: {
        InvariantValue out;
        out.kind = InvariantKind::Trivial;
        out.grid_size = sampled.grid.n;
        return out;
    }
    case IndexTag::Ch1P:
        return chern_number(flatten(sampled));
    case IndexTag::Ch1W:
        return winding_1d(chiral_block(flatten(sampled), require_chiral(witnesses)));
    case IndexTag::Ch3W:
        return winding_3d(chiral_block(flatten(sampled), require_chiral(witnesses)));
    case IndexTag::Ch1WMod2: {
        if (az_class == AZClass::D) {
            if (!witnesses.phs) throw Error(ErrorCode::NotClassD, "no particle-hole witness available");
            return class_d_1d_z2(sampled, *witnesses.phs);
        }
        const InvariantValue w1 = winding_1d(chiral_block(flatten(sampled), require_chiral(witnesses)));
        return mod2_reduce(w1, constraint_from(az_class, witnesses));
    }
    case IndexTag::Ch3WMod2: {
        const InvariantValue w3 = winding_3d(chiral_block(flatten(sampled), require_chiral(witnesses)));
        return mod2_reduce(w3, constraint_from(az_class, witnesses));
    }
    case IndexTag::Ch1WMod2DimRed: {
        if (!witnesses.trs) throw Error(ErrorCode::NotTimeReversal, "no time-reversal witness available");
        return z2_wannier_2d(flatten(sampled), *witnesses.trs);
    }
    }
    throw Error(ErrorCode::UsageError, "unreachable dispatch tag");
}

} // namespace tenfold
