#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tenfold/numkit.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold {

/// Reduce a momentum coordinate into [-pi, pi).
double reduce_to_bz(double k);

/// Point on the d-torus, d <= 3; unused coordinates stay zero.
struct MomentumPoint {
    int dim = 0;
    std::array<double, 3> coords{};

    double operator[](int axis) const { return coords[static_cast<size_t>(axis)]; }
    static MomentumPoint of(std::initializer_list<double> ks);
};

struct ModelParams {
    std::map<std::string, double> values;

    double get(const std::string& name) const;
    double get_or(const std::string& name, double fallback) const;
    bool has(const std::string& name) const { return values.count(name) != 0; }
    void set(const std::string& name, double v) { values[name] = v; }
};

/// Closed-form Bloch Hamiltonian: a pure, 2pi-periodic map from momentum
/// to a Hermitian bands x bands matrix.
struct BlochModel {
    std::string name;
    int dim = 0;
    int bands = 0;
    ModelParams params;
    std::function<CMatrix(const MomentumPoint&)> eval;
    /// Symmetry operators the model is shipped with; empty means the
    /// classifier falls back to the built-in Pauli sweep.
    CandidateSet default_candidates;

    CMatrix operator()(const MomentumPoint& k) const { return eval(k); }
    /// Spot-check hermiticity and 2pi periodicity on a few momenta.
    void validate() const;
};

/// Uniform momentum grid with k_n = 2pi(n - N/2)/N, so that k -> -k maps
/// grid indices to grid indices exactly and 0, -pi are grid points.
struct GridIndexer {
    int dim = 0;
    int n = 0;

    int point_count() const;
    int linear(const std::array<int, 3>& idx) const;
    std::array<int, 3> unpack(int lin) const;
    /// Index of -k.
    int reflect(int lin) const;
    /// Periodic neighbor along one axis.
    int shift(int lin, int axis, int delta) const;
    double momentum_component(int axis_index) const;
    MomentumPoint momentum(int lin) const;
};

struct SampledBloch {
    BlochModel model;
    GridIndexer grid;
    std::vector<CMatrix> values;
    double min_gap = 0.0;

    int grid_size() const { return grid.n; }
    int dim() const { return grid.dim; }
    int bands() const { return model.bands; }
    const CMatrix& at(int lin) const { return values[static_cast<size_t>(lin)]; }
};

/// Model zoo. Names: kitaev_chain(mu,t,delta), chiral_p_wave(mu,t,pd),
/// d_id_wave(mu,t,dx2y2,dxy), diii_superposition(mu,t,pd),
/// bhz_qsh(m[,coupling]), dirac_3d_chiral(m).
BlochModel make_model(const std::string& name, const ModelParams& params);

const std::vector<std::string>& builtin_model_names();

/// Evaluate the model on the N^d grid (N even, >= 4) and record the
/// smallest |eigenvalue| seen.
SampledBloch sample_grid(const BlochModel& model, int n);

double min_gap(const SampledBloch& sampled);

/// Block-diagonal combination of two models of equal dimension.
BlochModel direct_sum(const BlochModel& a, const BlochModel& b);

/// Model with H'(k) = conj(H(-k)): negates the Chern number and the 3d
/// winding, and preserves the 1d winding (conjugation and the 1d k-flip
/// each negate it).
BlochModel conjugated_model(const BlochModel& a);

/// Model with H'(k) = conj(H(k)) = H^T(k): negates the Chern number and the
/// 1d winding, and preserves the 3d winding.
BlochModel transposed_model(const BlochModel& a);

} // namespace tenfold
