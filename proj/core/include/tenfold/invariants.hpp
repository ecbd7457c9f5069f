#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenfold/ktable.hpp"
#include "tenfold/models.hpp"
#include "tenfold/numkit.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold {

/// Spectrally flattened grid Q(k) = sign(H(k) - E_F) with Q^2 = I.
struct FlattenedBloch {
    GridIndexer grid;
    int bands = 0;
    int n_occ = 0;
    std::vector<CMatrix> q;

    const CMatrix& at(int lin) const { return q[static_cast<size_t>(lin)]; }
};

/// Off-diagonal unitary block q(k) of a flattened chiral Hamiltonian.
struct ChiralBlock {
    GridIndexer grid;
    std::vector<CMatrix> q;

    const CMatrix& at(int lin) const { return q[static_cast<size_t>(lin)]; }
};

enum class InvariantKind { Integer, Mod2, Trivial };

struct InvariantValue {
    InvariantKind kind = InvariantKind::Trivial;
    long value = 0;
    double raw = 0.0;      // pre-rounding numeric
    int grid_size = 0;
    double residual = 0.0; // |raw - rounded|
};

const char* invariant_kind_name(InvariantKind kind);

InvariantValue flatten_and_round(double raw, int grid_size, double residual_cap = 0.05);

FlattenedBloch flatten(const SampledBloch& sampled, double fermi = 0.0);

/// Rotate into the eigenbasis of S (phase-normalized so S^2 = I) and read off
/// the off-diagonal unitary block.
ChiralBlock chiral_block(const FlattenedBloch& flat, const UnitaryOp& s_op);

/// Per-point occupied eigenframes of Q (bands x n_occ matrices).
std::vector<CMatrix> occupied_frames(const FlattenedBloch& flat);

/// Plaquette link-variable Chern number from explicit occupied frames.
InvariantValue chern_from_frames(const std::vector<CMatrix>& frames, const GridIndexer& grid);

/// Lattice field-strength first Chern number of the occupied projector, 2d.
InvariantValue chern_number(const FlattenedBloch& flat);

/// Total unwrapped phase of det q around the 1d Brillouin zone over 2pi.
InvariantValue winding_1d(const ChiralBlock& block);

/// (1/24pi^2) integral of tr[(q^dag dq)^3] over the 3-torus, by central
/// differences and the trapezoid rule.
InvariantValue winding_3d(const ChiralBlock& block);

/// Evidence that the reality constraint w(-k) = ±w^T(k) held, making an
/// integer index Z2-valued.
struct RealityConstraint {
    bool confirmed = false;
    std::string note;
};

InvariantValue mod2_reduce(const InvariantValue& v, const RealityConstraint& compat);

/// TRIM Pfaffian Z2 invariant for 1d class D: parity of
/// sign[Pf(iH(0)) Pf(iH(pi))] in the Majorana basis fixed by C.
InvariantValue class_d_1d_z2(const SampledBloch& sampled, const AntiUnitaryOp& phs);

/// Wannier-center-flow parity over half the Brillouin zone (2d AII / DIII).
InvariantValue z2_wannier_2d(const FlattenedBloch& flat, const AntiUnitaryOp& trs);

struct Witnesses {
    std::optional<AntiUnitaryOp> trs;
    std::optional<AntiUnitaryOp> phs;
    std::optional<UnitaryOp> chiral;

    static Witnesses from(const Classification& c);
};

/// Route (class, dim) to the matching invariant via the index-tag table.
InvariantValue dispatch(AZClass az_class, const SampledBloch& sampled, const Witnesses& witnesses);

} // namespace tenfold
