#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenfold/numkit.hpp"

namespace tenfold {

struct SampledBloch;

enum class OpKind { TRS, PHS };

/// Anti-unitary operator U·K with U unitary and K complex conjugation.
struct AntiUnitaryOp {
    CMatrix u;
    OpKind kind = OpKind::TRS;
    std::string label;

    /// Sign of U·conj(U) = ±I. Throws InconsistentSignature if neither.
    int square_sign(double tol = 1e-9) const;
    void validate(double tol = 1e-9) const;
};

/// Unitary chiral (sublattice) operator with S^2 = ±I.
struct UnitaryOp {
    CMatrix s;
    std::string label;

    int square_sign(double tol = 1e-9) const;
    void validate(double tol = 1e-9) const;
};

/// (TRS, PHS, CS) sign triple: trs/phs in {0, +1, -1}, cs in {0, 1}.
struct SymmetrySignature {
    int trs = 0;
    int phs = 0;
    int cs = 0;
    bool operator==(const SymmetrySignature&) const = default;
};

enum class AZClass { A, AIII, AI, BDI, D, DIII, AII, CII, C, CI };

const char* az_class_name(AZClass c);
std::optional<AZClass> az_class_from_name(const std::string& name);
bool is_real_class(AZClass c);

/// The unique class matching the signature; throws InconsistentSignature
/// for triples outside the tenfold table.
AZClass az_class_of(const SymmetrySignature& sig);

SymmetrySignature signature_of(AZClass c);

struct AntiUnitaryCheck {
    bool holds = false;
    int sign = 0; // sign of U conj(U), reported whether or not the symmetry holds
};

/// TRS: U conj(H(k)) U^dag == H(-k); PHS: target is -H(-k). Relative
/// Frobenius tolerance per grid point.
AntiUnitaryCheck check_antiunitary(const SampledBloch& sampled, const AntiUnitaryOp& op,
                                   double tol = 1e-9);

/// True iff S H(k) S^dag == -H(k) at every grid point.
bool check_chiral(const SampledBloch& sampled, const UnitaryOp& op, double tol = 1e-9);

struct CandidateSet {
    std::vector<AntiUnitaryOp> antiunitary; // tried as both TRS and PHS
    std::vector<UnitaryOp> chiral;
    bool empty() const { return antiunitary.empty() && chiral.empty(); }
};

/// All Pauli / Pauli-tensor unitaries for 2- or 4-band models.
CandidateSet pauli_candidate_sweep(int bands);

struct Classification {
    SymmetrySignature signature;
    AZClass az_class = AZClass::A;
    /// az_class first; a BDI result also lists D (the particle-hole-only
    /// reading of a chain whose time reversal squares to +1), same for CI -> C.
    std::vector<AZClass> consistent;
    std::optional<AntiUnitaryOp> trs_witness;
    std::optional<AntiUnitaryOp> phs_witness;
    std::optional<UnitaryOp> chiral_witness;
    /// Non-fatal oddities, e.g. non-commuting TRS and PHS witnesses.
    std::vector<std::string> warnings;
};

/// Assemble the signature from the candidates that hold and map it to a class.
/// With an empty candidate set, models with 2 or 4 bands get the built-in
/// Pauli sweep. Throws AmbiguousWitness when candidates of the same kind hold
/// with opposite squares, GaplessModel when the sampled gap is below 1e-6.
Classification classify(const SampledBloch& sampled, const CandidateSet& candidates = {},
                        double tol = 1e-9);

} // namespace tenfold
