#include "tenfold/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "tenfold/models.hpp"

namespace tenfold {

namespace {

// Sign s such that M = s*I within tol, else 0.
int plus_minus_identity(const CMatrix& m, double tol) {
    CMatrix p = m;
    CMatrix q = m;
    for (int i = 0; i < m.rows(); ++i) {
        p(i, i) -= 1.0;
        q(i, i) += 1.0;
    }
    if (p.frobenius_norm() <= tol) return 1;
    if (q.frobenius_norm() <= tol) return -1;
    return 0;
}

} // namespace

int AntiUnitaryOp::square_sign(double tol) const {
    const int s = plus_minus_identity(u * u.conjugate(), tol);
    if (s == 0)
        throw Error(ErrorCode::InconsistentSignature,
                    "anti-unitary operator '" + label + "' does not square to +1 or -1");
    return s;
}

void AntiUnitaryOp::validate(double tol) const {
    if (!u.square()) throw Error(ErrorCode::DimensionMismatch, "operator matrix must be square");
    if (unitary_distance(u) > tol)
        throw Error(ErrorCode::InconsistentSignature, "operator '" + label + "' is not unitary");
    (void)square_sign(std::max(tol, 1e-9));
}

int UnitaryOp::square_sign(double tol) const {
    const int sq = plus_minus_identity(s * s, tol);
    if (sq == 0)
        throw Error(ErrorCode::InconsistentSignature,
                    "chiral operator '" + label + "' does not square to +1 or -1");
    return sq;
}

void UnitaryOp::validate(double tol) const {
    if (!s.square()) throw Error(ErrorCode::DimensionMismatch, "operator matrix must be square");
    if (unitary_distance(s) > tol)
        throw Error(ErrorCode::InconsistentSignature, "chiral operator '" + label + "' is not unitary");
    (void)square_sign(std::max(tol, 1e-9));
}

const char* az_class_name(AZClass c) {
    switch (c) {
    case AZClass::A: return "A";
    case AZClass::AIII: return "AIII";
    case AZClass::AI: return "AI";
    case AZClass::BDI: return "BDI";
    case AZClass::D: return "D";
    case AZClass::DIII: return "DIII";
    case AZClass::AII: return "AII";
    case AZClass::CII: return "CII";
    case AZClass::C: return "C";
    case AZClass::CI: return "CI";
    }
    return "?";
}

std::optional<AZClass> az_class_from_name(const std::string& name) {
    for (AZClass c : {AZClass::A, AZClass::AIII, AZClass::AI, AZClass::BDI, AZClass::D,
                      AZClass::DIII, AZClass::AII, AZClass::CII, AZClass::C, AZClass::CI})
        if (name == az_class_name(c)) return c;
    return std::nullopt;
}

bool is_real_class(AZClass c) { return c != AZClass::A && c != AZClass::AIII; }

AZClass az_class_of(const SymmetrySignature& sig) {
    const SymmetrySignature s = sig;
    if (s == SymmetrySignature{0, 0, 0}) return AZClass::A;
    if (s == SymmetrySignature{0, 0, 1}) return AZClass::AIII;
    if (s == SymmetrySignature{+1, 0, 0}) return AZClass::AI;
    if (s == SymmetrySignature{+1, +1, 1}) return AZClass::BDI;
    if (s == SymmetrySignature{0, +1, 0}) return AZClass::D;
    if (s == SymmetrySignature{-1, +1, 1}) return AZClass::DIII;
    if (s == SymmetrySignature{-1, 0, 0}) return AZClass::AII;
    if (s == SymmetrySignature{-1, -1, 1}) return AZClass::CII;
    if (s == SymmetrySignature{0, -1, 0}) return AZClass::C;
    if (s == SymmetrySignature{+1, -1, 1}) return AZClass::CI;
    throw Error(ErrorCode::InconsistentSignature, "signature does not match any tenfold class");
}

SymmetrySignature signature_of(AZClass c) {
    switch (c) {
    case AZClass::A: return {0, 0, 0};
    case AZClass::AIII: return {0, 0, 1};
    case AZClass::AI: return {+1, 0, 0};
    case AZClass::BDI: return {+1, +1, 1};
    case AZClass::D: return {0, +1, 0};
    case AZClass::DIII: return {-1, +1, 1};
    case AZClass::AII: return {-1, 0, 0};
    case AZClass::CII: return {-1, -1, 1};
    case AZClass::C: return {0, -1, 0};
    case AZClass::CI: return {+1, -1, 1};
    }
    throw Error(ErrorCode::InconsistentSignature, "bad class");
}

AntiUnitaryCheck check_antiunitary(const SampledBloch& sampled, const AntiUnitaryOp& op, double tol) {
    if (op.u.rows() != sampled.bands())
        throw Error(ErrorCode::DimensionMismatch, "operator size does not match band count");
    AntiUnitaryCheck out;
    out.sign = op.square_sign();
    const CMatrix udag = op.u.adjoint();
    const double target_sign = op.kind == OpKind::TRS ? 1.0 : -1.0;
    out.holds = true;
    const int count = sampled.grid.point_count();
    for (int lin = 0; lin < count; ++lin) {
        const CMatrix& h = sampled.at(lin);
        const CMatrix& href = sampled.at(sampled.grid.reflect(lin));
        const CMatrix lhs = op.u * h.conjugate() * udag;
        const CMatrix diff = lhs - target_sign * href;
        if (diff.frobenius_norm() > tol * std::max(h.frobenius_norm(), 1e-300)) {
            out.holds = false;
            break;
        }
    }
    return out;
}

bool check_chiral(const SampledBloch& sampled, const UnitaryOp& op, double tol) {
    if (op.s.rows() != sampled.bands())
        throw Error(ErrorCode::DimensionMismatch, "operator size does not match band count");
    const CMatrix sdag = op.s.adjoint();
    const int count = sampled.grid.point_count();
    for (int lin = 0; lin < count; ++lin) {
        const CMatrix& h = sampled.at(lin);
        const CMatrix diff = op.s * h * sdag + h;
        if (diff.frobenius_norm() > tol * std::max(h.frobenius_norm(), 1e-300)) return false;
    }
    return true;
}

CandidateSet pauli_candidate_sweep(int bands) {
    CandidateSet set;
    auto add = [&](const CMatrix& u, const std::string& label) {
        set.antiunitary.push_back({u, OpKind::TRS, label + " K"});
        set.chiral.push_back({u, label});
    };
    if (bands == 2) {
        const char* names[] = {"pauli:0", "pauli:x", "pauli:y", "pauli:z"};
        for (int i = 0; i < 4; ++i) add(pauli(i), names[i]);
    } else if (bands == 4) {
        const char* names[] = {"0", "x", "y", "z"};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                add(kron(pauli(i), pauli(j)),
                    std::string("pauli:") + names[i] + "*" + names[j]);
    } else {
        throw Error(ErrorCode::NoCandidates,
                    "built-in candidate sweep covers 2- and 4-band models only");
    }
    return set;
}

Classification classify(const SampledBloch& sampled, const CandidateSet& candidates, double tol) {
    if (sampled.min_gap < 1e-6)
        throw Error(ErrorCode::GaplessModel, "model '" + sampled.model.name + "' is gapless on the grid");

    CandidateSet sweep;
    const CandidateSet* cand = &candidates;
    if (candidates.empty()) {
        sweep = pauli_candidate_sweep(sampled.bands());
        cand = &sweep;
    }

    std::vector<AntiUnitaryOp> trs_hits;
    std::vector<AntiUnitaryOp> phs_hits;
    for (const AntiUnitaryOp& op : cand->antiunitary) {
        op.validate();
        if (op.kind != OpKind::PHS) {
            AntiUnitaryOp as_trs = op;
            as_trs.kind = OpKind::TRS;
            if (check_antiunitary(sampled, as_trs, tol).holds) trs_hits.push_back(as_trs);
        }
        if (op.kind != OpKind::TRS || candidates.empty()) {
            AntiUnitaryOp as_phs = op;
            as_phs.kind = OpKind::PHS;
            if (check_antiunitary(sampled, as_phs, tol).holds) phs_hits.push_back(as_phs);
        }
    }

    auto pick = [&](std::vector<AntiUnitaryOp>& hits, const char* what) -> std::optional<AntiUnitaryOp> {
        if (hits.empty()) return std::nullopt;
        const int first_sign = hits.front().square_sign();
        for (const AntiUnitaryOp& op : hits)
            if (op.square_sign() != first_sign)
                throw Error(ErrorCode::AmbiguousWitness,
                            std::string(what) + " holds with both squares: '" + hits.front().label +
                                "' (" + (first_sign > 0 ? "+1" : "-1") + ") and '" + op.label + "' (" +
                                (op.square_sign() > 0 ? "+1" : "-1") + ")");
        return hits.front();
    };

    Classification out;
    out.trs_witness = pick(trs_hits, "TRS");
    out.phs_witness = pick(phs_hits, "PHS");

    // Chiral slot: product of the anti-unitary witnesses when both hold,
    // otherwise a direct candidate.
    if (out.trs_witness && out.phs_witness) {
        // TRS and PHS are usually commutative; surface it when they are not
        const CMatrix tc = out.trs_witness->u * out.phs_witness->u.conjugate();
        const CMatrix ct = out.phs_witness->u * out.trs_witness->u.conjugate();
        if ((tc - ct).frobenius_norm() > 2.0 * tol * std::max(1.0, tc.frobenius_norm()))
            out.warnings.push_back("TRS and PHS witnesses do not commute: '" +
                                   out.trs_witness->label + "' vs '" + out.phs_witness->label + "'");
        UnitaryOp product{out.trs_witness->u * out.phs_witness->u.conjugate(),
                          out.trs_witness->label + " * conj(" + out.phs_witness->label + ")"};
        if (!check_chiral(sampled, product, 2.0 * tol))
            throw Error(ErrorCode::InconsistentSignature,
                        "product of TRS and PHS witnesses is not a chiral symmetry");
        out.chiral_witness = product;
    } else {
        for (const UnitaryOp& op : cand->chiral) {
            op.validate();
            if (check_chiral(sampled, op, tol)) {
                out.chiral_witness = op;
                break;
            }
        }
    }

    // A chiral witness plus one anti-unitary witness fixes the other slot:
    // C = S Theta and Theta = S C.
    if (out.chiral_witness && out.trs_witness && !out.phs_witness) {
        AntiUnitaryOp derived{out.chiral_witness->s * out.trs_witness->u, OpKind::PHS,
                              out.chiral_witness->label + " * " + out.trs_witness->label};
        if (!check_antiunitary(sampled, derived, 2.0 * tol).holds)
            throw Error(ErrorCode::InconsistentSignature,
                        "chiral and TRS witnesses do not combine into a particle-hole symmetry");
        out.phs_witness = derived;
    } else if (out.chiral_witness && out.phs_witness && !out.trs_witness) {
        AntiUnitaryOp derived{out.chiral_witness->s * out.phs_witness->u, OpKind::TRS,
                              out.chiral_witness->label + " * " + out.phs_witness->label};
        if (!check_antiunitary(sampled, derived, 2.0 * tol).holds)
            throw Error(ErrorCode::InconsistentSignature,
                        "chiral and PHS witnesses do not combine into a time-reversal symmetry");
        out.trs_witness = derived;
    }

    out.signature.trs = out.trs_witness ? out.trs_witness->square_sign() : 0;
    out.signature.phs = out.phs_witness ? out.phs_witness->square_sign() : 0;
    out.signature.cs = out.chiral_witness ? 1 : 0;

    out.az_class = az_class_of(out.signature);
    out.consistent = {out.az_class};
    // A chain with an accidental even time reversal on top of particle-hole
    // symmetry is commonly filed under the particle-hole-only class as well.
    if (out.az_class == AZClass::BDI) out.consistent.push_back(AZClass::D);
    if (out.az_class == AZClass::CI) out.consistent.push_back(AZClass::C);
    return out;
}

} // namespace tenfold
