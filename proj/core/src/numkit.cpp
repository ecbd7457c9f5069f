#include "tenfold/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tenfold {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::GaplessModel: return "GaplessModel";
    case ErrorCode::InconsistentSignature: return "InconsistentSignature";
    case ErrorCode::AmbiguousWitness: return "AmbiguousWitness";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::ComplexClass: return "ComplexClass";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::SingularOverlap: return "SingularOverlap";
    case ErrorCode::NotChiral: return "NotChiral";
    case ErrorCode::OddSplit: return "OddSplit";
    case ErrorCode::NotClassD: return "NotClassD";
    case ErrorCode::NoRealityConstraint: return "NoRealityConstraint";
    case ErrorCode::NotTimeReversal: return "NotTimeReversal";
    case ErrorCode::OddOccupation: return "OddOccupation";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::InconsistentOccupation: return "InconsistentOccupation";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::BadModelFile: return "BadModelFile";
    }
    return "UnknownError";
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMatrix CMatrix::conjugate() const {
    CMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
    return std::sqrt(s);
}

bool CMatrix::all_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scale) {
    for (cplx& z : a_) z *= scale;
    return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    CMatrix m(lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i)
        for (int k = 0; k < lhs.cols_; ++k) {
            const cplx f = lhs(i, k);
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < rhs.cols_; ++j) m(i, j) += f * rhs(k, j);
        }
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    m(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return m;
}

CMatrix pauli(int i) {
    CMatrix m(2);
    switch (i) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw Error(ErrorCode::UsageError, "pauli index must be 0..3");
    }
    return m;
}

CMatrix pauli_string(std::string_view spec) {
    CMatrix out;
    bool first = true;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t next = spec.find('*', pos);
        std::string_view tok = spec.substr(pos, next == std::string_view::npos ? next : next - pos);
        int idx;
        if (tok == "0") idx = 0;
        else if (tok == "x" || tok == "1") idx = 1;
        else if (tok == "y" || tok == "2") idx = 2;
        else if (tok == "z" || tok == "3") idx = 3;
        else throw Error(ErrorCode::BadModelFile, "bad pauli factor '" + std::string(tok) + "'");
        out = first ? pauli(idx) : kron(out, pauli(idx));
        first = false;
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (first) throw Error(ErrorCode::BadModelFile, "empty pauli string");
    return out;
}

namespace {

double offdiagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigDecomposition eig_hermitian(const CMatrix& a, const JacobiOptions& options) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "eig_hermitian needs a square matrix");
    if (!a.all_finite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
    const int n = a.rows();
    const double scale = a.frobenius_norm();
    if (a.hermiticity_defect() > options.hermitian_rtol * std::max(scale, 1e-300) && scale > 0.0)
        throw Error(ErrorCode::NotHermitian, "hermiticity defect above tolerance");

    CMatrix h = a;
    CMatrix v = CMatrix::identity(n);
    const double stop = 1e-15 * std::max(scale, 1e-300);

    int sweep = 0;
    while (offdiagonal_norm(h) > stop) {
        if (sweep++ >= options.max_sweeps)
            throw Error(ErrorCode::NoConvergence, "jacobi sweep cap exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = h(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                // Complex rotation zeroing the (p,q) element of the Hermitian block.
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double absq = std::abs(apq);
                const cplx phase = apq / absq;
                const double tau = (aqq - app) / (2.0 * absq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;

                for (int k = 0; k < n; ++k) {
                    const cplx hkp = h(k, p);
                    const cplx hkq = h(k, q);
                    h(k, p) = c * hkp - std::conj(s) * hkq;
                    h(k, q) = s * hkp + c * hkq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx hpk = h(p, k);
                    const cplx hqk = h(q, k);
                    h(p, k) = c * hpk - s * hqk;
                    h(q, k) = std::conj(s) * hpk + c * hqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = h(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

cplx det(CMatrix a) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "det needs a square matrix");
    const int n = a.rows();
    cplx d = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return d;
}

namespace {

// Expansion along the first remaining row; rows/cols are tracked by index list.
double pfaffian_recursive(const std::vector<double>& m, int n, std::vector<int>& live) {
    const int k = static_cast<int>(live.size());
    if (k == 0) return 1.0;
    const int r0 = live[0];
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j < k; ++j, sign = -sign) {
        const double entry = m[static_cast<size_t>(r0) * n + live[j]];
        if (entry != 0.0) {
            std::vector<int> rest;
            rest.reserve(k - 2);
            for (int t = 1; t < k; ++t)
                if (t != j) rest.push_back(live[t]);
            sum += sign * entry * pfaffian_recursive(m, n, rest);
        }
    }
    return sum;
}

} // namespace

double pfaffian(const CMatrix& a, double tol) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "pfaffian needs a square matrix");
    const int n = a.rows();
    if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "pfaffian needs even dimension");
    if (n > 8) throw Error(ErrorCode::DimensionMismatch, "pfaffian supports dimension <= 8");

    double defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            defect = std::max(defect, std::abs(a(i, j).imag()));
            defect = std::max(defect, std::abs(a(i, j).real() + a(j, i).real()));
        }
    if (!(defect <= tol)) // also rejects NaN entries
        throw Error(ErrorCode::NotAntisymmetric, "matrix is not real antisymmetric within tolerance");

    std::vector<double> m(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = a(i, j).real();

    std::vector<int> live(n);
    std::iota(live.begin(), live.end(), 0);
    return pfaffian_recursive(m, n, live);
}

double unitary_distance(const CMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "unitary_distance needs a square matrix");
    CMatrix g = a.adjoint() * a;
    for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return g.frobenius_norm();
}

} // namespace tenfold
