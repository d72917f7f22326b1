#include "qdomain/subspace.hpp"

#include "qdomain/error.hpp"
#include "qdomain/kernels.hpp"
#include "qdomain/tolerance.hpp"

#include <Eigen/SVD>
#include <Eigen/QR>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qdomain {

namespace {

void require_dims(const OperatorSubspace& a, const OperatorSubspace& b, const char* op) {
    if (a.dom_dim() != b.dom_dim() || a.cod_dim() != b.cod_dim()) {
        std::ostringstream os;
        os << op << ": dimension mismatch (" << a.cod_dim() << "x" << a.dom_dim() << " vs "
           << b.cod_dim() << "x" << b.dom_dim() << ")";
        throw Error(ErrorKind::Dimension, os.str());
    }
}

// Multiply by a unit phase so the first non-negligible entry is real positive.
void fix_phase(Eigen::Ref<Vector> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v(i));
        if (m > 1e-8) {
            v *= std::conj(v(i)) / m;
            return;
        }
    }
}

// Descending lexicographic order on (re, im) entries; entries closer than
// 1e-10 are treated as equal.
bool lex_before(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i).real() - b(i).real()) > 1e-10) return a(i).real() > b(i).real();
        if (std::abs(a(i).imag() - b(i).imag()) > 1e-10) return a(i).imag() > b(i).imag();
    }
    return false;
}

}  // namespace

OperatorSubspace::OperatorSubspace(int dom_dim, int cod_dim) : dom_(dom_dim), cod_(cod_dim), q_(dom_dim * cod_dim, 0) {
    if (dom_dim < 1 || cod_dim < 1) throw Error(ErrorKind::Dimension, "operator subspace needs positive dimensions");
}

OperatorSubspace OperatorSubspace::zero(int dom_dim, int cod_dim) { return OperatorSubspace(dom_dim, cod_dim); }

OperatorSubspace OperatorSubspace::full(int dom_dim, int cod_dim) {
    OperatorSubspace s(dom_dim, cod_dim);
    s.q_ = Matrix::Identity(dom_dim * cod_dim, dom_dim * cod_dim);
    return s;
}

OperatorSubspace OperatorSubspace::scalars(int n) {
    return span({Matrix::Identity(n, n)}, n, n);
}

OperatorSubspace OperatorSubspace::span(const std::vector<Matrix>& spanning, int dom_dim, int cod_dim) {
    return canonicalize(spanning, dom_dim, cod_dim);
}

OperatorSubspace OperatorSubspace::span_of(const Matrix& m) {
    return canonicalize({m}, static_cast<int>(m.cols()), static_cast<int>(m.rows()));
}

OperatorSubspace OperatorSubspace::from_canonical(int dom_dim, int cod_dim, Matrix q) {
    OperatorSubspace s(dom_dim, cod_dim);
    if (q.rows() != dom_dim * cod_dim) throw Error(ErrorKind::Dimension, "basis vectors have wrong length");
    s.q_ = std::move(q);
    return s;
}

Matrix OperatorSubspace::basis_element(int i) const { return unvectorize(q_.col(i), cod_, dom_); }

std::vector<Matrix> OperatorSubspace::basis() const {
    std::vector<Matrix> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) out.push_back(basis_element(i));
    return out;
}

Vector vectorize(const Matrix& a) { return Eigen::Map<const Vector>(a.data(), a.size()); }

Matrix unvectorize(const Eigen::Ref<const Vector>& v, int rows, int cols) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = v(static_cast<Eigen::Index>(j) * rows + i);
    return m;
}

// ---------------------------------------------------------------------------

SpanAccumulator::SpanAccumulator(int n) : n_(n), kept_(n, 0), pending_(n, std::max(n, 8)) {}

void SpanAccumulator::add(const Vector& v) {
    if (kept_.cols() == n_) return;
    pending_.col(npending_++) = v;
    if (npending_ == pending_.cols()) compress();
}

void SpanAccumulator::add_columns(const Matrix& cols) {
    for (Eigen::Index j = 0; j < cols.cols(); ++j) {
        if (kept_.cols() == n_) return;
        pending_.col(npending_++) = cols.col(j);
        if (npending_ == pending_.cols()) compress();
    }
}

void SpanAccumulator::compress() {
    if (npending_ == 0) return;
    Matrix m(n_, kept_.cols() + npending_);
    m << kept_, pending_.leftCols(npending_);
    npending_ = 0;
    // Jacobi rather than divide and conquer: the latter left singular values
    // above the cutoff on some rank-deficient complex tensor products.
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const Tolerance& t = tolerance();
    const double smax = s.size() ? s(0) : 0.0;
    const double cut = std::max(t.rel * smax, t.abs);
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    kept_ = svd.matrixU().leftCols(r) * s.head(r).asDiagonal();
}

bool SpanAccumulator::saturated() {
    compress();
    return kept_.cols() == n_;
}

int SpanAccumulator::rank() {
    compress();
    return static_cast<int>(kept_.cols());
}

Matrix SpanAccumulator::finish() {
    compress();
    const Eigen::Index r = kept_.cols();
    std::vector<double> sigma(r);
    Matrix q(n_, r);
    for (Eigen::Index j = 0; j < r; ++j) {
        sigma[j] = kept_.col(j).norm();
        q.col(j) = kept_.col(j) / sigma[j];
        fix_phase(q.col(j));
    }
    std::vector<Eigen::Index> order(r);
    std::iota(order.begin(), order.end(), 0);
    const double smax = r ? *std::max_element(sigma.begin(), sigma.end()) : 0.0;
    const double tie = 1e-8 * smax;
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (std::abs(sigma[a] - sigma[b]) > tie) return sigma[a] > sigma[b];
        return lex_before(q.col(a), q.col(b));
    });
    Matrix out(n_, r);
    for (Eigen::Index j = 0; j < r; ++j) out.col(j) = q.col(order[j]);
    return out;
}

// ---------------------------------------------------------------------------

OperatorSubspace canonicalize(const std::vector<Matrix>& spanning, int dom_dim, int cod_dim) {
    SpanAccumulator acc(dom_dim * cod_dim);
    for (const Matrix& m : spanning) {
        if (m.rows() != cod_dim || m.cols() != dom_dim) {
            std::ostringstream os;
            os << "canonicalize: expected " << cod_dim << "x" << dom_dim << " matrix, got " << m.rows() << "x"
               << m.cols();
            throw Error(ErrorKind::Dimension, os.str());
        }
        if (!m.allFinite()) throw Error(ErrorKind::InvalidArgument, "canonicalize: non-finite matrix entry");
        acc.add(vectorize(m));
    }
    return OperatorSubspace::from_canonical(dom_dim, cod_dim, acc.finish());
}

OperatorSubspace canonicalize(const OperatorSubspace& a) {
    SpanAccumulator acc(a.ambient_dim());
    acc.add_columns(a.vectors());
    return OperatorSubspace::from_canonical(a.dom_dim(), a.cod_dim(), acc.finish());
}

bool contains(const OperatorSubspace& a, const OperatorSubspace& b) {
    require_dims(a, b, "contains");
    if (b.is_zero()) return true;
    if (a.dim() < b.dim()) return false;
    if (a.is_full()) return true;
    const Matrix& qa = a.vectors();
    const Matrix& qb = b.vectors();
    const auto n = static_cast<std::size_t>(qa.rows());
    const double eq = tolerance().eq;
    Vector coeff(qa.cols());
    for (Eigen::Index j = 0; j < qb.cols(); ++j) {
        for (Eigen::Index i = 0; i < qa.cols(); ++i) coeff(i) = kernels::cdot(qa.col(i).data(), qb.col(j).data(), n);
        const Vector resid = qb.col(j) - qa * coeff;
        if (resid.norm() > eq) return false;
    }
    return true;
}

bool leq(const OperatorSubspace& a, const OperatorSubspace& b) { return contains(b, a); }

bool equals(const OperatorSubspace& a, const OperatorSubspace& b) {
    return a.dim() == b.dim() && contains(a, b) && contains(b, a);
}

bool contains_matrix(const OperatorSubspace& a, const Matrix& m) {
    if (m.rows() != a.cod_dim() || m.cols() != a.dom_dim())
        throw Error(ErrorKind::Dimension, "contains_matrix: shape mismatch");
    const double nrm = m.norm();
    if (nrm == 0.0) return true;
    const Vector v = vectorize(m) / nrm;
    const Matrix& q = a.vectors();
    Vector coeff(q.cols());
    for (Eigen::Index i = 0; i < q.cols(); ++i)
        coeff(i) = kernels::cdot(q.col(i).data(), v.data(), static_cast<std::size_t>(v.size()));
    return (v - q * coeff).norm() <= tolerance().eq;
}

OperatorSubspace complement(const OperatorSubspace& a) {
    const int n = a.ambient_dim();
    if (a.is_zero()) return OperatorSubspace::full(a.dom_dim(), a.cod_dim());
    if (a.is_full()) return OperatorSubspace::zero(a.dom_dim(), a.cod_dim());
    Eigen::HouseholderQR<Matrix> qr(a.vectors());
    const Matrix full = qr.householderQ() * Matrix::Identity(n, n);
    SpanAccumulator acc(n);
    acc.add_columns(full.rightCols(n - a.dim()));
    return OperatorSubspace::from_canonical(a.dom_dim(), a.cod_dim(), acc.finish());
}

OperatorSubspace join(const OperatorSubspace& a, const OperatorSubspace& b) {
    require_dims(a, b, "join");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    SpanAccumulator acc(a.ambient_dim());
    acc.add_columns(a.vectors());
    acc.add_columns(b.vectors());
    return OperatorSubspace::from_canonical(a.dom_dim(), a.cod_dim(), acc.finish());
}

OperatorSubspace meet(const OperatorSubspace& a, const OperatorSubspace& b) {
    require_dims(a, b, "meet");
    if (a.is_zero() || b.is_zero()) return OperatorSubspace::zero(a.dom_dim(), a.cod_dim());
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    return complement(join(complement(a), complement(b)));
}

OperatorSubspace product(const OperatorSubspace& b, const OperatorSubspace& a) {
    if (b.dom_dim() != a.cod_dim()) {
        std::ostringstream os;
        os << "product: middle dimension mismatch (" << b.dom_dim() << " vs " << a.cod_dim() << ")";
        throw Error(ErrorKind::Dimension, os.str());
    }
    const int dom = a.dom_dim(), cod = b.cod_dim();
    if (a.is_zero() || b.is_zero()) return OperatorSubspace::zero(dom, cod);
    SpanAccumulator acc(dom * cod);
    accumulate_product(acc, b, a);
    return OperatorSubspace::from_canonical(dom, cod, acc.finish());
}

void accumulate_product(SpanAccumulator& acc, const OperatorSubspace& b, const OperatorSubspace& a) {
    if (a.is_zero() || b.is_zero()) return;
    const std::vector<Matrix> as = a.basis();
    for (int j = 0; j < b.dim(); ++j) {
        const Matrix bm = b.basis_element(j);
        for (const Matrix& am : as) acc.add(vectorize(bm * am));
        if (acc.saturated()) return;
    }
}

OperatorSubspace dagger(const OperatorSubspace& a) {
    SpanAccumulator acc(a.ambient_dim());
    for (const Matrix& m : a.basis()) acc.add(vectorize(m.adjoint()));
    return OperatorSubspace::from_canonical(a.cod_dim(), a.dom_dim(), acc.finish());
}

namespace {

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

}  // namespace

OperatorSubspace kron(const OperatorSubspace& a, const OperatorSubspace& b) {
    const int dom = a.dom_dim() * b.dom_dim(), cod = a.cod_dim() * b.cod_dim();
    if (a.is_zero() || b.is_zero()) return OperatorSubspace::zero(dom, cod);
    SpanAccumulator acc(dom * cod);
    const auto bs = b.basis();
    for (const Matrix& am : a.basis())
        for (const Matrix& bm : bs) acc.add(vectorize(kron_matrix(am, bm)));
    return OperatorSubspace::from_canonical(dom, cod, acc.finish());
}

OperatorSubspace right_multiply(const OperatorSubspace& a, const Matrix& v) {
    if (v.rows() != a.dom_dim()) throw Error(ErrorKind::Dimension, "right_multiply: shape mismatch");
    const int dom = static_cast<int>(v.cols());
    SpanAccumulator acc(dom * a.cod_dim());
    for (const Matrix& m : a.basis()) acc.add(vectorize(m * v));
    return OperatorSubspace::from_canonical(dom, a.cod_dim(), acc.finish());
}

OperatorSubspace left_multiply(const Matrix& w, const OperatorSubspace& a) {
    if (w.cols() != a.cod_dim()) throw Error(ErrorKind::Dimension, "left_multiply: shape mismatch");
    const int cod = static_cast<int>(w.rows());
    SpanAccumulator acc(a.dom_dim() * cod);
    for (const Matrix& m : a.basis()) acc.add(vectorize(w * m));
    return OperatorSubspace::from_canonical(a.dom_dim(), cod, acc.finish());
}

OperatorSubspace row_support(const OperatorSubspace& a) {
    const int h = a.dom_dim();
    SpanAccumulator acc(h);
    for (const Matrix& m : a.basis()) acc.add_columns(m.adjoint());
    return OperatorSubspace::from_canonical(1, h, acc.finish());
}

Matrix column_basis(const OperatorSubspace& columns) {
    if (columns.dom_dim() != 1) throw Error(ErrorKind::Dimension, "column_basis: expected a column-vector subspace");
    return columns.vectors();
}

Matrix projector(const OperatorSubspace& columns) {
    const Matrix& q = column_basis(columns);
    return q * q.adjoint();
}

std::string describe(const OperatorSubspace& a) {
    std::ostringstream os;
    os << "dim " << a.dim() << " subspace of L(C^" << a.dom_dim() << ", C^" << a.cod_dim() << ")";
    return os.str();
}

}  // namespace qdomain
