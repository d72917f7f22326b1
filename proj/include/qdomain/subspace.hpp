#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace qdomain {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// A linear subspace of L(X, Y), the cod_dim x dom_dim complex matrices.
// The basis is orthonormal for <a, b> = Tr(a^dagger b) and stored as the
// columns of a (cod_dim*dom_dim) x k matrix of column-major vectorizations.
class OperatorSubspace {
public:
    OperatorSubspace() = default;
    OperatorSubspace(int dom_dim, int cod_dim);

    static OperatorSubspace zero(int dom_dim, int cod_dim);
    static OperatorSubspace full(int dom_dim, int cod_dim);
    // C.1 on a space of dimension n.
    static OperatorSubspace scalars(int n);
    static OperatorSubspace span(const std::vector<Matrix>& spanning, int dom_dim, int cod_dim);
    static OperatorSubspace span_of(const Matrix& m);

    int dom_dim() const { return dom_; }
    int cod_dim() const { return cod_; }
    int ambient_dim() const { return dom_ * cod_; }
    int dim() const { return static_cast<int>(q_.cols()); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    Matrix basis_element(int i) const;
    std::vector<Matrix> basis() const;
    const Matrix& vectors() const { return q_; }

    // Internal: wraps vectors already in canonical orthonormal form.
    static OperatorSubspace from_canonical(int dom_dim, int cod_dim, Matrix q);

private:
    int dom_ = 0;
    int cod_ = 0;
    Matrix q_;
};

// Accumulates spanning vectors of C^n and produces the canonical
// orthonormal basis of their span. Batches are compressed to U*Sigma, which
// keeps the Gram operator of everything added so far, so the final singular
// values are those of the full stacked matrix.
class SpanAccumulator {
public:
    explicit SpanAccumulator(int n);

    void add(const Vector& v);
    void add_columns(const Matrix& cols);
    // True once the accumulated span is all of C^n.
    bool saturated();
    int rank();
    Matrix finish();

private:
    void compress();

    int n_;
    Matrix kept_;
    Matrix pending_;
    int npending_ = 0;
};

Vector vectorize(const Matrix& a);
Matrix unvectorize(const Eigen::Ref<const Vector>& v, int rows, int cols);

OperatorSubspace canonicalize(const std::vector<Matrix>& spanning, int dom_dim, int cod_dim);
OperatorSubspace canonicalize(const OperatorSubspace& a);

// contains(A, B): B is a subspace of A.
bool contains(const OperatorSubspace& a, const OperatorSubspace& b);
// leq(A, B): A is a subspace of B.
bool leq(const OperatorSubspace& a, const OperatorSubspace& b);
bool equals(const OperatorSubspace& a, const OperatorSubspace& b);
// Whether the single matrix m lies in A.
bool contains_matrix(const OperatorSubspace& a, const Matrix& m);

OperatorSubspace complement(const OperatorSubspace& a);
OperatorSubspace meet(const OperatorSubspace& a, const OperatorSubspace& b);
OperatorSubspace join(const OperatorSubspace& a, const OperatorSubspace& b);
// B.A = span{ba}; b acts after a.
OperatorSubspace product(const OperatorSubspace& b, const OperatorSubspace& a);
OperatorSubspace dagger(const OperatorSubspace& a);
// Adds every product of basis elements ba to acc; stops early once acc is saturated.
void accumulate_product(SpanAccumulator& acc, const OperatorSubspace& b, const OperatorSubspace& a);
OperatorSubspace kron(const OperatorSubspace& a, const OperatorSubspace& b);
// {a.v : a in A} for a fixed matrix v; shape change on the domain side.
OperatorSubspace right_multiply(const OperatorSubspace& a, const Matrix& v);
OperatorSubspace left_multiply(const Matrix& w, const OperatorSubspace& a);

// The join of the ranges of a^dagger over a in A, a subspace of C^dom
// returned as column vectors (dom_dim 1, cod_dim = A.dom_dim).
OperatorSubspace row_support(const OperatorSubspace& a);
// Orthonormal columns spanning a column-vector subspace.
Matrix column_basis(const OperatorSubspace& columns);
Matrix projector(const OperatorSubspace& columns);

std::string describe(const OperatorSubspace& a);

}  // namespace qdomain
