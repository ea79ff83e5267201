#pragma once

#include <string>
#include <vector>

#include "kerrcat/errors.hpp"
#include "kerrcat/types.hpp"

namespace kerrcat {

// One normal-ordered monomial c * ad^m a^n.
struct LadderTerm {
    int create = 0;
    int annihilate = 0;
    Complex coeff{0.0, 0.0};
};

// Normal-ordered bosonic polynomial sum_mn c_mn ad^m a^n. Canonical form:
// terms sorted by (create, annihilate), duplicates merged, exact-zero
// coefficients pruned. Immutable value type.
class OperatorExpr {
public:
    OperatorExpr() = default;
    explicit OperatorExpr(std::vector<LadderTerm> terms);

    static OperatorExpr monomial(int create, int annihilate, Complex coeff = 1.0);
    static OperatorExpr identity(Complex coeff = 1.0);
    static OperatorExpr annihilation(Complex coeff = 1.0);
    static OperatorExpr creation(Complex coeff = 1.0);
    static OperatorExpr number(Complex coeff = 1.0);

    const std::vector<LadderTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_weight() const;  // max m+n over terms

    OperatorExpr adjoint() const;  // (m,n,c) -> (n,m,conj c)
    bool is_hermitian(double tol = 1e-14) const;

    OperatorExpr operator+(const OperatorExpr& other) const;
    OperatorExpr operator-(const OperatorExpr& other) const;
    OperatorExpr operator*(Complex scalar) const;

    std::string to_string() const;

private:
    std::vector<LadderTerm> terms_;
    void canonicalize();
};

inline OperatorExpr operator*(Complex scalar, const OperatorExpr& e) { return e * scalar; }

// Truncated annihilation matrix, a|k> = sqrt(k)|k-1>.
Matrix annihilation_matrix(int dim);

// Dense realization on the truncated Fock space as products of truncated
// ladder matrices. Edge rows follow the truncated algebra; convergence is
// certified by dimension doubling downstream, not by per-element exactness.
Matrix realize(const OperatorExpr& expr, int dim);

// Normalized coherent state. Warns when |alpha|^2 > dim/4, throws
// TruncationTooSmall when |alpha|^2 > dim/2.
Vector coherent_state(Complex alpha, int dim);

Complex expectation(const Matrix& rho, const Matrix& op);  // tr(rho * op)

} // namespace kerrcat
