#include "kerrcat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

namespace kerrcat {

OperatorExpr::OperatorExpr(std::vector<LadderTerm> terms) : terms_(std::move(terms)) {
    for (const LadderTerm& t : terms_) {
        if (t.create < 0 || t.annihilate < 0)
            throw Error("ladder powers must be non-negative");
    }
    canonicalize();
}

void OperatorExpr::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const LadderTerm& a, const LadderTerm& b) {
        if (a.create != b.create) return a.create < b.create;
        return a.annihilate < b.annihilate;
    });
    std::vector<LadderTerm> merged;
    merged.reserve(terms_.size());
    for (const LadderTerm& t : terms_) {
        if (!merged.empty() && merged.back().create == t.create &&
            merged.back().annihilate == t.annihilate) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const LadderTerm& t) { return t.coeff == Complex(0.0, 0.0); });
    terms_ = std::move(merged);
}

OperatorExpr OperatorExpr::monomial(int create, int annihilate, Complex coeff) {
    return OperatorExpr({{create, annihilate, coeff}});
}

OperatorExpr OperatorExpr::identity(Complex coeff) { return monomial(0, 0, coeff); }
OperatorExpr OperatorExpr::annihilation(Complex coeff) { return monomial(0, 1, coeff); }
OperatorExpr OperatorExpr::creation(Complex coeff) { return monomial(1, 0, coeff); }
OperatorExpr OperatorExpr::number(Complex coeff) { return monomial(1, 1, coeff); }

int OperatorExpr::max_weight() const {
    int w = 0;
    for (const LadderTerm& t : terms_) w = std::max(w, t.create + t.annihilate);
    return w;
}

OperatorExpr OperatorExpr::adjoint() const {
    std::vector<LadderTerm> out;
    out.reserve(terms_.size());
    for (const LadderTerm& t : terms_)
        out.push_back({t.annihilate, t.create, std::conj(t.coeff)});
    return OperatorExpr(std::move(out));
}

bool OperatorExpr::is_hermitian(double tol) const {
    const OperatorExpr adj = adjoint();
    if (adj.terms_.size() != terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (adj.terms_[i].create != terms_[i].create ||
            adj.terms_[i].annihilate != terms_[i].annihilate ||
            std::abs(adj.terms_[i].coeff - terms_[i].coeff) > tol)
            return false;
    }
    return true;
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& other) const {
    std::vector<LadderTerm> out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return OperatorExpr(std::move(out));
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& other) const {
    return *this + other * Complex(-1.0, 0.0);
}

OperatorExpr OperatorExpr::operator*(Complex scalar) const {
    std::vector<LadderTerm> out = terms_;
    for (LadderTerm& t : out) t.coeff *= scalar;
    return OperatorExpr(std::move(out));
}

namespace {

std::string format_coeff(Complex c) {
    char buf[64];
    if (c.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.6g", c.real());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "(%.6g%+.6gi)", c.real(), c.imag());
    return buf;
}

std::string format_ladders(int m, int n) {
    std::string s;
    if (m > 0) {
        s += "ad";
        if (m > 1) s += "^" + std::to_string(m);
    }
    if (n > 0) {
        if (!s.empty()) s += " ";
        s += "a";
        if (n > 1) s += "^" + std::to_string(n);
    }
    return s;
}

} // namespace

std::string OperatorExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const LadderTerm& t : terms_) {
        std::string piece;
        const std::string ladders = format_ladders(t.create, t.annihilate);
        if (ladders.empty()) {
            piece = format_coeff(t.coeff);
        } else if (t.coeff == Complex(1.0, 0.0)) {
            piece = ladders;
        } else {
            piece = format_coeff(t.coeff) + "*" + ladders;
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

Matrix annihilation_matrix(int dim) {
    if (dim < 2) throw Error("Fock dimension must be at least 2");
    Matrix a = Matrix::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(double(k));
    return a;
}

Matrix realize(const OperatorExpr& expr, int dim) {
    if (dim < 2) throw Error("Fock dimension must be at least 2");
    const Matrix a = annihilation_matrix(dim);
    const Matrix ad = a.adjoint();

    int max_create = 0;
    int max_annihilate = 0;
    for (const LadderTerm& t : expr.terms()) {
        max_create = std::max(max_create, t.create);
        max_annihilate = std::max(max_annihilate, t.annihilate);
    }

    std::vector<Matrix> a_pow(max_annihilate + 1);
    std::vector<Matrix> ad_pow(max_create + 1);
    a_pow[0] = Matrix::Identity(dim, dim);
    ad_pow[0] = Matrix::Identity(dim, dim);
    for (int k = 1; k <= max_annihilate; ++k) a_pow[k] = a_pow[k - 1] * a;
    for (int k = 1; k <= max_create; ++k) ad_pow[k] = ad_pow[k - 1] * ad;

    Matrix out = Matrix::Zero(dim, dim);
    for (const LadderTerm& t : expr.terms())
        out.noalias() += t.coeff * (ad_pow[t.create] * a_pow[t.annihilate]);
    return out;
}

Vector coherent_state(Complex alpha, int dim) {
    if (dim < 2) throw Error("Fock dimension must be at least 2");
    const double n_mean = std::norm(alpha);
    if (n_mean > 0.5 * dim)
        throw TruncationTooSmall("coherent state with |alpha|^2 > dim/2 cannot be truncated faithfully");
    if (n_mean > 0.25 * dim)
        std::cerr << "[kerrcat] warning: coherent state |alpha|^2 = " << n_mean
                  << " is large for dim = " << dim << "\n";

    Vector v(dim);
    // amplitudes alpha^k / sqrt(k!) built recursively, then renormalized
    Complex amp = 1.0;
    v(0) = amp;
    for (int k = 1; k < dim; ++k) {
        amp *= alpha / std::sqrt(double(k));
        v(k) = amp;
    }
    v /= v.norm();
    return v;
}

Complex expectation(const Matrix& rho, const Matrix& op) {
    return (rho * op).trace();
}

} // namespace kerrcat
