#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace ssm {

using Complex = std::complex<double>;
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// All exponents of `nvars` variables with total degree in [min_degree, max_degree],
/// graded-lexicographic: ascending degree, then descending lexicographic inside a
/// degree (x^2, xy, y^2).
std::vector<Exponent> graded_lex_exponents(int nvars, int min_degree, int max_degree);

/// Real multivariate monomials in graded-lex order. This is the basis of every
/// real polynomial map in the library (manifold graph, reduced vector field), so
/// its ordering fixes the serialized coefficient layout.
class MonomialBasis {
public:
    MonomialBasis() = default;
    MonomialBasis(int nvars, int min_degree, int max_degree);

    int variables() const noexcept { return nvars_; }
    int size() const noexcept { return static_cast<int>(exps_.size()); }
    int min_degree() const noexcept { return min_degree_; }
    int max_degree() const noexcept { return max_degree_; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    void evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, Eigen::Ref<Eigen::VectorXd> out) const;
    Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const;

    // d(monomial_i)/d(x_j), size() x variables().
    Eigen::MatrixXd jacobian(const Eigen::Ref<const Eigen::VectorXd>& x) const;

private:
    int nvars_ = 0;
    int min_degree_ = 0;
    int max_degree_ = 0;
    std::vector<Exponent> exps_;
};

/// Sparse complex polynomial in `nvars` variables. Terms are kept in an ordered
/// map so iteration (and therefore every derived serialization) is deterministic.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(int nvars) : nvars_(nvars) {}

    static CPoly variable(int nvars, int index, Complex coeff = 1.0);

    int variables() const noexcept { return nvars_; }
    const std::map<Exponent, Complex>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    int degree() const;

    Complex coeff(const Exponent& e) const;
    void add_term(const Exponent& e, Complex c);
    void set_term(const Exponent& e, Complex c);

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(Complex s);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(CPoly a, Complex s) { return a *= s; }

    CPoly multiply(const CPoly& o, int max_degree) const;
    CPoly derivative(int var) const;
    CPoly degree_part(int d) const;
    CPoly truncated(int max_degree) const;

    // Drops terms with |c| <= tol.
    void prune(double tol = 0.0);

    Complex evaluate(std::span<const Complex> z) const;

private:
    int nvars_ = 0;
    std::map<Exponent, Complex> terms_;
};

using CPolyMap = std::vector<CPoly>;

/// p(subs_0(z), ..., subs_{n-1}(z)) truncated at max_degree.
CPoly compose(const CPoly& p, const CPolyMap& subs, int max_degree);
CPolyMap compose(const CPolyMap& p, const CPolyMap& subs, int max_degree);

CPolyMap identity_map(int nvars);

// Complex coordinates are ordered (z1, conj z1, z2, conj z2, ...). For such
// conjugate-structured arguments, conj(p(z)) equals mirror(p)(z), where mirror
// swaps each pair's exponents and conjugates coefficients.
Exponent conjugate_exponent(const Exponent& e);
CPoly conjugate_mirror(const CPoly& p);

// Expands per-mode equations (one per conjugate pair) into the full 2m map.
CPolyMap expand_conjugate_pairs(const CPolyMap& modes);

/// Evaluates many monomials at one complex point; cached powers.
class ComplexMonomials {
public:
    ComplexMonomials(int nvars, int max_degree);
    void set_point(std::span<const Complex> z);
    Complex value(const Exponent& e) const;

private:
    int nvars_;
    int max_degree_;
    std::vector<Complex> powers_;  // nvars x (max_degree + 1)
};

}  // namespace ssm
