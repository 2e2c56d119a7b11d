#pragma once

#include "apolar/rational.hpp"
#include "apolar/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

// Sparse multivariate polynomial over the rationals. Zero coefficients are
// never stored. Value type: all operations return fresh polynomials.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly constant(Ring ring, Rational c);
    static Poly monomial(Ring ring, Monomial m, Rational coeff = 1);
    static Poly variable(Ring ring, int index);

    const Ring& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;

    // Max weighted degree over terms; -1 for the zero polynomial.
    int weighted_degree() const;
    bool is_quasi_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const;

    // Drops terms of weighted degree > bound.
    Poly truncated_above(int bound) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    Ring ring_;
    std::map<Monomial, Rational> terms_;

    friend Poly apply_diffop(const Poly& P, const Poly& f);
};

// Gateaux derivative along direction v (coefficients over the variables):
// sum_i v_i * d/dx_i.
Poly directional_derivative(const Poly& f, const std::vector<Rational>& v);

// Action of P as a constant-coefficient differential operator: a monomial
// x^alpha acts as the mixed partial of multi-order alpha, extended linearly.
Poly apply_diffop(const Poly& P, const Poly& f);

// Constant term of apply_diffop(P, f).
Rational apolar_pairing(const Poly& P, const Poly& f);

// Composition: each variable of f replaced by its image (all images in the
// same target ring). For arity-0 rings pass target explicitly.
Poly substitute(const Poly& f, const std::vector<Poly>& images, Ring target);

// Splits f into its quasi-homogeneous pieces, keyed by weighted degree.
std::map<int, Poly> quasi_homogeneous_components(const Poly& f);

// Canonical text form: terms in descending graded-lex order, e.g.
// "1/2*a^2*b-3*c". Parses the same grammar back; round-trips exactly.
std::string to_string(const Poly& p);
Poly parse_poly(const Ring& ring, const std::string& text);

}  // namespace apolar
