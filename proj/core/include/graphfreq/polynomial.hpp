#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graphfreq/errors.hpp"

namespace graphfreq {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Intermediate products go through __int128; overflow past 64 bits after
// reduction throws rather than silently wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return {-a.num, a.den}; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
};

constexpr int kMaxDim = 4;

// Exponent vector for up to kMaxDim variables; unused axes stay 0.
using Exponents = std::array<int, kMaxDim>;

struct Term {
    Rational coeff;
    Exponents exps{};
};

// Multivariate polynomial with exact rational coefficients. Terms are kept
// sorted by exponent vector and coalesced; zero coefficients are dropped.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int dim) : dim_(dim) { check_dim(dim); }
    Polynomial(int dim, std::vector<Term> terms);

    static Polynomial constant(int dim, const Rational& c);
    static Polynomial monomial(int dim, const Rational& c, const Exponents& e);

    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int axis_degree(int axis) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Rational& c) const;

    Polynomial derivative(int axis) const;
    Polynomial laplacian() const;

    // p(x + delta e_axis) for integer delta, via binomial expansion.
    Polynomial shifted(int axis, int delta) const;
    // Sum over the 2*dim unit shifts minus 2*dim*p: the graph Laplacian on Z^dim.
    Polynomial discrete_laplacian() const;

    double evaluate(const std::vector<double>& x) const;
    Rational evaluate_exact(const std::vector<Rational>& x) const;

    std::string to_string() const;

  private:
    static void check_dim(int dim);
    void normalize();

    int dim_ = 2;
    std::vector<Term> terms_;
};

// A polynomial with its exact symbolic Laplacian attached. The flag certifies
// that the Laplacian is the zero polynomial; consumers that require harmonicity
// check the flag rather than recomputing.
struct HarmonicPolynomial {
    Polynomial poly;
    Polynomial laplacian;
    bool is_continuum_harmonic = false;
};

HarmonicPolynomial make_polynomial(Polynomial p);
HarmonicPolynomial make_polynomial(int dim, std::vector<Term> terms);

// Parses "c*x^a*y^b + ..." with rational or decimal coefficients and variables
// x,y,z,w (aliases x1..x4). Throws ParseError / BadExponent.
Polynomial parse_polynomial(const std::string& text, int dim);

// Re(((x+iy))^m) and Im((x+iy)^m): harmonic in dim 2 for every m >= 0.
Polynomial harmonic_re(int m);
Polynomial harmonic_im(int m);

}  // namespace graphfreq
