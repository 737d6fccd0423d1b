#include "graphfreq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace graphfreq {

namespace {

using int128 = __int128;

std::int64_t to64(int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::ParameterOutOfRange, "rational overflow past 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(int128 num, int128 den) {
    if (den == 0) throw Error(ErrorCode::ParameterOutOfRange, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num = to64(num);
    r.den = to64(den);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    Rational r = make_reduced(n, d);
    num = r.num;
    den = r.den;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<int128>(a.num) * b.den + static_cast<int128>(b.num) * a.den,
                        static_cast<int128>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<int128>(a.num) * b.num, static_cast<int128>(a.den) * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw Error(ErrorCode::ParameterOutOfRange, "rational division by zero");
    return make_reduced(static_cast<int128>(a.num) * b.den, static_cast<int128>(a.den) * b.num);
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

void Polynomial::check_dim(int dim) {
    if (dim < 2 || dim > kMaxDim) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "polynomial dimension must be between 2 and " + std::to_string(kMaxDim));
    }
}

Polynomial::Polynomial(int dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
    check_dim(dim);
    normalize();
}

void Polynomial::normalize() {
    for (const Term& t : terms_) {
        for (int i = 0; i < kMaxDim; ++i) {
            if (t.exps[i] < 0) throw Error(ErrorCode::BadExponent, "negative exponent");
            if (i >= dim_ && t.exps[i] != 0) {
                throw Error(ErrorCode::BadExponent,
                            "exponent on axis " + std::to_string(i) + " exceeds dimension " +
                                std::to_string(dim_));
            }
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
    Polynomial p(dim);
    if (!c.is_zero()) p.terms_.push_back({c, {}});
    return p;
}

Polynomial Polynomial::monomial(int dim, const Rational& c, const Exponents& e) {
    return Polynomial(dim, {{c, e}});
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const Term& t : terms_) {
        int s = 0;
        for (int e : t.exps) s += e;
        deg = std::max(deg, s);
    }
    return deg;
}

int Polynomial::axis_degree(int axis) const {
    int deg = 0;
    for (const Term& t : terms_) deg = std::max(deg, t.exps[axis]);
    return deg;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (dim_ != rhs.dim_) throw Error(ErrorCode::ParameterOutOfRange, "dimension mismatch");
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), rhs.terms_.begin(), rhs.terms_.end());
    return Polynomial(dim_, std::move(merged));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (dim_ != rhs.dim_) throw Error(ErrorCode::ParameterOutOfRange, "dimension mismatch");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * rhs.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : rhs.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            for (int i = 0; i < kMaxDim; ++i) t.exps[i] = a.exps[i] + b.exps[i];
            prod.push_back(t);
        }
    }
    return Polynomial(dim_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = t.coeff * c;
    return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::derivative(int axis) const {
    if (axis < 0 || axis >= dim_) throw Error(ErrorCode::ParameterOutOfRange, "axis out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.exps[axis] == 0) continue;
        Term d = t;
        d.coeff = t.coeff * Rational(t.exps[axis]);
        d.exps[axis] -= 1;
        out.push_back(d);
    }
    return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::laplacian() const {
    Polynomial acc(dim_);
    for (int a = 0; a < dim_; ++a) acc = acc + derivative(a).derivative(a);
    return acc;
}

Polynomial Polynomial::shifted(int axis, int delta) const {
    if (axis < 0 || axis >= dim_) throw Error(ErrorCode::ParameterOutOfRange, "axis out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        const int e = t.exps[axis];
        // (x + delta)^e expanded with exact binomials.
        Rational binom(1);
        Rational power(1);  // delta^(e-j) built from the j = e end downward
        std::vector<Rational> coeffs(e + 1);
        for (int j = e; j >= 0; --j) {
            coeffs[j] = binom * power;
            if (j > 0) {
                binom = binom * Rational(j) / Rational(e - j + 1);
                power = power * Rational(delta);
            }
        }
        for (int j = 0; j <= e; ++j) {
            if (coeffs[j].is_zero()) continue;
            Term s = t;
            s.coeff = t.coeff * coeffs[j];
            s.exps[axis] = j;
            out.push_back(s);
        }
    }
    return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::discrete_laplacian() const {
    Polynomial acc(dim_);
    const Polynomial twice = scaled(Rational(2));
    for (int a = 0; a < dim_; ++a) {
        acc = acc + shifted(a, +1) + shifted(a, -1) - twice;
    }
    return acc;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) {
        throw Error(ErrorCode::ParameterOutOfRange, "evaluation point has wrong dimension");
    }
    double sum = 0.0;
    for (const Term& t : terms_) {
        double m = t.coeff.to_double();
        for (int i = 0; i < dim_; ++i) {
            for (int e = 0; e < t.exps[i]; ++e) m *= x[static_cast<std::size_t>(i)];
        }
        sum += m;
    }
    return sum;
}

Rational Polynomial::evaluate_exact(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != dim_) {
        throw Error(ErrorCode::ParameterOutOfRange, "evaluation point has wrong dimension");
    }
    Rational sum(0);
    for (const Term& t : terms_) {
        Rational m = t.coeff;
        for (int i = 0; i < dim_; ++i) {
            for (int e = 0; e < t.exps[i]; ++e) m = m * x[static_cast<std::size_t>(i)];
        }
        sum = sum + m;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[kMaxDim] = {"x", "y", "z", "w"};
    std::string s;
    // Highest-degree terms first reads more naturally.
    std::vector<Term> ordered = terms_;
    std::sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
        return b.exps < a.exps;
    });
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        const Term& t = ordered[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.num < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.num < 0 ? " - " : " + ";
            if (c.num < 0) c = -c;
        }
        bool has_vars = false;
        for (int e : t.exps) has_vars = has_vars || e > 0;
        if (!has_vars || c != Rational(1)) {
            s += c.to_string();
            if (has_vars) s += "*";
        }
        bool first_var = true;
        for (int a = 0; a < kMaxDim; ++a) {
            if (t.exps[a] == 0) continue;
            if (!first_var) s += "*";
            first_var = false;
            s += names[a];
            if (t.exps[a] > 1) s += "^" + std::to_string(t.exps[a]);
        }
    }
    return s;
}

HarmonicPolynomial make_polynomial(Polynomial p) {
    HarmonicPolynomial h;
    h.laplacian = p.laplacian();
    h.is_continuum_harmonic = h.laplacian.is_zero();
    h.poly = std::move(p);
    return h;
}

HarmonicPolynomial make_polynomial(int dim, std::vector<Term> terms) {
    return make_polynomial(Polynomial(dim, std::move(terms)));
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int dim;

    explicit Parser(const std::string& t, int d) : text(t), dim(d) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorCode::ParseError,
                    "polynomial syntax: " + what + " at position " + std::to_string(pos) +
                        " in \"" + text + "\"");
    }

    std::int64_t parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a number");
        }
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("number too large");
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    Rational parse_number() {
        std::int64_t whole = parse_uint();
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::int64_t frac = 0, scale = 1;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                if (scale > std::numeric_limits<std::int64_t>::max() / 10) {
                    fail("decimal tail too long");
                }
                frac = frac * 10 + (text[pos] - '0');
                scale *= 10;
                ++pos;
            }
            return Rational(whole) + Rational(frac, scale);
        }
        return Rational(whole);
    }

    int parse_axis() {
        skip_ws();
        const char c = text[pos];
        int axis = -1;
        if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
            axis = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
            ++pos;
            // x1..x4 aliases: a digit straight after 'x' selects the axis.
            if (c == 'x' && pos < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos]))) {
                const int idx = text[pos] - '0';
                if (idx < 1 || idx > kMaxDim) fail("variable index out of range");
                axis = idx - 1;
                ++pos;
            }
        } else {
            fail("expected a variable or number");
        }
        if (axis >= dim) {
            throw Error(ErrorCode::BadExponent, "variable for axis " + std::to_string(axis + 1) +
                                                    " not available in dimension " +
                                                    std::to_string(dim));
        }
        return axis;
    }

    // factor := number | variable ['^' uint]
    Polynomial parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            if (c == '.') {
                ++pos;
                std::int64_t frac = 0, scale = 1;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    if (scale > std::numeric_limits<std::int64_t>::max() / 10) {
                        fail("decimal tail too long");
                    }
                    frac = frac * 10 + (text[pos] - '0');
                    scale *= 10;
                    ++pos;
                }
                if (scale == 1) fail("expected digits after '.'");
                return Polynomial::constant(dim, Rational(frac, scale));
            }
            return Polynomial::constant(dim, parse_number());
        }
        const int axis = parse_axis();
        int exp = 1;
        if (eat('^')) {
            if (peek() == '-') throw Error(ErrorCode::BadExponent, "negative exponent");
            const std::int64_t e = parse_uint();
            if (e > 64) throw Error(ErrorCode::BadExponent, "exponent too large");
            exp = static_cast<int>(e);
        }
        Exponents exps{};
        exps[axis] = exp;
        return Polynomial::monomial(dim, Rational(1), exps);
    }

    // term := factor (('*'|'/') factor)*
    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (true) {
            if (eat('*')) {
                p = p * parse_factor();
            } else if (eat('/')) {
                Polynomial q = parse_factor();
                if (q.total_degree() != 0 || q.is_zero()) {
                    fail("can only divide by a nonzero constant");
                }
                p = p.scaled(Rational(1) / q.terms().front().coeff);
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial parse_expr() {
        Polynomial acc(dim);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            Polynomial t = parse_term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
        }
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
    Parser p(text, dim);
    return p.parse_expr();
}

Polynomial harmonic_re(int m) {
    if (m < 0) throw Error(ErrorCode::ParameterOutOfRange, "exponent must be >= 0");
    Exponents ex{}, ey{};
    ex[0] = 1;
    ey[1] = 1;
    const Polynomial x = Polynomial::monomial(2, Rational(1), ex);
    const Polynomial y = Polynomial::monomial(2, Rational(1), ey);
    Polynomial re = Polynomial::constant(2, Rational(1));
    Polynomial im(2);
    for (int i = 0; i < m; ++i) {
        Polynomial nre = re * x - im * y;
        Polynomial nim = re * y + im * x;
        re = std::move(nre);
        im = std::move(nim);
    }
    return re;
}

Polynomial harmonic_im(int m) {
    if (m < 0) throw Error(ErrorCode::ParameterOutOfRange, "exponent must be >= 0");
    Exponents ex{}, ey{};
    ex[0] = 1;
    ey[1] = 1;
    const Polynomial x = Polynomial::monomial(2, Rational(1), ex);
    const Polynomial y = Polynomial::monomial(2, Rational(1), ey);
    Polynomial re = Polynomial::constant(2, Rational(1));
    Polynomial im(2);
    for (int i = 0; i < m; ++i) {
        Polynomial nre = re * x - im * y;
        Polynomial nim = re * y + im * x;
        re = std::move(nre);
        im = std::move(nim);
    }
    return im;
}

}  // namespace graphfreq
