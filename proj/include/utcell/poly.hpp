#ifndef UTCELL_POLY_HPP
#define UTCELL_POLY_HPP

#include "utcell/rational.hpp"
#include "utcell/root.hpp"
#include "utcell/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace utcell {

// Product of variables x_eta with positive exponents, factors sorted with
// the succ-greatest variable first.
struct Monomial {
    std::vector<std::pair<Root, int>> factors;

    static Monomial one() { return {}; }
    static Monomial var(const Root& r, int exp = 1);

    bool is_one() const { return factors.empty(); }
    int total_degree() const;
    int exponent(const Root& r) const;

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divide(const Monomial& other) const;  // this / other

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_text() const;
};

// Lexicographic on exponents read along the descending variable order.
bool lex_greater(const Monomial& a, const Monomial& b);

struct MonoDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

// A strictly lower triangular rational matrix; absent entries are zero.
struct Point {
    int n = 0;
    std::map<Root, Rational, SuccDesc> entries;

    static Point make(int n, const std::map<Root, Rational, SuccDesc>& entries);
    Rational get(const Root& r) const;
};

class RatFn;

// Sparse exact polynomial over Q in the variables x_eta.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly var(const Root& r);
    static Poly constant(long c) { return Poly(Rational(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;

    const std::map<Monomial, Rational, MonoDesc>& terms() const { return terms_; }
    std::pair<Monomial, Rational> leading() const;
    int total_degree() const;
    RootSet support() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(const Rational& c) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative(const Root& r) const;
    Rational evaluate(const Point& p) const;
    RatFn substitute(const Root& r, const RatFn& value) const;
    RatFn substitute_all(const std::map<Root, RatFn, SuccDesc>& images) const;

    // Positive rational c with this/c integral, coprime and positive-leading.
    Rational content_unit() const;
    Poly primitive_part() const;  // this / content_unit()

    // Quotient when division is exact, nothing otherwise.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    std::string to_text() const;
    std::string to_json() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational, MonoDesc> terms_;
};

// Quotient of polynomials. Normalized so numerator and denominator carry no
// common rational content or monomial factor and the denominator has a
// positive leading coefficient. Equality is cross-multiplied.
class RatFn {
public:
    RatFn() : num_(), den_(Rational(1)) {}
    RatFn(const Poly& p) : num_(p), den_(Poly(Rational(1))) {}
    RatFn(Poly num, Poly den);
    static RatFn var(const Root& r) { return RatFn(Poly::var(r)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Poly to_poly() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;

    bool equals(const RatFn& o) const;

    Rational evaluate(const Point& p) const;
    RatFn substitute(const Root& r, const RatFn& value) const;
    RatFn substitute_all(const std::map<Root, RatFn, SuccDesc>& images) const;
    RootSet support() const;

    std::string to_text() const;

private:
    void normalize();
    Poly num_, den_;
};

// Lie-Poisson bracket on the lower triangle: on generators
// {x_(i,j), x_(k,m)} = [j==k] x_(i,m) - [m==i] x_(k,j), extended as a
// biderivation.
Poly poisson(const Poly& f, const Poly& g);
RatFn poisson(const RatFn& f, const RatFn& g);

// Derivation with ad_{h_a} x_(i,j) = (delta_{aj} - delta_{ai}) x_(i,j).
Poly cartan_weight_action(int a, const Poly& f);
RatFn cartan_weight_action(int a, const RatFn& f);

// Common eigenvalue vector (index a -> eigenvalue of ad_{h_a}) when every
// term transforms the same way; nothing for inhomogeneous input.
std::optional<std::vector<long>> weight_vector(const Poly& f, int n);
std::optional<std::vector<long>> weight_vector(const RatFn& f, int n);

// Determinant of the generic-matrix submatrix picked by spec: entry (r,c)
// is x_(r,c) below the diagonal, and for the shifted variant 1 on it.
Poly minor_poly(const MinorSpec& spec, bool shifted, int n);

// Finite form of the series sum_s (-1)^s D_p^s(a) q^s / s! with D_p = {p,-}.
// Requires {p,q} = 1; throws when the derivation fails to terminate.
RatFn theta_generic(const Poly& p, const RatFn& q, const RatFn& a);

Rational evaluate(const Poly& f, const Point& p);
Rational evaluate(const RatFn& f, const Point& p);

} // namespace utcell

#endif
