// polynomial.hpp - real polynomials in the ambient coordinates (x, y, z) with
// the su(2)-type Poisson bracket, and 1D polynomials in q.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace semigibbs::poly {

// ------------------------------- Poly3 -------------------------------------

// Monomial exponents (a, b, c) for x^a y^b z^c.
using Mono3 = std::array<int, 3>;

// Sparse real polynomial in (x, y, z). Coefficients are never reduced modulo
// x^2 + y^2 + z^2 = 1; the constraint only enters through on-sphere
// evaluation.
class Poly3 {
  public:
    Poly3() = default;
    explicit Poly3(double constant);
    static Poly3 variable(int axis);                      // 0,1,2 -> x,y,z
    static Poly3 monomial(const Mono3& m, double coeff);

    Poly3& add_term(const Mono3& m, double coeff);
    const std::map<Mono3, double>& terms() const { return terms_; }

    bool empty() const { return terms_.empty(); }
    int degree() const;
    double evaluate(double x, double y, double z) const;
    double evaluate_angles(double theta, double phi) const;

    Poly3 derivative(int axis) const;

    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;
    Poly3 operator*(double s) const;
    Poly3& operator+=(const Poly3& o);

    // Composition with a linear map of the coordinates: p(g^{-1} r); `ginv`
    // is a 3x3 matrix in row-major order.
    Poly3 compose_linear(const std::array<double, 9>& ginv) const;

    double max_abs_coeff() const;
    std::string to_string() const;

  private:
    void prune();
    std::map<Mono3, double> terms_;
};

// {f, g} from {x,y} = z, {y,z} = x, {z,x} = y extended as a biderivation.
Poly3 poisson_bracket(const Poly3& f, const Poly3& g);

// Monomial-map serialization: keys like "x2y" mean x^2 y, "1" or "" the
// constant term. Throws std::invalid_argument naming the offending key.
Poly3 parse_poly3(const std::map<std::string, double>& monomials);
std::map<std::string, double> poly3_to_map(const Poly3& p);

// ------------------------------- Poly1 -------------------------------------

// Dense real polynomial in one variable; coeffs[k] multiplies q^k.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double evaluate(double q) const;
    Poly1 derivative() const;

    // E[p(q + s)] with s centered Gaussian of variance var; closed form via
    // even moments. This is convolution with the corresponding Gaussian.
    Poly1 gaussian_smooth(double var) const;

    // Global minimum over R; requires even leading degree with positive
    // leading coefficient. Critical points via the companion matrix of p'.
    double global_min() const;

  private:
    std::vector<double> coeffs_;
};

Poly1 parse_poly1(const std::map<std::string, double>& monomials, char var);

}  // namespace semigibbs::poly
