#include "semigibbs/polynomial.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace semigibbs::poly {

namespace {
constexpr double kPruneTol = 0.0;  // keep exact zeros out, nothing else
}

// --------------------------------- Poly3 -----------------------------------

Poly3::Poly3(double constant) {
    if (constant != 0.0) terms_[{0, 0, 0}] = constant;
}

Poly3 Poly3::variable(int axis) {
    Mono3 m{0, 0, 0};
    m.at(static_cast<std::size_t>(axis)) = 1;
    return monomial(m, 1.0);
}

Poly3 Poly3::monomial(const Mono3& m, double coeff) {
    Poly3 p;
    p.add_term(m, coeff);
    return p;
}

Poly3& Poly3::add_term(const Mono3& m, double coeff) {
    if (m[0] < 0 || m[1] < 0 || m[2] < 0)
        throw std::invalid_argument("Poly3: negative exponent");
    terms_[m] += coeff;
    if (terms_[m] == 0.0) terms_.erase(m);
    return *this;
}

int Poly3::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
}

double Poly3::evaluate(double x, double y, double z) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_)
        acc += c * std::pow(x, m[0]) * std::pow(y, m[1]) * std::pow(z, m[2]);
    return acc;
}

double Poly3::evaluate_angles(double theta, double phi) const {
    const double s = std::sin(theta);
    return evaluate(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

Poly3 Poly3::derivative(int axis) const {
    Poly3 out;
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [m, c] : terms_) {
        if (m.at(a) == 0) continue;
        Mono3 d = m;
        d.at(a) -= 1;
        out.add_term(d, c * m.at(a));
    }
    return out;
}

Poly3 Poly3::operator+(const Poly3& o) const {
    Poly3 out = *this;
    out += o;
    return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly3 Poly3::operator-(const Poly3& o) const {
    Poly3 out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

Poly3 Poly3::operator*(double s) const {
    Poly3 out;
    if (s == 0.0) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
}

Poly3 Poly3::compose_linear(const std::array<double, 9>& ginv) const {
    // Substitute each variable by the corresponding linear combination.
    std::array<Poly3, 3> sub;
    for (int i = 0; i < 3; ++i) {
        Poly3 s;
        for (int j = 0; j < 3; ++j) {
            const double g = ginv[static_cast<std::size_t>(3 * i + j)];
            if (g != 0.0) s += Poly3::variable(j) * g;
        }
        sub[static_cast<std::size_t>(i)] = s;
    }
    Poly3 out;
    for (const auto& [m, c] : terms_) {
        Poly3 term(c);
        for (int axis = 0; axis < 3; ++axis)
            for (int k = 0; k < m[static_cast<std::size_t>(axis)]; ++k)
                term = term * sub[static_cast<std::size_t>(axis)];
        out += term;
    }
    return out;
}

double Poly3::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::string Poly3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        const char* names = "xyz";
        for (int axis = 0; axis < 3; ++axis) {
            const int e = m[static_cast<std::size_t>(axis)];
            if (e == 0) continue;
            os << "*" << names[axis];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

void Poly3::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (std::abs(it->second) <= kPruneTol) ? terms_.erase(it) : std::next(it);
}

Poly3 poisson_bracket(const Poly3& f, const Poly3& g) {
    // {f,g} = sum over cyclic (a,b,c): (d_a f d_b g - d_b f d_a g) * x_c
    Poly3 out;
    static constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& abc : cyc) {
        const Poly3 da_f = f.derivative(abc[0]);
        const Poly3 db_f = f.derivative(abc[1]);
        const Poly3 da_g = g.derivative(abc[0]);
        const Poly3 db_g = g.derivative(abc[1]);
        out += (da_f * db_g - db_f * da_g) * Poly3::variable(abc[2]);
    }
    return out;
}

// --------------------------- monomial-key parsing ---------------------------

namespace {

// Parses keys like "x2y", "z", "q4", "1", "" into exponents per variable.
std::map<char, int> parse_key(const std::string& key, const std::string& allowed) {
    std::map<char, int> exps;
    std::size_t i = 0;
    if (key == "1" || key.empty()) return exps;
    while (i < key.size()) {
        const char v = key[i];
        if (allowed.find(v) == std::string::npos)
            throw std::invalid_argument("polynomial key '" + key + "': unexpected character '" +
                                        std::string(1, v) + "' (allowed: " + allowed + ")");
        ++i;
        int e = 0;
        bool has_digits = false;
        while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) {
            e = 10 * e + (key[i] - '0');
            has_digits = true;
            ++i;
        }
        exps[v] += has_digits ? e : 1;
    }
    return exps;
}

}  // namespace

Poly3 parse_poly3(const std::map<std::string, double>& monomials) {
    Poly3 p;
    for (const auto& [key, coeff] : monomials) {
        const auto exps = parse_key(key, "xyz");
        Mono3 m{0, 0, 0};
        for (const auto& [v, e] : exps) m[static_cast<std::size_t>(v - 'x')] = e;
        p.add_term(m, coeff);
    }
    return p;
}

std::map<std::string, double> poly3_to_map(const Poly3& p) {
    std::map<std::string, double> out;
    for (const auto& [m, c] : p.terms()) {
        std::string key;
        const char* names = "xyz";
        for (int axis = 0; axis < 3; ++axis) {
            const int e = m[static_cast<std::size_t>(axis)];
            if (e == 0) continue;
            key += names[axis];
            if (e > 1) key += std::to_string(e);
        }
        if (key.empty()) key = "1";
        out[key] = c;
    }
    return out;
}

// --------------------------------- Poly1 -----------------------------------

Poly1::Poly1(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Poly1::evaluate(double q) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Poly1 Poly1::derivative() const {
    if (coeffs_.size() <= 1) return Poly1({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Poly1(std::move(d));
}

Poly1 Poly1::gaussian_smooth(double var) const {
    // E[(q+s)^k] = sum_j C(k,j) q^{k-j} E[s^j], E[s^{2m}] = (2m-1)!! var^m.
    const int deg = degree();
    std::vector<double> out(static_cast<std::size_t>(deg) + 1, 0.0);
    std::vector<double> moment(static_cast<std::size_t>(deg) + 1, 0.0);
    moment[0] = 1.0;
    for (int j = 2; j <= deg; j += 2)
        moment[static_cast<std::size_t>(j)] =
            moment[static_cast<std::size_t>(j - 2)] * var * static_cast<double>(j - 1);
    for (int k = 0; k <= deg; ++k) {
        const double ck = coeffs_[static_cast<std::size_t>(k)];
        if (ck == 0.0) continue;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            if (j % 2 == 0)
                out[static_cast<std::size_t>(k - j)] += ck * binom * moment[static_cast<std::size_t>(j)];
            binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
    }
    return Poly1(std::move(out));
}

double Poly1::global_min() const {
    const int deg = degree();
    if (deg <= 0 || deg % 2 != 0 || coeffs_.back() <= 0.0)
        throw std::invalid_argument(
            "Poly1::global_min: needs even leading degree with positive leading coefficient");
    const Poly1 d = derivative();
    const int dd = d.degree();
    // Companion matrix of the monic derivative.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(dd, dd);
    for (int i = 1; i < dd; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < dd; ++i)
        comp(i, dd - 1) = -d.coeffs()[static_cast<std::size_t>(i)] / d.coeffs().back();
    const Eigen::VectorXcd roots = comp.eigenvalues();
    double best = evaluate(0.0);
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        if (std::abs(roots[i].imag()) > 1e-9 * (1.0 + std::abs(roots[i].real()))) continue;
        best = std::min(best, evaluate(roots[i].real()));
    }
    return best;
}

Poly1 parse_poly1(const std::map<std::string, double>& monomials, char var) {
    std::map<int, double> by_exp;
    const std::string allowed(1, var);
    for (const auto& [key, coeff] : monomials) {
        const auto exps = parse_key(key, allowed);
        int e = 0;
        for (const auto& [v, ee] : exps) e += ee;
        by_exp[e] += coeff;
    }
    int deg = 0;
    for (const auto& [e, c] : by_exp) deg = std::max(deg, e);
    std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1, 0.0);
    for (const auto& [e, c] : by_exp) coeffs[static_cast<std::size_t>(e)] = c;
    return Poly1(std::move(coeffs));
}

}  // namespace semigibbs::poly
