#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfaffian/scalar.hpp"

namespace pfaffian {

/// Exponent vector of a monomial; length equals the arity of the ambient ring.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Graded lexicographic term order, leading terms first.
struct GrlexOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class Poly;

/// The ambient ring F_p[x_1..x_n]: a prime plus the variable names. Polynomials
/// themselves carry only (p, arity); the ring mints, parses and prints them.
class PolyRing {
public:
    PolyRing(std::int64_t p, std::vector<std::string> names);
    PolyRing(std::int64_t p, int nvars);

    std::int64_t prime() const { return p_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    Poly zero() const;
    Poly one() const;
    Poly constant(std::int64_t c) const;
    Poly constant(const Fp& c) const;
    Poly var(int i) const;  // 0-based
    Poly monomial(const ExpVec& e, const Fp& c) const;

    /// Parses sums of terms like "3*z1^2*t2 - z1 + 4".
    Poly parse(const std::string& text) const;
    std::string str(const Poly& f) const;

private:
    std::int64_t p_;
    std::vector<std::string> names_;
};

/// Sparse multivariate polynomial over F_p in a fixed number of variables.
/// No zero coefficients are ever stored.
class Poly {
public:
    Poly(std::int64_t p, int nvars) : p_(p), nvars_(nvars) {}

    std::int64_t prime() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Fp, GrlexOrder>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Fp& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly mul_guarded(const Poly& a, const Poly& b, std::size_t max_terms);
    Poly operator-() const;
    bool operator==(const Poly& b) const { return p_ == b.p_ && nvars_ == b.nvars_ && terms_ == b.terms_; }
    bool operator!=(const Poly& b) const { return !(*this == b); }

    Poly scalar_mul(const Fp& c) const;
    Poly partial_derivative(int i) const;
    Poly power(int e) const;
    /// Repeated squaring with a cap on the intermediate term count.
    Poly power_guarded(int e, std::size_t max_terms) const;

    Fp coefficient_of(const ExpVec& e) const;
    Fp evaluate(const std::vector<Fp>& point) const;

    bool is_constant() const;
    int degree() const;  // max total degree, -1 for zero

private:
    friend class PolyRing;
    void check_compat(const Poly& b) const;

    std::int64_t p_;
    int nvars_;
    std::map<ExpVec, Fp, GrlexOrder> terms_;
};

Poly mul_guarded(const Poly& a, const Poly& b, std::size_t max_terms);

}  // namespace pfaffian
