#include "pfaffian/poly.hpp"

#include <cctype>
#include <sstream>

#include "pfaffian/errors.hpp"

namespace pfaffian {

PolyRing::PolyRing(std::int64_t p, std::vector<std::string> names) : p_(p), names_(std::move(names)) {
    require_prime(p_);
}

PolyRing::PolyRing(std::int64_t p, int nvars) : p_(p) {
    require_prime(p_);
    names_.reserve(nvars);
    for (int i = 1; i <= nvars; ++i) names_.push_back("x" + std::to_string(i));
}

Poly PolyRing::zero() const { return Poly(p_, nvars()); }

Poly PolyRing::one() const { return constant(1); }

Poly PolyRing::constant(std::int64_t c) const { return constant(Fp(c, p_)); }

Poly PolyRing::constant(const Fp& c) const {
    Poly f(p_, nvars());
    f.add_term(ExpVec(nvars(), 0), c);
    return f;
}

Poly PolyRing::var(int i) const {
    if (i < 0 || i >= nvars()) throw IndexOutOfRange();
    ExpVec e(nvars(), 0);
    e[i] = 1;
    return monomial(e, Fp(1, p_));
}

Poly PolyRing::monomial(const ExpVec& e, const Fp& c) const {
    if (static_cast<int>(e.size()) != nvars()) throw ArityMismatch();
    Poly f(p_, nvars());
    f.add_term(e, c);
    return f;
}

void Poly::check_compat(const Poly& b) const {
    if (p_ != b.p_) throw ModulusMismatch();
    if (nvars_ != b.nvars_) throw ArityMismatch();
}

void Poly::add_term(const ExpVec& e, const Fp& c) {
    if (static_cast<int>(e.size()) != nvars_) throw ArityMismatch();
    if (c.modulus() != p_) throw ModulusMismatch();
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_compat(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r(p_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) { return mul_guarded(a, b, 0); }

Poly mul_guarded(const Poly& a, const Poly& b, std::size_t max_terms) {
    a.check_compat(b);
    Poly r(a.prime(), a.nvars());
    ExpVec e(a.nvars(), 0);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
            if (max_terms && r.term_count() > max_terms) throw ExpansionTooLarge();
        }
    }
    return r;
}

Poly Poly::scalar_mul(const Fp& c) const {
    if (c.modulus() != p_) throw ModulusMismatch();
    Poly r(p_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) {
        Fp v = coeff * c;
        if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
}

Poly Poly::partial_derivative(int i) const {
    if (i < 0 || i >= nvars_) throw IndexOutOfRange();
    Poly r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Fp v = c * Fp(e[i], p_);
        if (v.is_zero()) continue;
        ExpVec d = e;
        --d[i];
        r.terms_.emplace(d, v);
    }
    return r;
}

Poly Poly::power(int e) const { return power_guarded(e, 0); }

Poly Poly::power_guarded(int e, std::size_t max_terms) const {
    if (e < 0) throw Error("negative exponent");
    Poly acc(p_, nvars_);
    acc.add_term(ExpVec(nvars_, 0), Fp(1, p_));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = mul_guarded(acc, base, max_terms);
        e >>= 1;
        if (e) base = mul_guarded(base, base, max_terms);
    }
    return acc;
}

Fp Poly::coefficient_of(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != nvars_) throw ArityMismatch();
    auto it = terms_.find(e);
    return it == terms_.end() ? Fp(0, p_) : it->second;
}

Fp Poly::evaluate(const std::vector<Fp>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch();
    Fp acc(0, p_);
    for (const auto& [e, c] : terms_) {
        Fp term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) term = term * point[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // grlex order puts a maximal-degree term first
    return total_degree(terms_.begin()->first);
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at '" + s.substr(start) + "'");
        return std::stoll(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected variable at '" + s.substr(start) + "'");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Poly PolyRing::parse(const std::string& text) const {
    Poly result = zero();
    Lexer lx{text};
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;

        Fp coeff(sign, p_);
        ExpVec e(nvars(), 0);
        bool saw_factor = false;
        for (;;) {
            char nxt = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(nxt))) {
                coeff = coeff * Fp(lx.integer(), p_);
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(nxt)) || nxt == '_') {
                std::string name = lx.ident();
                int idx = -1;
                for (int i = 0; i < nvars(); ++i)
                    if (names_[i] == name) {
                        idx = i;
                        break;
                    }
                if (idx < 0) throw ParseError("unknown variable '" + name + "'");
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    exp = static_cast<int>(lx.integer());
                    if (exp < 0) throw ParseError("negative exponent");
                }
                e[idx] += exp;
                saw_factor = true;
            } else {
                break;
            }
            if (lx.peek() == '*') lx.take();
        }
        if (!saw_factor) throw ParseError("empty term");
        result.add_term(e, coeff);
    }
    return result;
}

std::string PolyRing::str(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t v = c.value();
        if (first) {
            first = false;
        } else {
            out << " + ";
        }
        bool unit = (v == 1);
        bool has_vars = total_degree(e) > 0;
        if (!unit || !has_vars) out << v;
        bool lead = unit && has_vars;
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!lead)
                out << "*";
            else
                lead = false;
            out << names_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace pfaffian
