#include "dmf/printer.hpp"

#include <sstream>

namespace dmf {

namespace {

constexpr const char* kDelta = "Δ'";  // Δ'
constexpr const char* kDot = "·";     // ·

// balanced representative in (-p/2, p/2] for prime fields; plain encoding
// otherwise
int balanced(const FieldSpec& F, Fq a) {
    if (F.e() > 1) return int(a);
    int v = int(a);
    return v > F.p() / 2 ? v - F.p() : v;
}

// one polynomial term, descending join handled by caller
void append_poly_term(std::ostringstream& os, bool first, int coeff, int expo) {
    int abs = coeff < 0 ? -coeff : coeff;
    if (first) {
        if (coeff < 0) os << "-";
    } else {
        os << (coeff < 0 ? "-" : "+");
    }
    if (abs != 1 || expo == 0) os << abs;
    if (expo >= 1) {
        os << "T";
        if (expo > 1) os << "^" << expo;
    }
}

}  // namespace

std::string poly_to_text(const FieldSpec& F, const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.deg(); i >= 0; --i) {
        if (!p.c[size_t(i)]) continue;
        append_poly_term(os, first, balanced(F, p.c[size_t(i)]), i);
        first = false;
    }
    return os.str();
}

std::string rat_to_text(const FieldSpec& F, const Rat& c) {
    std::string num = poly_to_text(F, c.num);
    if (c.den.deg() == 0) return num;
    std::string den = poly_to_text(F, c.den);
    bool num_paren = c.num.c.size() && [&] {
        int nz = 0;
        for (auto x : c.num.c) nz += x != 0;
        return nz > 1;
    }();
    std::ostringstream os;
    if (num_paren) os << "(" << num << ")";
    else os << num;
    os << "/(" << den << ")";
    return os.str();
}

namespace {

int poly_nonzero_terms(const Poly& p) {
    int nz = 0;
    for (auto x : p.c) nz += x != 0;
    return nz;
}

struct TermText {
    bool neg = false;
    std::string body;
    bool needs_parens = false;  // when used as a factor of t^n
};

// renders one monomial term of a coefficient; sign is emitted separately so
// series joins read naturally
TermText monomial_term_text(const FieldSpec& F, const Monomial& m, Rat c) {
    bool neg = false;
    // extract the sign of the numerator's leading coefficient (prime fields)
    if (F.e() == 1 && !c.num.is_zero() && balanced(F, c.num.lead()) < 0) {
        neg = true;
        for (auto& x : c.num.c) x = F.neg(x);
    }
    std::ostringstream gpart;
    bool have_g = false;
    for (size_t i = 0; i < m.gexp.size(); ++i) {
        if (!m.gexp[i]) continue;
        if (have_g) gpart << kDot;
        gpart << "g'_" << (i + 1);
        if (m.gexp[i] != 1) gpart << "^" << m.gexp[i];
        have_g = true;
    }
    if (m.dexp) {
        if (have_g) gpart << kDot;
        gpart << kDelta;
        if (m.dexp != 1) gpart << "^" << m.dexp;
        have_g = true;
    }
    bool rat_is_one = c == Rat::one();
    bool needs_parens = c.den.deg() > 0 || (!have_g && poly_nonzero_terms(c.num) > 1);
    std::ostringstream body;
    if (!have_g) {
        body << rat_to_text(F, c);
    } else if (rat_is_one) {
        body << gpart.str();
    } else if (c.den.deg() == 0) {
        // polynomial scalar in front: parenthesize multi-term polynomials
        if (poly_nonzero_terms(c.num) > 1)
            body << "(" << poly_to_text(F, c.num) << ")" << kDot << gpart.str();
        else
            body << poly_to_text(F, c.num) << kDot << gpart.str();
    } else {
        // proper fraction: g-part joins the numerator
        if (poly_nonzero_terms(c.num) == 1 && c.num.deg() == 0 && c.num.lead() == 1)
            body << gpart.str();
        else if (poly_nonzero_terms(c.num) > 1)
            body << "(" << poly_to_text(F, c.num) << ")" << kDot << gpart.str();
        else
            body << poly_to_text(F, c.num) << kDot << gpart.str();
        body << "/(" << poly_to_text(F, c.den) << ")";
    }
    return {neg, body.str(), needs_parens};
}

}  // namespace

std::string coeff_to_text(const CoefficientElement& c) {
    if (c.is_zero()) return "0";
    const FieldSpec& F = c.spec().field();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : c.terms()) {
        TermText t = monomial_term_text(F, m, v);
        if (first) {
            if (t.neg) os << "-";
        } else {
            os << (t.neg ? " - " : " + ");
        }
        os << t.body;
        first = false;
    }
    return os.str();
}

std::string series_to_text(const TruncatedSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : f.terms()) {
        bool neg = false;
        std::string body;
        if (c.nterms() == 1) {
            const auto& [m, v] = *c.terms().begin();
            TermText mt = monomial_term_text(f.spec().field(), m, v);
            neg = mt.neg;
            body = mt.body;
            bool trivial_body = body == "1";
            if (n > 0) {
                std::ostringstream ts;
                if (!trivial_body) {
                    if (mt.needs_parens) ts << "(" << body << ")" << kDot;
                    else ts << body << kDot;
                }
                ts << "t";
                if (n > 1) ts << "^" << n;
                body = ts.str();
            }
        } else {
            body = "(" + coeff_to_text(c) + ")";
            if (n > 0) {
                body += kDot;
                body += "t";
                if (n > 1) body += "^" + std::to_string(n);
            }
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        os << body;
        first = false;
    }
    if (!first) os << " + ";
    os << "O(t^" << f.prec() << ")";
    return os.str();
}

std::string series_to_text(const std::string& label, const TruncatedSeries& f) {
    return label + " = " + series_to_text(f);
}

}  // namespace dmf
