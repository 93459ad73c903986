#include "boxcalc/poly.hpp"

#include <cctype>
#include <sstream>

namespace boxcalc {

Poly Poly::constant(std::size_t dim, const Rat& c) {
    Poly p(dim);
    p.add_term(std::vector<int>(dim, 0), c);
    return p;
}

Poly Poly::variable(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionMismatch("Poly::variable: index out of range");
    std::vector<int> e(dim, 0);
    e[index] = 1;
    Poly p(dim);
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(std::size_t dim, const std::vector<int>& exps, const Rat& c) {
    if (exps.size() != dim) throw DimensionMismatch("Poly::monomial: bad exponent length");
    Poly p(dim);
    p.add_term(exps, c);
    return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (t > d) d = t;
    }
    return d;
}

Rat Poly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::eval(const RatVec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("Poly::eval: dimension mismatch");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < dim_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= v[i];
        sum += t;
    }
    return sum;
}

Poly Poly::dir_derivative(const IntVec& a) const {
    if (a.size() != dim_) throw DimensionMismatch("Poly::dir_derivative: dimension mismatch");
    Poly out(dim_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0 || a[i] == 0) continue;
            std::vector<int> d = e;
            --d[i];
            out.add_term(d, c * Rat(a[i]) * Rat(e[i]));
        }
    }
    return out;
}

Poly Poly::shift(const RatVec& a) const {
    if (a.size() != dim_) throw DimensionMismatch("Poly::shift: dimension mismatch");
    Poly out(dim_);
    for (const auto& [e, c] : terms_) {
        Poly mono = Poly::constant(dim_, c);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            Poly lin = Poly::variable(dim_, i) + Poly::constant(dim_, -a[i]);
            for (int k = 0; k < e[i]; ++k) mono = mono * lin;
        }
        out = out + mono;
    }
    return out;
}

Poly Poly::nabla(const IntVec& a) const {
    return *this - shift(to_rat_vec(a));
}

Poly Poly::operator+(const Poly& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("Poly: dimension mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("Poly: dimension mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("Poly: dimension mismatch");
    Poly out(dim_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(dim_);
            for (std::size_t i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Poly Poly::operator-() const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Rat& s) const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "v" + std::to_string(i + 1);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += vars;
        } else {
            out += rat_to_string(a) + "*" + vars;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t dim;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    Poly parse_expr() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected exponent");
            int k = std::stoi(s.substr(start, pos - start));
            Poly out = Poly::constant(dim, 1);
            for (int i = 0; i < k; ++i) out = out * base;
            return out;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (s[pos] == '-') {
            ++pos;
            return -parse_atom();
        }
        if (s[pos] == 'v') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected variable index after 'v'");
            std::size_t idx = std::stoul(s.substr(start, pos - start));
            if (idx == 0 || idx > dim)
                fail("variable v" + s.substr(start, pos - start) + " out of range for dimension " +
                     std::to_string(dim));
            return Poly::variable(dim, idx - 1);
        }
        if (std::isdigit((unsigned char)s[pos])) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (dstart == pos) fail("expected denominator");
            }
            return Poly::constant(dim, parse_rat(s.substr(start, pos - start)));
        }
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, std::size_t dim) {
    PolyParser p{text, 0, dim};
    Poly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

Poly todd_apply(const std::vector<IntVec>& X, const Poly& p) {
    Poly out = p;
    for (const IntVec& a : X) {
        if (a.size() != p.dim()) throw DimensionMismatch("todd_apply: dimension mismatch");
        Poly acc(out.dim());
        Poly d = out;
        Rat fact = 1;  // (j+1)!
        int j = 0;
        while (!d.is_zero()) {
            fact *= Rat(j + 1);
            acc = acc + d * (j % 2 == 0 ? Rat(1) / fact : -Rat(1) / fact);
            d = d.dir_derivative(a);
            ++j;
        }
        out = acc;
    }
    return out;
}

}  // namespace boxcalc
