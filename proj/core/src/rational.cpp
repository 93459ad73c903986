#include "boxcalc/rational.hpp"

#include "boxcalc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace boxcalc {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

std::string rat_to_decimal(const Rat& q, int sig) {
    if (q == 0) return "0";
    bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    // decimal exponent e with 10^(e-1) <= a < 10^e
    int e = 0;
    {
        Rat t = a;
        while (t >= 1) { t /= 10; ++e; }
        while (t < Rat(1, 10)) { t *= 10; --e; }
    }
    // round a / 10^e * 10^sig to an integer, half to even
    Rat scaled = a;
    int shift = sig - e;
    for (int i = 0; i < shift; ++i) scaled *= 10;
    for (int i = 0; i < -shift; ++i) scaled /= 10;
    Int fl = rat_floor(scaled);
    Rat frac = scaled - Rat(fl);
    Int mant = fl;
    if (frac > Rat(1, 2) || (frac == Rat(1, 2) && fl % 2 != 0)) ++mant;
    std::string digits = mant.str();
    if ((int)digits.size() > sig) {  // rounding carried into a new digit
        ++e;
        digits.pop_back();
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (e <= 0) {
        out = "0.";
        out.append(-e, '0');
        out += digits;
    } else if ((int)digits.size() <= e) {
        out = digits;
        out.append(e - digits.size(), '0');
    } else {
        out = digits.substr(0, e) + "." + digits.substr(e);
    }
    return neg ? "-" + out : out;
}

std::string vec_to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

RatVec to_rat_vec(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace boxcalc
