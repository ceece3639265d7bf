#include <currentlab/errors.hpp>
#include <currentlab/rational.hpp>

#include <cctype>

namespace currentlab {

namespace {

bool all_digits(const std::string& s, size_t from = 0) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    return all_digits(s, (s[0] == '-' || s[0] == '+') ? 1 : 0);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = text;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!is_integer_text(p) || !all_digits(q)) throw ParseError("malformed rational: '" + text + "'");
        mpz_class den(q);
        if (den == 0) throw ParseError("zero denominator: '" + text + "'");
        Rational r(mpz_class(p[0] == '+' ? p.substr(1) : p), den);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        std::string digits = (neg || (!ip.empty() && ip[0] == '+')) ? ip.substr(1) : ip;
        if ((!digits.empty() && !all_digits(digits)) || !all_digits(fp))
            throw ParseError("malformed decimal: '" + text + "'");
        mpz_class num(digits.empty() ? std::string("0") : digits);
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        num = num * scale + mpz_class(fp);
        Rational r(neg ? mpz_class(-num) : num, scale);
        r.canonicalize();
        return r;
    }
    if (!is_integer_text(s)) throw ParseError("malformed rational: '" + text + "'");
    return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpz_class floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

mpz_class ceil_of(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) {
    Rational out = r - Rational(floor_of(r));
    out.canonicalize();
    return out;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace currentlab
