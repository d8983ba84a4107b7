#include "besselcross/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace besselcross {

Rat rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat rat(const Int &n, const Int &d) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

namespace {

Rat parse_decimal(const std::string &s) {
    // [sign] digits [. digits] [eE [sign] digits]
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
        seen_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_len;
            seen_digit = true;
        }
    }
    long exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            eneg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("rat_from_string: bad exponent in '" + s + "'");
        long e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            e = e * 10 + (s[pos++] - '0');
            if (e > 1000000) throw std::invalid_argument("rat_from_string: exponent out of range");
        }
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || pos != s.size())
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");

    Int mant(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;
    long net = exp10 - frac_len;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    return net >= 0 ? Rat(mant * p10) : rat(mant, p10);
}

} // namespace

Rat rat_from_string(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    if (s.find('/') != std::string::npos) {
        Rat q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
        if (sgn(Rat(q.get_den())) == 0) throw std::invalid_argument("rat_from_string: zero denominator");
        q.canonicalize();
        return q;
    }
    if (std::size_t caret = s.find('^'); caret != std::string::npos) {
        Rat base = rat_from_string(s.substr(0, caret));
        long e = std::stol(s.substr(caret + 1));
        return rat_pow(base, e);
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);
    Int z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    return Rat(z);
}

Rat rat_pow(const Rat &base, long exp) {
    if (exp == 0) return Rat(1);
    if (sgn(base) == 0) {
        if (exp < 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rat(0);
    }
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exp < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

std::string rat_to_string(const Rat &q) {
    return q.get_str();
}

std::string decimal_string(const Rat &q, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
    const bool neg = sgn(q) < 0;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int num = abs(q.get_num()) * p10;
    const Int &den = q.get_den();
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half to even on the last kept digit
    Int twice = rem * 2;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t())))
        quot += 1;

    std::string body = quot.get_str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (neg && quot != 0) out.insert(0, 1, '-');
    return out;
}

} // namespace besselcross
