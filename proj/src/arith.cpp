#include "sejoin/kernel/arith.hpp"

#include <cctype>

#include "sejoin/errors.hpp"

namespace sejoin {

Integer gcd(const Integer& x, const Integer& y) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Integer lcm(const Integer& x, const Integer& y) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw DomainError("not an integer: '" + std::string(text) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("bad denominator in '" + std::string(text) + "'");
    return make_rational(num, Integer(std::string(den_text), 10));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer floor(const Rational& x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

std::string to_decimal(const Rational& x, int digits, Rounding mode) {
    if (digits < 0) throw DomainError("negative digit count");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = x * Rational(scale);
    Integer units = mode == Rounding::Down ? floor(scaled) : ceil(scaled);
    bool negative = units < 0;
    std::string s = abs(units).get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    return negative ? "-" + s : s;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) throw DomainError("integer_sqrt_exact of a negative number");
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_sqrt_exact(const Rational& x) {
    if (x < 0) return std::nullopt;
    auto num = integer_sqrt_exact(x.get_num());
    auto den = integer_sqrt_exact(x.get_den());
    if (!num || !den) return std::nullopt;
    return make_rational(*num, *den);
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer require_integral(const Rational& x, const char* what) {
    if (!is_integral(x))
        throw ConsistencyError(std::string(what) + " is not an integer: " + to_string(x));
    return x.get_num();
}

}  // namespace sejoin
