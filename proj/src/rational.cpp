#include "mdt/rational.hpp"

#include "mdt/errors.hpp"

#include <cctype>

namespace mdt {

Rat::Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text, bool strict) {
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    if (!valid_integer(num_part, true)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part[0] == '+' ? num_part.substr(1) : num_part));
    if (slash == std::string_view::npos) return Rat(num);

    const auto den_part = text.substr(slash + 1);
    if (!valid_integer(den_part, false)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt den{std::string(den_part)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    if (strict && (r.den() != den || den == 1)) {
        throw ParseError("rational '" + std::string(text) + "' is not in reduced form");
    }
    return r;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

bool is_integer_multiple(const Rat& value, const Rat& unit) {
    return (value / unit).is_integer();
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace mdt
