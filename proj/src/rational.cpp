#include "tpalab/rational.hpp"

#include <stdexcept>

namespace tpalab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a rational: \"" + s + "\""); };
    if (s.empty()) throw bad();
    size_t slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_root(const Rational& q, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return q;
    if (sgn(q) < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = abs(q.get_num()), d = q.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    Rational r(rn, rd);
    if (sgn(q) < 0) r = -r;
    r.canonicalize();
    return r;
}

Rational rpow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        return rpow(Rational(1) / q, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace tpalab
