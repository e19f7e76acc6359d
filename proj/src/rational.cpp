#include "leibniz/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace leibniz {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty()) throw bad();
    }
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!is_integer(num, true)) throw bad();
    if (!den.empty() && !is_integer(den, false)) throw bad();
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (sgn(d) == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.str();
}

}  // namespace leibniz
