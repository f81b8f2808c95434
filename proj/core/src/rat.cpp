#include "trapcong/rat.hpp"

#include <ostream>

namespace trapcong {

Rat::Rat(const Int& num, const Int& den) : q_() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::optional<Rat> Rat::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Rat abs(const Rat& q) { return q.sign() < 0 ? -q : q; }

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q.sign() < 0) throw std::domain_error("rat_sqrt: negative argument");
    // num/den is canonical, so both parts must be squares.
    auto rn = exact_sqrt(q.num());
    if (!rn) return std::nullopt;
    auto rd = exact_sqrt(q.den());
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

}  // namespace trapcong
