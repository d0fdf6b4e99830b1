#include "centerpole/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace centerpole {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("rational point dimension mismatch");
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

RationalPoint::RationalPoint(const LatticePoint& p) : coords_(p.dim()) {
    for (std::size_t i = 0; i < p.dim(); ++i) coords_[i] = Rational(static_cast<long>(p[i]));
}

RationalPoint& RationalPoint::operator+=(const RationalPoint& o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

RationalPoint& RationalPoint::operator-=(const RationalPoint& o) {
    require_same_dim(dim(), o.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

RationalPoint operator-(const RationalPoint& a) {
    RationalPoint out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] = -a.coords_[i];
    return out;
}

RationalPoint operator*(const Rational& s, const RationalPoint& a) {
    RationalPoint out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] = s * a.coords_[i];
    return out;
}

RationalPoint RationalPoint::reflect_through(const RationalPoint& center) const {
    require_same_dim(dim(), center.dim());
    RationalPoint out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = 2 * center.coords_[i] - coords_[i];
    return out;
}

Rational RationalPoint::linf_norm() const {
    Rational m = 0;
    for (const auto& c : coords_) m = std::max(m, abs(c));
    return m;
}

Rational RationalPoint::dot(const RationalPoint& o) const {
    require_same_dim(dim(), o.dim());
    Rational s = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * o.coords_[i];
    return s;
}

bool RationalPoint::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

RationalPoint RationalPoint::head(std::size_t n) const {
    if (n > dim()) throw std::out_of_range("head longer than point");
    return RationalPoint(std::vector<Rational>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(n)));
}

RationalPoint RationalPoint::with_appended(const Rational& t) const {
    RationalPoint out = *this;
    out.coords_.push_back(t);
    return out;
}

std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.dim() <=> b.dim();
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) os << ',';
        os << p[i].get_str();
    }
    return os << ')';
}

}  // namespace centerpole
