#include "lamina/angle.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace lamina {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt to_big(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

}  // namespace

Degree::Degree(int d) : d_(d) {
    if (d < 2) throw Error("degree must be at least 2");
}

Angle::Angle(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("zero denominator");
    *this = normalize(BigInt(num), BigInt(den));
}

Angle Angle::from_big(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("zero denominator");
    return normalize(num, den);
}

Angle Angle::from_rational(const Rational& r) {
    return normalize(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Angle Angle::normalize(BigInt n, BigInt d) {
    if (d < 0) {
        d = -d;
        n = -n;
    }
    n %= d;
    if (n < 0) n += d;
    BigInt g = boost::multiprecision::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    Angle out;
    if (d < kSmallLimit) {
        out.rep_ = Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    } else {
        out.rep_ = Big{std::move(n), std::move(d)};
    }
    return out;
}

BigInt Angle::numerator() const {
    if (auto s = std::get_if<Small>(&rep_)) return BigInt(s->n);
    return std::get<Big>(rep_).n;
}

BigInt Angle::denominator() const {
    if (auto s = std::get_if<Small>(&rep_)) return BigInt(s->d);
    return std::get<Big>(rep_).d;
}

Rational Angle::value() const { return Rational(numerator(), denominator()); }

bool Angle::is_zero() const {
    auto s = std::get_if<Small>(&rep_);
    return s && s->n == 0;
}

Angle Angle::times(int k) const {
    if (auto s = std::get_if<Small>(&rep_)) {
        i128 n = static_cast<i128>(s->n) * k % s->d;
        if (n < 0) n += s->d;
        i128 g = gcd128(n, s->d);
        Angle out;
        if (n == 0)
            out.rep_ = Small{0, 1};
        else
            out.rep_ = Small{static_cast<std::int64_t>(n / g), static_cast<std::int64_t>(s->d / g)};
        return out;
    }
    const Big& b = std::get<Big>(rep_);
    return normalize(b.n * k, b.d);
}

Angle Angle::plus(const Angle& o) const {
    auto a = std::get_if<Small>(&rep_);
    auto b = std::get_if<Small>(&o.rep_);
    if (a && b) {
        i128 d = static_cast<i128>(a->d) * b->d;
        i128 n = (static_cast<i128>(a->n) * b->d + static_cast<i128>(b->n) * a->d) % d;
        i128 g = gcd128(n, d);
        if (n == 0) return Angle();
        n /= g;
        d /= g;
        if (d < kSmallLimit) {
            Angle out;
            out.rep_ = Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
            return out;
        }
        return normalize(to_big(n), to_big(d));
    }
    return normalize(numerator() * o.denominator() + o.numerator() * denominator(),
                     denominator() * o.denominator());
}

Angle Angle::minus(const Angle& o) const {
    return normalize(numerator() * o.denominator() - o.numerator() * denominator(),
                     denominator() * o.denominator());
}

Angle Angle::preimage(int d, int i) const {
    if (auto s = std::get_if<Small>(&rep_)) {
        i128 n = static_cast<i128>(s->n) + static_cast<i128>(i) * s->d;
        i128 den = static_cast<i128>(s->d) * d;
        i128 g = gcd128(n, den);
        n /= g;
        den /= g;
        n %= den;
        if (den < kSmallLimit) {
            Angle out;
            out.rep_ = n == 0 ? Small{0, 1} : Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(den)};
            return out;
        }
        return normalize(to_big(n), to_big(den));
    }
    const Big& b = std::get<Big>(rep_);
    return normalize(b.n + BigInt(i) * b.d, b.d * d);
}

double Angle::approx() const {
    if (auto s = std::get_if<Small>(&rep_)) return static_cast<double>(s->n) / static_cast<double>(s->d);
    return static_cast<double>(value());
}

std::string Angle::str() const {
    if (auto s = std::get_if<Small>(&rep_)) return std::to_string(s->n) + "/" + std::to_string(s->d);
    const Big& b = std::get<Big>(rep_);
    return b.n.str() + "/" + b.d.str();
}

std::size_t Angle::hash() const {
    if (auto s = std::get_if<Small>(&rep_)) {
        std::size_t h = std::hash<std::int64_t>{}(s->n);
        return h ^ (std::hash<std::int64_t>{}(s->d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    return std::hash<std::string>{}(str());
}

bool operator==(const Angle& a, const Angle& b) { return a.rep_ == b.rep_; }

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    auto x = std::get_if<Angle::Small>(&a.rep_);
    auto y = std::get_if<Angle::Small>(&b.rep_);
    if (x && y) {
        i128 l = static_cast<i128>(x->n) * y->d;
        i128 r = static_cast<i128>(y->n) * x->d;
        return l <=> r;
    }
    BigInt l = a.numerator() * b.denominator();
    BigInt r = b.numerator() * a.denominator();
    if (l < r) return std::strong_ordering::less;
    if (r < l) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Angle parse_angle(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw Error("angle literal needs the form p/q: '" + std::string(text) + "'");
    auto digits = [&](std::string_view s, bool allow_sign) {
        s = trim(s);
        std::string_view body = s;
        if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        if (body.empty()) return false;
        for (char c : body)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw Error("malformed angle literal '" + std::string(text) + "'");
    std::string ns(trim(num));
    if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
    BigInt n(ns);
    BigInt d{std::string(trim(den))};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Angle::from_big(n, d);
}

Rational arc_length(const Angle& a, const Angle& b) {
    Rational r = b.value() - a.value();
    if (r < 0) r += 1;
    return r;
}

Rational circle_distance(const Angle& a, const Angle& b) {
    Rational r = arc_length(a, b);
    Rational s = 1 - r;
    if (r == 0) return r;
    return r < s ? r : s;
}

}  // namespace lamina
