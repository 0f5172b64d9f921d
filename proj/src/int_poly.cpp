#include "heightlab/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace heightlab {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int c, int k) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading(): zero polynomial");
    return c_.back();
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Int(static_cast<long>(k)) * c_[k];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
    if (is_zero()) throw std::invalid_argument("reversed(): zero polynomial");
    if (c_.front() == 0) throw std::invalid_argument("reversed(): root at 0");
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

int IntPoly::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sgn(c_.back());
}

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sgn(c_.back());
    return (degree() % 2 == 0) ? s : -s;
}

int IntPoly::order_at_zero() const {
    int k = 0;
    while (k <= degree() && c_[static_cast<size_t>(k)] == 0) ++k;
    return is_zero() ? 0 : k;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (Int& a : r.c_) a = -a;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(lhs.c_.size() + rhs.c_.size() - 1, Int(0));
    for (size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& p) {
    if (c == 0) return IntPoly();
    IntPoly r(p);
    for (Int& a : r.c_) a *= c;
    return r;
}

namespace {

bool is_integer_literal(const std::string& s) {
    size_t pos = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos)
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    return true;
}

// One symbolic term: [sign][coeff][*]?[x[^exp]]
struct Term {
    Int coeff;
    int exp;
};

Term parse_term(const std::string& s, size_t& pos) {
    Term t{Int(1), 0};
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -sign;
        ++pos;
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    bool have_coeff = !digits.empty();
    if (have_coeff) t.coeff = Int(digits);
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
        ++pos;
        t.exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::string e;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e += s[pos++];
            if (e.empty()) throw std::invalid_argument("polynomial parse: missing exponent");
            t.exp = std::stoi(e);
        }
    } else if (!have_coeff) {
        throw std::invalid_argument("polynomial parse: expected coefficient or x");
    }
    t.coeff *= sign;
    return t;
}

}  // namespace

IntPoly IntPoly::from_string(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("polynomial parse: empty input");

    if (s.find(',') != std::string::npos) {
        std::vector<Int> coeffs;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!is_integer_literal(item))
                throw std::invalid_argument("polynomial parse: bad coefficient '" + item + "'");
            coeffs.emplace_back(item);
        }
        return IntPoly(std::move(coeffs));
    }
    if (s.find('x') == std::string::npos && s.find('X') == std::string::npos) {
        if (!is_integer_literal(s))
            throw std::invalid_argument("polynomial parse: '" + s + "' is not a polynomial");
        return IntPoly(std::vector<Int>{Int(s)});
    }
    std::vector<Int> coeffs;
    size_t pos = 0;
    while (pos < s.size()) {
        Term t = parse_term(s, pos);
        if (static_cast<size_t>(t.exp) >= coeffs.size()) coeffs.resize(t.exp + 1, Int(0));
        coeffs[static_cast<size_t>(t.exp)] += t.coeff;
    }
    return IntPoly(std::move(coeffs));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = coeff(k);
        if (a == 0) continue;
        Int abs_a = abs(a);
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += (a < 0) ? " - " : " + ";
        }
        if (abs_a != 1 || k == 0) out += abs_a.get_str();
        if (k >= 1) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string IntPoly::coeff_csv() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) out += ",";
        out += c_[k].get_str();
    }
    return out;
}

IntPoly normalize(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize: zero polynomial");
    Int c = f.content();
    if (sgn(f.leading()) < 0) c = -c;
    std::vector<Int> out(f.coeffs().size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = f.coeffs()[k] / c;
    return IntPoly(std::move(out));
}

namespace {

// Rational-coefficient polynomials, internal to gcd/division.
using RatVec = std::vector<Rat>;

RatVec to_rat(const IntPoly& f) {
    RatVec v(f.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = Rat(f.coeffs()[k]);
    return v;
}

void rat_trim(RatVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by b over Q; b nonzero.
RatVec rat_rem(RatVec a, const RatVec& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        rat_trim(a);
    }
    return a;
}

IntPoly primitive_from_rat(const RatVec& v) {
    if (v.empty()) return IntPoly();
    Int den = 1;
    for (const Rat& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> z(v.size());
    for (size_t k = 0; k < v.size(); ++k) {
        Rat scaled = v[k] * Rat(den);
        z[k] = scaled.get_num();
    }
    return normalize(IntPoly(std::move(z)));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: both zero");
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    RatVec a = to_rat(f), b = to_rat(g);
    while (!b.empty()) {
        RatVec r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_from_rat(a);
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree()) return std::nullopt;
    RatVec a = to_rat(f);
    const RatVec b = to_rat(g);
    RatVec q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        rat_trim(a);
    }
    if (!a.empty()) return std::nullopt;
    std::vector<Int> out(q.size());
    for (size_t k = 0; k < q.size(); ++k) {
        if (q[k].get_den() != 1) return std::nullopt;
        out[k] = q[k].get_num();
    }
    return IntPoly(std::move(out));
}

}  // namespace heightlab
