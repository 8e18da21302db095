#include "m0n/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "m0n/errors.hpp"

namespace m0n {

namespace {

using QPoly = std::vector<Rat>;

QPoly q_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// exact division, remainder must vanish
QPoly q_div(const QPoly& a, const QPoly& b) {
    QPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (r.size() >= b.size() && !(r = q_trim(std::move(r))).empty() && r.size() >= b.size()) {
        Rat c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    }
    return q_trim(std::move(q));
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(int m) {
    static std::map<int, QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto rec = [&](auto&& self, int k) -> const QPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        QPoly p(k + 1, Rat(0));
        p[0] = -1;
        p[k] = 1;  // x^k - 1
        for (int d = 1; d < k; ++d)
            if (k % d == 0) p = q_div(p, self(self, d));
        return cache.emplace(k, std::move(p)).first->second;
    };
    if (m < 1) throw SizeOutOfRange("cyclotomic order must be positive");
    return rec(rec, m);
}

CycloField::CycloField(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

const CycloField& CycloField::get(int m) {
    static std::map<int, CycloField> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, CycloField(m)).first;
    return it->second;
}

namespace {

std::vector<Rat> reduce_mod_phi(std::vector<Rat> c, const CycloField& f) {
    const auto& phi = f.modulus();
    int d = f.degree();
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        Rat lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (int j = 0; j < d; ++j) c[i - d + j] -= lead * phi[j];
    }
    c.resize(d, Rat(0));
    return c;
}

const CycloField* join_fields(const Cyclo& a, const Cyclo& b) {
    if (a.field() && b.field() && a.field() != b.field() &&
        a.field()->order() != b.field()->order())
        throw UnsupportedFieldExtension("mixed cyclotomic orders");
    return a.field() ? a.field() : b.field();
}

std::vector<Rat> promote(const Cyclo& x, const CycloField* f) {
    std::vector<Rat> c = x.coeffs();
    c.resize(f ? f->degree() : 1, Rat(0));
    return c;
}

}  // namespace

Cyclo::Cyclo(const CycloField& f, std::vector<Rat> coef) : f_(&f), c_(std::move(coef)) {
    if (static_cast<int>(c_.size()) > f.degree()) c_ = reduce_mod_phi(std::move(c_), f);
    c_.resize(f.degree(), Rat(0));
}

Cyclo Cyclo::zeta(const CycloField& f, long long power) {
    long long p = ((power % f.order()) + f.order()) % f.order();
    std::vector<Rat> c(p + 1, Rat(0));
    c[p] = 1;
    return Cyclo(f, std::move(c));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw UnsupportedFieldExtension("value is not rational");
    return c_[0];
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    const CycloField* f = join_fields(a, b);
    auto ca = promote(a, f), cb = promote(b, f);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return f ? Cyclo(*f, std::move(ca)) : Cyclo(ca[0]);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& r : out.c_) r = -r;
    return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const CycloField* f = join_fields(a, b);
    auto ca = promote(a, f), cb = promote(b, f);
    std::vector<Rat> prod(ca.size() + cb.size() - 1, Rat(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
    }
    return f ? Cyclo(*f, std::move(prod)) : Cyclo(prod[0]);
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (!f_) return Cyclo(Rat(1) / c_[0]);
    // extended euclid over Q[x]: s*a + t*phi = gcd
    QPoly a = q_trim(c_), b = f_->modulus();
    QPoly s0{Rat(1)}, s1;
    while (!b.empty()) {
        QPoly q, r = a;
        q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
        while (!(r = q_trim(std::move(r))).empty() && r.size() >= b.size()) {
            Rat c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            q[shift] += c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        }
        q = q_trim(std::move(q));
        // (a, b) <- (b, r); (s0, s1) <- (s1, s0 - q*s1)
        QPoly qs(q.size() + s1.size() == 0 ? 0 : q.size() + s1.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        a = b;
        b = r;
        s0 = s1;
        s1 = q_trim(std::move(s2));
    }
    if (a.size() != 1) throw UnsupportedFieldExtension("element not invertible");
    Rat g = a[0];
    for (auto& r : s0) r /= g;
    return Cyclo(*f_, std::move(s0));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }

bool operator<(const Cyclo& a, const Cyclo& b) {
    const CycloField* f = join_fields(a, b);
    return promote(a, f) < promote(b, f);
}

std::string Cyclo::str() const {
    std::ostringstream os;
    if (!f_ || is_rational()) {
        os << c_[0];
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i];
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int cp_deg(const CPoly& p) { return static_cast<int>(p.size()) - 1; }

CPoly cp_trim(CPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

CPoly cp_add(const CPoly& a, const CPoly& b) {
    CPoly out = a;
    out.resize(std::max(a.size(), b.size()));
    for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    return cp_trim(std::move(out));
}

CPoly cp_sub(const CPoly& a, const CPoly& b) {
    CPoly out = a;
    out.resize(std::max(a.size(), b.size()));
    for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    return cp_trim(std::move(out));
}

CPoly cp_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return cp_trim(std::move(out));
}

CPoly cp_scale(const CPoly& a, const Cyclo& s) {
    CPoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c * s);
    return cp_trim(std::move(out));
}

std::pair<CPoly, CPoly> cp_divrem(const CPoly& a, const CPoly& bin) {
    CPoly b = cp_trim(bin);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    CPoly r = a, q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Cyclo());
    Cyclo lead_inv = b.back().inverse();
    while (!(r = cp_trim(std::move(r))).empty() && r.size() >= b.size()) {
        Cyclo c = r.back() * lead_inv;
        size_t shift = r.size() - b.size();
        q[shift] = q[shift] + c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] = r[shift + i] - c * b[i];
    }
    return {cp_trim(std::move(q)), r};
}

CPoly cp_gcd(CPoly a, CPoly b) {
    a = cp_trim(std::move(a));
    b = cp_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = cp_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = cp_scale(a, a.back().inverse());
    return a;
}

Cyclo cp_eval(const CPoly& p, const Cyclo& x) {
    Cyclo v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

std::vector<std::pair<Cyclo, int>> cp_roots(CPoly p, const std::vector<Cyclo>& candidates) {
    p = cp_trim(std::move(p));
    if (p.empty()) throw std::domain_error("roots of the zero polynomial");
    std::vector<std::pair<Cyclo, int>> out;
    auto peel = [&](const Cyclo& r) {
        CPoly lin{-r, Cyclo(Rat(1))};
        int mult = 0;
        while (cp_deg(p) >= 1) {
            auto [q, rem] = cp_divrem(p, lin);
            if (!rem.empty()) break;
            p = std::move(q);
            ++mult;
        }
        if (mult) out.emplace_back(r, mult);
    };
    while (cp_deg(p) == 1) {
        Cyclo r = -(p[0] / p[1]);
        peel(r);
    }
    if (cp_deg(p) >= 2) {
        for (const auto& c : candidates) {
            if (cp_eval(p, c).is_zero()) peel(c);
            while (cp_deg(p) == 1) peel(-(p[0] / p[1]));
            if (cp_deg(p) < 2) break;
        }
    }
    if (cp_deg(p) >= 1)
        throw UnsupportedFieldExtension("polynomial has roots outside the working field");
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

RatFunc::RatFunc(CPoly n, CPoly d) {
    n = cp_trim(std::move(n));
    d = cp_trim(std::move(d));
    if (d.empty()) throw std::domain_error("rational function with zero denominator");
    if (n.empty()) {
        num = {};
        den = {Cyclo(Rat(1))};
        return;
    }
    CPoly g = cp_gcd(n, d);
    if (cp_deg(g) >= 1) {
        n = cp_divrem(n, g).first;
        d = cp_divrem(d, g).first;
    }
    Cyclo inv = d.back().inverse();
    num = cp_scale(n, inv);
    den = cp_scale(d, inv);
}

RatFunc RatFunc::constant(const Cyclo& v) {
    RatFunc f;
    if (!v.is_zero()) f.num = {v};
    return f;
}

RatFunc RatFunc::variable() {
    RatFunc f;
    f.num = {Cyclo(), Cyclo(Rat(1))};
    return f;
}

bool RatFunc::is_constant() const { return cp_deg(num) <= 0 && cp_deg(den) == 0; }

Cyclo RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num.empty() ? Cyclo() : num[0] / den[0];
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(cp_add(cp_mul(a.num, b.den), cp_mul(b.num, a.den)), cp_mul(a.den, b.den));
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(cp_sub(cp_mul(a.num, b.den), cp_mul(b.num, a.den)), cp_mul(a.den, b.den));
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(cp_mul(a.num, b.num), cp_mul(a.den, b.den));
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RatFunc(cp_mul(a.num, b.den), cp_mul(a.den, b.num));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return cp_sub(cp_mul(a.num, b.den), cp_mul(b.num, a.den)).empty();
}

ValLc val_lc(const RatFunc& f, const Cyclo& z0) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    CPoly lin{-z0, Cyclo(Rat(1))};
    auto strip = [&](CPoly p) {
        int k = 0;
        while (true) {
            auto [q, rem] = cp_divrem(p, lin);
            if (!rem.empty()) break;
            p = std::move(q);
            ++k;
        }
        return std::make_pair(k, p);
    };
    auto [kn, cn] = strip(f.num);
    auto [kd, cd] = strip(f.den);
    return {kn - kd, cp_eval(cn, z0) / cp_eval(cd, z0)};
}

ValLc val_lc_inf(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    return {cp_deg(f.den) - cp_deg(f.num), f.num.back() / f.den.back()};
}

}
