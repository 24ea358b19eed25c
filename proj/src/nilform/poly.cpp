#include "poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nilform {

int total_degree(const Expo& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GradedLex::operator()(const Expo& a, const Expo& b) const {
    // "less" in map order == graded-lex GREATER, so iteration starts at the
    // leading term.
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors
}

Poly Poly::constant(RegistryPtr reg, GaussianRational c) {
    Poly p(std::move(reg));
    if (!c.is_zero()) p.terms_.emplace(Expo(p.reg_ ? p.reg_->var_count() : 0, 0), std::move(c));
    return p;
}

Poly Poly::variable(RegistryPtr reg, int param_index, bool conjugated) {
    Poly p(std::move(reg));
    if (conjugated && p.reg_->is_real(param_index)) conjugated = false;
    Expo e(p.reg_->var_count(), 0);
    int v = conjugated ? ParamRegistry::conj_var_of(param_index) : ParamRegistry::var_of(param_index);
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
}

GaussianRational Poly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

const Expo& Poly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->first;
}

const GaussianRational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Expo& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(reg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!reg_) reg_ = o.reg_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!reg_) reg_ = o.reg_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.reg_ ? a.reg_ : b.reg_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Expo e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<uint16_t>(e[k] + eb[k]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly r(reg_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

int Poly::compare(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GradedLex lt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return -1;
        if (lt(ib->first, ia->first)) return 1;
        if (ia->second < ib->second) return -1;
        if (ib->second < ia->second) return 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Poly Poly::conj() const {
    Poly r(reg_);
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        for (std::size_t k = 0; k + 1 < f.size(); k += 2) {
            if (!reg_->is_real(static_cast<int>(k / 2))) std::swap(f[k], f[k + 1]);
        }
        r.add_term(f, c.conj());
    }
    return r;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
    return d;
}

int Poly::max_total_degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool Poly::uses_var(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(var)] != 0) return true;
    return false;
}

std::vector<int> Poly::vars_used() const {
    std::vector<int> r;
    if (!reg_) return r;
    for (std::size_t v = 0; v < reg_->var_count(); ++v)
        if (uses_var(static_cast<int>(v))) r.push_back(static_cast<int>(v));
    return r;
}

bool Poly::uses_param(int param) const {
    return uses_var(ParamRegistry::var_of(param)) || uses_var(ParamRegistry::conj_var_of(param));
}

std::vector<int> Poly::params_used() const {
    std::vector<int> r;
    if (!reg_) return r;
    for (std::size_t k = 0; k < reg_->size(); ++k)
        if (uses_param(static_cast<int>(k))) r.push_back(static_cast<int>(k));
    return r;
}

Poly Poly::derivative_var(int var) const {
    Poly r(reg_);
    auto uv = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[uv] == 0) continue;
        Expo f = e;
        f[uv] -= 1;
        r.add_term(f, c * GaussianRational(static_cast<long>(e[uv])));
    }
    return r;
}

Poly Poly::substituted(int param, const GaussianRational& value) const {
    if (reg_->is_real(param) && !value.is_real())
        throw DomainError("real parameter '" + reg_->name(param) + "' assigned non-real value " + value.str());
    Poly r(reg_);
    auto v0 = static_cast<std::size_t>(ParamRegistry::var_of(param));
    auto v1 = static_cast<std::size_t>(ParamRegistry::conj_var_of(param));
    GaussianRational cval = value.conj();
    for (const auto& [e, c] : terms_) {
        GaussianRational coeff = c;
        for (uint16_t k = 0; k < e[v0]; ++k) coeff *= value;
        for (uint16_t k = 0; k < e[v1]; ++k) coeff *= cval;
        Expo f = e;
        f[v0] = 0;
        f[v1] = 0;
        r.add_term(f, coeff);
    }
    return r;
}

GaussianRational Poly::evaluated(const std::map<int, GaussianRational>& assignment) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            int param = ParamRegistry::param_of_var(static_cast<int>(v));
            auto it = assignment.find(param);
            if (it == assignment.end())
                throw DomainError("missing parameter: " + reg_->name(param));
            GaussianRational val = ParamRegistry::var_is_conj(static_cast<int>(v)) ? it->second.conj() : it->second;
            if (reg_->is_real(param) && !it->second.is_real())
                throw DomainError("real parameter '" + reg_->name(param) + "' assigned non-real value");
            for (uint16_t k = 0; k < e[v]; ++k) term *= val;
        }
        acc += term;
    }
    return acc;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    GaussianRational lc = leading_coefficient();
    if (lc.is_one()) return *this;
    Poly r(reg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / lc);
    return r;
}

bool Poly::divisible_by(const Poly& g) const {
    if (g.is_zero()) return is_zero();
    Poly r = *this;
    const Expo& lg = g.leading_monomial();
    const GaussianRational& cg = g.leading_coefficient();
    while (!r.is_zero()) {
        const Expo& lr = r.leading_monomial();
        Expo q(lr.size());
        for (std::size_t k = 0; k < lr.size(); ++k) {
            if (lr[k] < lg[k]) return false;
            q[k] = static_cast<uint16_t>(lr[k] - lg[k]);
        }
        GaussianRational qc = r.leading_coefficient() / cg;
        Poly qt(reg_);
        qt.terms_.emplace(std::move(q), std::move(qc));
        r -= qt * g;
    }
    return true;
}

Poly Poly::div_exact(const Poly& g) const {
    if (g.is_zero()) throw DomainError("exact division by zero polynomial");
    Poly r = *this, quot(reg_);
    const Expo& lg = g.leading_monomial();
    const GaussianRational& cg = g.leading_coefficient();
    while (!r.is_zero()) {
        const Expo& lr = r.leading_monomial();
        Expo q(lr.size());
        for (std::size_t k = 0; k < lr.size(); ++k) {
            if (lr[k] < lg[k]) throw DomainError("inexact polynomial division");
            q[k] = static_cast<uint16_t>(lr[k] - lg[k]);
        }
        GaussianRational qc = r.leading_coefficient() / cg;
        Poly qt(reg_);
        qt.terms_.emplace(std::move(q), std::move(qc));
        quot += qt;
        r -= qt * g;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// multivariate gcd: monomial content + primitive pseudo-remainder sequences

namespace {

// dense view in one variable; coefficients are polynomials without that variable
struct UniView {
    std::vector<Poly> coeff;  // index = degree in the main variable
    int deg() const { return static_cast<int>(coeff.size()) - 1; }
    void trim() {
        while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
    }
};

UniView to_uni(const Poly& p, int var) {
    UniView u;
    auto uv = static_cast<std::size_t>(var);
    int d = p.degree_in(var);
    u.coeff.assign(static_cast<std::size_t>(d + 1), Poly(p.registry()));
    for (const auto& [e, c] : p.terms()) {
        Expo f = e;
        uint16_t k = f[uv];
        f[uv] = 0;
        u.coeff[k].add_term(f, c);
    }
    return u;
}

Poly from_uni(const UniView& u, int var, const RegistryPtr& reg) {
    Poly p(reg);
    auto uv = static_cast<std::size_t>(var);
    for (std::size_t k = 0; k < u.coeff.size(); ++k) {
        for (const auto& [e, c] : u.coeff[k].terms()) {
            Expo f = e;
            f[uv] = static_cast<uint16_t>(k);
            p.add_term(f, c);
        }
    }
    return p;
}

Poly uni_content(const UniView& u) {
    Poly c;
    bool first = true;
    for (const auto& q : u.coeff) {
        if (q.is_zero()) continue;
        if (first) {
            c = q;
            first = false;
        } else {
            c = Poly::gcd(c, q);
        }
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

void uni_divide(UniView& u, const Poly& d) {
    if (d.is_constant() && d.constant_value().is_one()) return;
    for (auto& q : u.coeff)
        if (!q.is_zero()) q = q.div_exact(d);
}

// pseudo-remainder of a by b in the main variable (both trimmed, deg a >= deg b >= 0)
UniView pseudo_rem(UniView a, const UniView& b) {
    const Poly& lb = b.coeff.back();
    while (a.deg() >= b.deg() && !a.coeff.empty()) {
        int shift = a.deg() - b.deg();
        Poly la = a.coeff.back();
        UniView next;
        next.coeff.assign(static_cast<std::size_t>(a.deg()), Poly(la.registry()));
        // next = lb*a - la*x^shift*b, top term cancels
        for (int k = 0; k < a.deg(); ++k) {
            Poly v = a.coeff[static_cast<std::size_t>(k)] * lb;
            if (k >= shift && k - shift <= b.deg()) v -= la * b.coeff[static_cast<std::size_t>(k - shift)];
            next.coeff[static_cast<std::size_t>(k)] = std::move(v);
        }
        next.trim();
        a = std::move(next);
        if (a.coeff.empty()) break;
    }
    return a;
}

// classic monic Euclid for two univariate polynomials over Q(i) in the same
// variable; coefficient growth stays polynomial
Poly gcd_univariate(const Poly& a, const Poly& b, int var, const RegistryPtr& reg) {
    auto to_dense = [&](const Poly& p) {
        std::vector<GaussianRational> c(static_cast<std::size_t>(p.degree_in(var) + 1), GaussianRational(0));
        auto uv = static_cast<std::size_t>(var);
        for (const auto& [e, v] : p.terms()) c[e[uv]] = v;
        return c;
    };
    auto trim = [](std::vector<GaussianRational>& c) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    };
    std::vector<GaussianRational> A = to_dense(a), B = to_dense(b);
    while (!B.empty()) {
        // A mod B with monic B
        GaussianRational lb = B.back();
        for (auto& x : B) x = x / lb;
        while (A.size() >= B.size() && !A.empty()) {
            GaussianRational f = A.back();
            std::size_t off = A.size() - B.size();
            for (std::size_t k = 0; k < B.size(); ++k) A[off + k] -= f * B[k];
            trim(A);
        }
        std::swap(A, B);
    }
    Poly g(reg);
    Expo e(reg->var_count(), 0);
    GaussianRational la = A.empty() ? GaussianRational(1) : A.back();
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (A[k].is_zero()) continue;
        e[static_cast<std::size_t>(var)] = static_cast<uint16_t>(k);
        g.add_term(e, A[k] / la);
    }
    return g;
}

// gcd of polynomials with trivial monomial content
Poly gcd_core(const Poly& a, const Poly& b) {
    const RegistryPtr& reg = a.registry() ? a.registry() : b.registry();
    if (a.is_constant() || b.is_constant()) return Poly::constant(reg, GaussianRational(1));
    if (Poly::compare(a.monic(), b.monic()) == 0) return a.monic();

    {
        std::vector<int> va = a.vars_used(), vb = b.vars_used();
        if (va.size() == 1 && vb.size() == 1 && va[0] == vb[0])
            return gcd_univariate(a, b, va[0], reg);
    }

    // main variable: genuinely common to both, minimizing the smaller degree
    std::vector<int> va = a.vars_used();
    int best = -1, bestdeg = 0;
    for (int v : va) {
        int db = b.degree_in(v);
        if (db <= 0) continue;
        int da = a.degree_in(v);
        int m = std::min(da, db);
        if (best < 0 || m < bestdeg) {
            best = v;
            bestdeg = m;
        }
    }
    if (best < 0) return Poly::constant(reg, GaussianRational(1));

    UniView A = to_uni(a, best), B = to_uni(b, best);
    Poly contA = uni_content(A), contB = uni_content(B);
    uni_divide(A, contA);
    uni_divide(B, contB);
    Poly cont = Poly::gcd(contA, contB);

    if (A.deg() < B.deg()) std::swap(A, B);
    while (true) {
        UniView R = pseudo_rem(A, B);
        if (R.coeff.empty()) break;
        Poly cr = uni_content(R);
        uni_divide(R, cr);
        // unit normalization keeps the rational coefficients small
        GaussianRational lu = R.coeff.back().leading_coefficient();
        if (!lu.is_one()) {
            GaussianRational inv = GaussianRational(1) / lu;
            for (auto& qq : R.coeff)
                if (!qq.is_zero()) qq = qq.scaled(inv);
        }
        A = std::move(B);
        B = std::move(R);
        if (B.deg() == 0) {
            // primitive degree-0 remainder: gcd in the main variable is trivial
            B.coeff[0] = Poly::constant(reg, GaussianRational(1));
            break;
        }
    }
    Poly g = from_uni(B, best, reg);
    return (cont * g).monic();
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const RegistryPtr& reg = a.reg_ ? a.reg_ : b.reg_;

    // factor out the monomial content of each side first
    std::size_t nv = a.terms_.begin()->first.size();
    Expo ma(nv, 0), mb(nv, 0), mg(nv, 0);
    auto min_expo = [nv](const Poly& p, Expo& m) {
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (std::size_t k = 0; k < nv; ++k) m[k] = std::min(m[k], e[k]);
            }
        }
    };
    min_expo(a, ma);
    min_expo(b, mb);
    bool any = false;
    for (std::size_t k = 0; k < nv; ++k) {
        mg[k] = std::min(ma[k], mb[k]);
        if (ma[k] || mb[k]) any = true;
    }
    Poly a1 = a, b1 = b;
    if (any) {
        auto strip = [&](const Poly& p, const Expo& m) {
            Poly r(reg);
            for (const auto& [e, c] : p.terms()) {
                Expo f = e;
                for (std::size_t k = 0; k < nv; ++k) f[k] = static_cast<uint16_t>(f[k] - m[k]);
                r.add_term(f, c);
            }
            return r;
        };
        a1 = strip(a, ma);
        b1 = strip(b, mb);
    }
    Poly core = gcd_core(a1, b1);
    bool mg_nonzero = false;
    for (auto x : mg)
        if (x) mg_nonzero = true;
    if (mg_nonzero) {
        Poly mono(reg);
        mono.add_term(mg, GaussianRational(1));
        core = core * mono;
    }
    return core.monic();
}

// ---------------------------------------------------------------------------

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += reg_->var_name(static_cast<int>(v));
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        // choose a printed sign so that "a - b" renders without "+ -"
        GaussianRational cc = c;
        bool neg = false;
        if (cc.im() == 0 ? cc.re() < 0 : (cc.re() == 0 && cc.im() < 0)) {
            neg = true;
            cc = -cc;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool mixed = cc.re() != 0 && cc.im() != 0;
        if (mono.empty()) {
            os << (mixed ? "(" + cc.str() + ")" : cc.str());
        } else if (cc.is_one()) {
            os << mono;
        } else if (mixed) {
            os << "(" << cc.str() << ")*" << mono;
        } else {
            os << cc.str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace nilform
