#include "form.hpp"

#include <sstream>

namespace nilform {

int cmp_index_sets(uint32_t a, uint32_t b) {
    while (a && b) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib ? -1 : 1;
        a &= a - 1;
        b &= b - 1;
    }
    if (a) return 1;
    if (b) return -1;
    return 0;
}

bool MonomialOrder::operator()(const FormMonomial& a, const FormMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.p() != b.p()) return a.p() > b.p();  // more holomorphic factors first
    int c = cmp_index_sets(a.holo, b.holo);
    if (c != 0) return c < 0;
    return cmp_index_sets(a.anti, b.anti) < 0;
}

int merge_sign(uint32_t a, uint32_t b) {
    // inversions: for each factor in b, count factors of a above it
    int inv = 0;
    uint32_t bb = b;
    while (bb) {
        int i = __builtin_ctz(bb);
        inv += __builtin_popcount(a >> (i + 1));
        bb &= bb - 1;
    }
    return (inv & 1) ? -1 : 1;
}

std::vector<int> mask_indices(uint32_t mask) {
    std::vector<int> r;
    while (mask) {
        r.push_back(__builtin_ctz(mask) + 1);
        mask &= mask - 1;
    }
    return r;
}

uint32_t mask_of(const std::vector<int>& indices) {
    uint32_t m = 0;
    for (int i : indices) m |= 1u << (i - 1);
    return m;
}

void check_same_dimension(const InvariantForm& a, const InvariantForm& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

InvariantForm InvariantForm::monomial(int n, FormMonomial m, ParamScalar c) {
    InvariantForm f(n);
    f.add_term(m, c);
    return f;
}

void InvariantForm::add_term(const FormMonomial& m, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const ParamScalar* InvariantForm::coefficient(const FormMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

InvariantForm InvariantForm::operator-() const {
    InvariantForm r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    else check_same_dimension(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    else check_same_dimension(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

InvariantForm InvariantForm::scaled(const ParamScalar& c) const {
    InvariantForm r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
    check_same_dimension(a, b);
    InvariantForm r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if ((ma.holo & mb.holo) || (ma.anti & mb.anti)) continue;
            int s = merge_sign(ma.holo, mb.holo) * merge_sign(ma.anti, mb.anti);
            // holomorphic block of b crosses the antiholomorphic block of a
            if ((mb.p() * ma.q()) & 1) s = -s;
            FormMonomial m{ma.holo | mb.holo, ma.anti | mb.anti};
            ParamScalar c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

InvariantForm InvariantForm::conj() const {
    InvariantForm r(n_);
    for (const auto& [m, c] : terms_) {
        // conj(eta^I ^ etabar^J) = etabar^I ^ eta^J = (-1)^{pq} eta^J ^ etabar^I
        ParamScalar cc = c.conj();
        if ((m.p() * m.q()) & 1) cc = -cc;
        r.add_term(FormMonomial{m.anti, m.holo}, cc);
    }
    return r;
}

InvariantForm InvariantForm::project(int p, int q) const {
    InvariantForm r(n_);
    for (const auto& [m, c] : terms_)
        if (m.p() == p && m.q() == q) r.terms_.emplace(m, c);
    return r;
}

bool InvariantForm::homogeneous(int p, int q) const {
    for (const auto& [m, c] : terms_)
        if (m.p() != p || m.q() != q) return false;
    return true;
}

std::vector<std::pair<int, int>> InvariantForm::bidegrees() const {
    std::vector<std::pair<int, int>> r;
    for (const auto& [m, c] : terms_) {
        std::pair<int, int> pq{m.p(), m.q()};
        if (r.empty() || r.back() != pq) {
            bool seen = false;
            for (auto& x : r)
                if (x == pq) seen = true;
            if (!seen) r.push_back(pq);
        }
    }
    return r;
}

bool InvariantForm::is_numeric() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_numeric()) return false;
    return true;
}

InvariantForm InvariantForm::substituted(int param, const GaussianRational& value) const {
    InvariantForm r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.substituted(param, value));
    return r;
}

InvariantForm InvariantForm::derivative(int param) const {
    InvariantForm r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.derivative(param));
    return r;
}

std::string monomial_str(const FormMonomial& m) {
    std::ostringstream os;
    os << "e[";
    bool first = true;
    for (int i : mask_indices(m.holo)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "|";
    first = true;
    for (int i : mask_indices(m.anti)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "]";
    return os.str();
}

std::string InvariantForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool needs_parens = m.degree() > 0 && c.num().term_count() > 1 &&
                            (c.den().is_constant() && c.den().constant_value().is_one());
        std::string cs = c.str();
        // join with " - " when the whole term is a negated product
        bool neg = !needs_parens && !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.degree() == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
            os << monomial_str(m);
            continue;
        }
        if (needs_parens) cs = "(" + cs + ")";
        os << cs << "*" << monomial_str(m);
    }
    return os.str();
}

}  // namespace nilform
