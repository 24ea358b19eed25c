#include "metric.hpp"

#include <algorithm>

namespace nilform {

HermitianMetric HermitianMetric::diagonal(int n, RegistryPtr reg) {
    HermitianMetric m(n, reg);
    m.F_.assign(static_cast<std::size_t>(n * n), ParamScalar(reg));
    for (int j = 0; j < n; ++j)
        m.F_[static_cast<std::size_t>(j * n + j)] = ParamScalar::constant(reg, GaussianRational(1));
    return m;
}

HermitianMetric HermitianMetric::from_entries(int n, RegistryPtr reg,
                                              const std::map<std::pair<int, int>, ParamScalar>& entries) {
    HermitianMetric m(n, reg);
    m.F_.assign(static_cast<std::size_t>(n * n), ParamScalar(reg));
    for (const auto& [jk, v] : entries) {
        auto [j, k] = jk;
        if (j < 1 || j > n || k < 1 || k > n) throw DomainError("metric entry index out of range");
        m.F_[static_cast<std::size_t>((j - 1) * n + (k - 1))] = v;
    }
    // fill the lower triangle from hermiticity; verify explicit pairs
    for (int j = 1; j <= n; ++j) {
        for (int k = j; k <= n; ++k) {
            ParamScalar& up = m.F_[static_cast<std::size_t>((j - 1) * n + (k - 1))];
            ParamScalar& lo = m.F_[static_cast<std::size_t>((k - 1) * n + (j - 1))];
            if (j == k) {
                if (up != up.conj()) throw DomainError("metric diagonal entry F_" + std::to_string(j) +
                                                       std::to_string(j) + " must be real");
                continue;
            }
            bool has_up = !up.is_zero(), has_lo = !lo.is_zero();
            if (has_up && has_lo) {
                if (lo != up.conj()) throw DomainError("metric not Hermitian at (" + std::to_string(j) + "," +
                                                       std::to_string(k) + ")");
            } else if (has_up) {
                lo = up.conj();
            } else if (has_lo) {
                up = lo.conj();
            }
        }
    }
    return m;
}

const ParamScalar& HermitianMetric::entry(int j, int k) const {
    return F_[static_cast<std::size_t>((j - 1) * n_ + (k - 1))];
}

bool HermitianMetric::is_diagonal() const {
    for (int j = 1; j <= n_; ++j)
        for (int k = 1; k <= n_; ++k)
            if (j != k && !entry(j, k).is_zero()) return false;
    return true;
}

bool HermitianMetric::is_unit_diagonal() const {
    if (!is_diagonal()) return false;
    for (int j = 1; j <= n_; ++j) {
        const ParamScalar& e = entry(j, j);
        if (!e.is_constant() || !e.constant_value().is_one()) return false;
    }
    return true;
}

InvariantForm HermitianMetric::fundamental_form() const {
    InvariantForm w(n_);
    ParamScalar half_i = ParamScalar::constant(reg_, GaussianRational(Rational(0), Rational(1, 2)));
    for (int j = 1; j <= n_; ++j) {
        for (int k = 1; k <= n_; ++k) {
            const ParamScalar& f = entry(j, k);
            if (f.is_zero()) continue;
            w.add_term(FormMonomial{1u << (j - 1), 1u << (k - 1)}, f * half_i);
        }
    }
    return w;
}

InvariantForm HermitianMetric::fundamental_power(int k) const {
    if (k < 0 || k > n_) throw DomainError("fundamental power out of range");
    InvariantForm acc = InvariantForm::scalar(n_, ParamScalar::constant(reg_, GaussianRational(1)));
    InvariantForm w = fundamental_form();
    for (int i = 0; i < k; ++i) acc = wedge(acc, w);
    return acc;
}

bool HermitianMetric::positive_definite() const {
    // exact leading-principal-minor test; numeric metrics only
    for (int k = 1; k <= n_; ++k) {
        std::vector<GaussianRational> M(static_cast<std::size_t>(k * k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                const ParamScalar& e = entry(r + 1, c + 1);
                if (!e.is_numeric()) throw RefusedError("positivity over symbolic parameters refused");
                M[static_cast<std::size_t>(r * k + c)] = e.constant_value();
            }
        // determinant by elimination
        GaussianRational det(1);
        for (int c = 0; c < k; ++c) {
            int piv = -1;
            for (int r = c; r < k; ++r)
                if (!M[static_cast<std::size_t>(r * k + c)].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return false;
            if (piv != c) {
                for (int x = 0; x < k; ++x)
                    std::swap(M[static_cast<std::size_t>(piv * k + x)], M[static_cast<std::size_t>(c * k + x)]);
                det = -det;
            }
            det *= M[static_cast<std::size_t>(c * k + c)];
            GaussianRational inv = GaussianRational(1) / M[static_cast<std::size_t>(c * k + c)];
            for (int r = c + 1; r < k; ++r) {
                GaussianRational f = M[static_cast<std::size_t>(r * k + c)] * inv;
                if (f.is_zero()) continue;
                for (int x = c; x < k; ++x)
                    M[static_cast<std::size_t>(r * k + x)] -= f * M[static_cast<std::size_t>(c * k + x)];
            }
        }
        if (!det.is_real() || det.re() <= 0) return false;
    }
    return true;
}

HermitianMetric HermitianMetric::substituted(int param, const GaussianRational& value) const {
    HermitianMetric r(n_, reg_);
    r.F_.reserve(F_.size());
    for (const auto& e : F_) r.F_.push_back(e.substituted(param, value));
    return r;
}

MetricMode metric_mode_of(const std::string& name) {
    if (name == "astheno") return MetricMode::Astheno;
    if (name == "skt") return MetricMode::SKT;
    if (name == "balanced") return MetricMode::Balanced;
    if (name == "kahler") return MetricMode::Kahler;
    throw ParseError("unknown metric mode '" + name + "' (astheno|skt|balanced|kahler)", 0);
}

std::string metric_mode_name(MetricMode m) {
    switch (m) {
        case MetricMode::Astheno: return "astheno";
        case MetricMode::SKT: return "skt";
        case MetricMode::Balanced: return "balanced";
        case MetricMode::Kahler: return "kahler";
    }
    return "?";
}

MetricCheck check_special_metric(const ComplexNilAlgebra& g, const HermitianMetric& m, MetricMode mode) {
    if (g.dimension() != m.dimension()) throw DimensionMismatch(g.dimension(), m.dimension());
    int n = g.dimension();
    MetricCheck out;
    switch (mode) {
        case MetricMode::Astheno:
            out.residual = g.del(g.delbar(m.fundamental_power(n - 2)));
            break;
        case MetricMode::SKT:
            out.residual = g.del(g.delbar(m.fundamental_form()));
            break;
        case MetricMode::Balanced:
            out.residual = g.d(m.fundamental_power(n - 1));
            break;
        case MetricMode::Kahler:
            out.residual = g.d(m.fundamental_form());
            break;
    }
    out.conditions = condition_list(out.residual);
    return out;
}

InvariantForm hodge_star(const HermitianMetric& m, const InvariantForm& a) {
    if (!m.is_unit_diagonal())
        throw DomainError("hodge star requires the diagonal unit metric");
    int n = m.dimension();
    if (a.dimension() != n && !a.is_zero()) throw DimensionMismatch(n, a.dimension());
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    InvariantForm r(n);
    for (const auto& [mon, c] : a.terms()) {
        FormMonomial comp{full & ~mon.holo, full & ~mon.anti};
        int s = merge_sign(mon.holo, comp.holo) * merge_sign(mon.anti, comp.anti);
        if ((comp.p() * mon.q()) & 1) s = -s;
        int e = mon.degree() - n;  // kappa = 2^{p+q-n}
        Rational kappa = e >= 0 ? Rational(1L << e) : Rational(1, 1L << (-e));
        if (s < 0) kappa = -kappa;
        // vol = omega^n/n! = 2^{-n} i^n (-1)^{n(n-1)/2} eta^{1..n|1..n}; the
        // unit factor is 1 for even n and i for odd n
        GaussianRational unit = (n % 2 == 0) ? GaussianRational(kappa) : GaussianRational(Rational(0), kappa);
        ParamScalar coeff = c.conj() * ParamScalar::constant(c.registry(), unit);
        r.add_term(comp, coeff);
    }
    return r;
}

Poly normalize_condition(const ParamScalar& s) {
    if (s.is_zero()) return Poly(s.registry());
    return s.num().monic();
}

std::vector<Poly> condition_list(const InvariantForm& residual) {
    std::vector<Poly> out;
    for (const auto& [m, c] : residual.terms()) {
        Poly p = normalize_condition(c);
        if (p.is_zero()) continue;
        Poly pc = p.conj().monic();
        // canonical pick of the conjugate pair
        Poly rep = Poly::compare(p, pc) <= 0 ? p : pc;
        bool seen = false;
        for (const auto& q : out)
            if (Poly::compare(q, rep) == 0) seen = true;
        if (!seen) out.push_back(rep);
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    return out;
}

}  // namespace nilform
