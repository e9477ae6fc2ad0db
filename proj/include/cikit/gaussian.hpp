#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cikit/graph.hpp"
#include "cikit/prng.hpp"
#include "cikit/relation.hpp"
#include "cikit/report.hpp"
#include "cikit/rules.hpp"

namespace cikit {

namespace linalg {

// In-place Cholesky of a row-major SPD matrix; lower triangle becomes L.
// Returns false when the matrix is not positive definite.
inline bool cholesky(int n, std::vector<double>& a) {
    for (int j = 0; j < n; ++j) {
        double d = a[static_cast<std::size_t>(j * n + j)];
        for (int k = 0; k < j; ++k) {
            double l = a[static_cast<std::size_t>(j * n + k)];
            d -= l * l;
        }
        if (!(d > 0.0)) return false;
        double root = std::sqrt(d);
        a[static_cast<std::size_t>(j * n + j)] = root;
        for (int i = j + 1; i < n; ++i) {
            double s = a[static_cast<std::size_t>(i * n + j)];
            for (int k = 0; k < j; ++k)
                s -= a[static_cast<std::size_t>(i * n + k)] * a[static_cast<std::size_t>(j * n + k)];
            a[static_cast<std::size_t>(i * n + j)] = s / root;
        }
    }
    return true;
}

// Solves L L^T x = b given the Cholesky factor.
inline void cholesky_solve(int n, const std::vector<double>& chol, std::vector<double>& b) {
    for (int i = 0; i < n; ++i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) s -= chol[static_cast<std::size_t>(i * n + k)] * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / chol[static_cast<std::size_t>(i * n + i)];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k) s -= chol[static_cast<std::size_t>(k * n + i)] * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / chol[static_cast<std::size_t>(i * n + i)];
    }
}

// SPD inverse via Cholesky; result is symmetrized exactly.
inline std::vector<double> spd_inverse(int n, std::vector<double> a) {
    if (!cholesky(n, a)) throw std::runtime_error("matrix is not positive definite");
    std::vector<double> inv(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[static_cast<std::size_t>(j)] = 1.0;
        cholesky_solve(n, a, col);
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i * n + j)] = col[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (inv[static_cast<std::size_t>(i * n + j)] + inv[static_cast<std::size_t>(j * n + i)]);
            inv[static_cast<std::size_t>(i * n + j)] = v;
            inv[static_cast<std::size_t>(j * n + i)] = v;
        }
    return inv;
}

inline double one_norm(int n, const std::vector<double>& a) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(a[static_cast<std::size_t>(i * n + j)]);
        best = std::max(best, s);
    }
    return best;
}

}  // namespace linalg

// Zero-mean Gaussian model: covariance matrix plus the threshold used to call
// a partial covariance zero. The threshold applies to the correlation-scaled
// value, so verdicts are invariant under rescaling of sigma.
class GaussianModel {
public:
    static constexpr double kDefaultEps = 1e-9;

    GaussianModel(GroundSet ground, std::vector<double> sigma, double eps = kDefaultEps)
        : ground_(std::move(ground)), sigma_(std::move(sigma)), eps_(eps) {
        const int p = ground_.size();
        if (sigma_.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p))
            throw std::invalid_argument("covariance matrix size does not match the ground set");
        if (!(eps_ > 0.0)) throw std::invalid_argument("eps must be positive");
        double scale = 1.0;
        for (double v : sigma_) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (std::abs(at(i, j) - at(j, i)) > 1e-12 * scale)
                    throw std::invalid_argument("covariance matrix is not symmetric");
        auto copy = sigma_;
        if (!linalg::cholesky(p, copy))
            throw std::invalid_argument("covariance matrix is not positive definite");
    }

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    const std::vector<double>& sigma() const { return sigma_; }
    double eps() const { return eps_; }
    double at(int i, int j) const { return sigma_[static_cast<std::size_t>(i * size() + j)]; }

    GaussianModel with_eps(double eps) const { return GaussianModel(ground_, sigma_, eps); }

private:
    GroundSet ground_;
    std::vector<double> sigma_;
    double eps_;
};

struct CiResult {
    bool independent = false;
    double normalized = 0.0;     // partial covariance over the geometric mean of
                                 // the conditional variances
    bool near_threshold = false; // |normalized| in [eps, 100*eps)
};

// Partial-covariance test for a _||_ b | C via the Schur complement.
inline CiResult ci_detail(const GaussianModel& m, int a, int b, VertexSet cond) {
    const int p = m.size();
    if (a == b || a < 0 || b < 0 || a >= p || b >= p)
        throw std::invalid_argument("ci requires two distinct vertices");
    if (cond.contains(a) || cond.contains(b))
        throw std::invalid_argument("conditioning set must exclude a and b");
    require_valid(cond, m.ground());

    std::vector<int> cs;
    for_each_vertex(cond.bits, [&](int v) { cs.push_back(v); });
    const int k = static_cast<int>(cs.size());

    double saa = m.at(a, a), sab = m.at(a, b), sbb = m.at(b, b);
    if (k > 0) {
        std::vector<double> scc(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                scc[static_cast<std::size_t>(i * k + j)] = m.at(cs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
        if (!linalg::cholesky(k, scc))
            throw std::runtime_error("conditioning block is numerically singular");
        std::vector<double> xa(static_cast<std::size_t>(k)), xb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            xa[static_cast<std::size_t>(i)] = m.at(cs[static_cast<std::size_t>(i)], a);
            xb[static_cast<std::size_t>(i)] = m.at(cs[static_cast<std::size_t>(i)], b);
        }
        linalg::cholesky_solve(k, scc, xa);
        linalg::cholesky_solve(k, scc, xb);
        for (int i = 0; i < k; ++i) {
            saa -= m.at(a, cs[static_cast<std::size_t>(i)]) * xa[static_cast<std::size_t>(i)];
            sab -= m.at(a, cs[static_cast<std::size_t>(i)]) * xb[static_cast<std::size_t>(i)];
            sbb -= m.at(b, cs[static_cast<std::size_t>(i)]) * xb[static_cast<std::size_t>(i)];
        }
    }
    if (!(saa > 0.0) || !(sbb > 0.0))
        throw std::runtime_error("conditional variance is not positive");

    CiResult r;
    r.normalized = sab / std::sqrt(saa * sbb);
    r.independent = std::abs(r.normalized) < m.eps();
    r.near_threshold = !r.independent && std::abs(r.normalized) < 100.0 * m.eps();
    return r;
}

inline bool ci(const GaussianModel& m, int a, int b, VertexSet cond) {
    return ci_detail(m, a, b, cond).independent;
}

struct ExtractedRelation {
    Relation relation;
    std::uint64_t near_threshold_count = 0;
};

// Conditional independence structure of the model. Pairwise triples come from
// the ci oracle; composite triples are those whose full localized family
// holds, which is valid because Gaussian structures are semigraphoids and
// semigraphoids are localizable.
inline ExtractedRelation relation_of_detail(const GaussianModel& m) {
    const int p = m.size();
    if (p > 8) throw std::invalid_argument("relation extraction capped at p <= 8");
    const mask_t full = m.ground().full();

    // pairwise oracle table: pair_ci[u*p+v][C] for u < v
    std::vector<std::vector<std::uint8_t>> pair_ci(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    std::uint64_t near = 0;
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) {
            auto& tbl = pair_ci[static_cast<std::size_t>(u * p + v)];
            tbl.assign(std::size_t{1} << p, 0);
            mask_t uv = (mask_t{1} << u) | (mask_t{1} << v);
            detail::scan_submasks(full & ~uv, true, [&](mask_t c) {
                CiResult r = ci_detail(m, u, v, VertexSet(c));
                tbl[c] = r.independent ? 1 : 0;
                if (r.near_threshold) ++near;
                return true;
            });
        }
    auto pair_holds = [&](int u, int v, mask_t c) {
        if (u > v) std::swap(u, v);
        return pair_ci[static_cast<std::size_t>(u * p + v)][c] != 0;
    };

    std::vector<Triple> out;
    for_each_triple(m.ground(), [&](const Triple& t) {
        bool all = true;
        for_each_vertex(t.a.bits, [&](int av) {
            for_each_vertex(t.b.bits, [&](int bv) {
                if (!all) return;
                mask_t ab = (mask_t{1} << av) | (mask_t{1} << bv);
                detail::scan_submasks((t.a.bits | t.b.bits) & ~ab, true, [&](mask_t extra) {
                    if (!pair_holds(av, bv, t.c.bits | extra)) {
                        all = false;
                        return false;
                    }
                    return true;
                });
            });
        });
        if (all) out.push_back(t);
    });
    return ExtractedRelation{Relation::from_sorted_unique(m.ground(), std::move(out)), near};
}

inline Relation relation_of(const GaussianModel& m) { return relation_of_detail(m).relation; }

// N(0, Sigma) -> N(0, Sigma^{-1}), eps preserved. Refuses ill-conditioned
// input where the inverse would be numeric noise.
inline GaussianModel inverse_model(const GaussianModel& m) {
    const int p = m.size();
    auto inv = linalg::spd_inverse(p, m.sigma());
    double cond = linalg::one_norm(p, m.sigma()) * linalg::one_norm(p, inv);
    if (cond > 1e12) throw std::runtime_error("covariance matrix too ill-conditioned to invert");
    return GaussianModel(m.ground(), std::move(inv), m.eps());
}

// Restriction of the model to a subset of vertices (marginal distribution).
inline GaussianModel marginal_model(const GaussianModel& m, VertexSet keep) {
    require_valid(keep, m.ground());
    if (keep.empty()) throw std::invalid_argument("marginal needs a nonempty vertex set");
    std::vector<int> vs;
    for_each_vertex(keep.bits, [&](int v) { vs.push_back(v); });
    std::vector<std::string> labels;
    for (int v : vs) labels.push_back(m.ground().label(v));
    const int k = static_cast<int>(vs.size());
    std::vector<double> sub(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub[static_cast<std::size_t>(i * k + j)] = m.at(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
    return GaussianModel(GroundSet(std::move(labels)), std::move(sub), m.eps());
}

// [Y] = [X]^| for Y ~ N(0, Sigma^{-1}), checked as an exact set equality.
// Near-threshold partial correlations on either side surface as warnings.
inline VerificationReport check_gaussian_duality(const GaussianModel& m) {
    if (m.size() > 7) throw std::invalid_argument("duality check capped at p <= 7");
    VerificationReport rep;
    rep.claim = "gaussian-duality";
    rep.population = "single model, p=" + std::to_string(m.size());
    ExtractedRelation inv = relation_of_detail(inverse_model(m));
    ExtractedRelation fwd = relation_of_detail(m);
    rep.warnings = inv.near_threshold_count + fwd.near_threshold_count;
    Relation lhs = inv.relation;
    Relation rhs = relation_dual(fwd.relation);
    rep.checked = 1;
    if (!(lhs == rhs)) {
        std::string detail = "inverse-model relation differs from dual:";
        for (const auto& t : lhs.triples())
            if (!rhs.contains(t)) detail += " +[" + format_triple(t, m.ground()) + "]";
        for (const auto& t : rhs.triples())
            if (!lhs.contains(t)) detail += " -[" + format_triple(t, m.ground()) + "]";
        rep.add_counterexample(detail);
    }
    return rep;
}

// Closure of the extracted structure under one rule.
inline std::optional<Violation> check_gaussian_rule(const GaussianModel& m, Rule rule) {
    if (m.size() > 7) throw std::invalid_argument("rule check capped at p <= 7");
    return find_violation(relation_of(m), rule);
}

enum class SupportMode { covariance, concentration };

// SPD model whose covariance (bidirected reading) or concentration
// (undirected reading) has off-diagonal support exactly on the forest's
// edges. Edge magnitudes are seeded uniform in [0.2, 0.6] with random sign;
// strict diagonal dominance makes the matrix SPD, and off-forest entries are
// exact zeros.
inline GaussianModel tree_structured_model(const Graph& tree, SupportMode mode,
                                           std::uint64_t seed,
                                           double eps = GaussianModel::kDefaultEps) {
    if (!is_forest(tree)) throw std::invalid_argument("tree_structured_model needs a forest");
    const int p = tree.size();
    Prng rng(seed);
    std::vector<double> m(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0.0);
    for (auto [u, v] : tree.edges()) {
        double w = (0.2 + 0.4 * rng.next_unit()) * (rng.next_bool() ? 1.0 : -1.0);
        m[static_cast<std::size_t>(u * p + v)] = w;
        m[static_cast<std::size_t>(v * p + u)] = w;
    }
    for (int i = 0; i < p; ++i) {
        double row = 0.0;
        for (int j = 0; j < p; ++j)
            if (j != i) row += std::abs(m[static_cast<std::size_t>(i * p + j)]);
        m[static_cast<std::size_t>(i * p + i)] = 1.0 + row;
    }
    if (mode == SupportMode::concentration) m = linalg::spd_inverse(p, std::move(m));
    return GaussianModel(tree.ground(), std::move(m), eps);
}

// Well-conditioned random SPD covariance: A with standard-normal entries,
// Sigma = A^T A + p I, rescaled to unit diagonal.
inline GaussianModel random_spd_model(const GroundSet& ground, std::uint64_t seed,
                                      double eps = GaussianModel::kDefaultEps) {
    const int p = ground.size();
    Prng rng(seed);
    std::vector<double> a(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    for (auto& v : a) v = rng.next_normal();
    std::vector<double> s(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0.0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            double acc = (i == j) ? static_cast<double>(p) : 0.0;
            for (int k = 0; k < p; ++k)
                acc += a[static_cast<std::size_t>(k * p + i)] * a[static_cast<std::size_t>(k * p + j)];
            s[static_cast<std::size_t>(i * p + j)] = acc;
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j)
                s[static_cast<std::size_t>(i * p + j)] /=
                    std::sqrt(s[static_cast<std::size_t>(i * p + i)] * s[static_cast<std::size_t>(j * p + j)]);
    for (int i = 0; i < p; ++i) s[static_cast<std::size_t>(i * p + i)] = 1.0;
    return GaussianModel(ground, std::move(s), eps);
}

}  // namespace cikit
