#include "ssg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg::spectra {

using selfsim::Element;
using selfsim::Group;

SymMatrix SymMatrix::zero(int n) {
    SymMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0.0);
    return m;
}

void SymMatrix::check_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) {
                std::ostringstream msg;
                msg << "matrix not symmetric at (" << i << "," << j << ")";
                throw Error(msg.str());
            }
}

namespace {

std::vector<std::pair<std::string, Element>>
picked_generators(const Group& g, const std::vector<std::string>& gen_names) {
    auto all = selfsim::symmetrized_generators(g);
    if (gen_names.empty()) return all;
    std::vector<std::pair<std::string, Element>> out;
    for (const auto& [name, e] : all) {
        std::string base = name;
        while (!base.empty() && base.back() == '\'') base.pop_back();
        if (std::find(gen_names.begin(), gen_names.end(), base) != gen_names.end())
            out.push_back({name, e});
    }
    if (out.empty()) throw UnknownEntry("no generator matches the selection");
    return out;
}

} // namespace

SymMatrix hecke_matrix(const Group& g, const std::vector<std::string>& gen_names,
                       int n, bool normalized, size_t max_points) {
    size_t size = selfsim::level_size_checked(g->alphabet(), n, max_points);
    auto gens = picked_generators(g, gen_names);

    SymMatrix m = SymMatrix::zero(static_cast<int>(size));
    for (const auto& [name, e] : gens) {
        auto perm = selfsim::act_level(e, n, max_points);
        for (size_t v = 0; v < size; ++v)
            m.at(perm[v], static_cast<int>(v)) += 1.0;
    }
    if (normalized) {
        double inv = 1.0 / static_cast<double>(gens.size());
        for (double& x : m.a) x *= inv;
    }
    m.check_symmetric();
    return m;
}

namespace {

double offdiag_norm(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * s);
}

} // namespace

std::vector<double> eigenvalues_raw(SymMatrix m, double tol) {
    if (tol <= 0.0) throw OutOfDomain("eigensolver tolerance must be positive");
    m.check_symmetric();
    int n = m.n;
    if (n == 0) return {};

    const int sweep_cap = 64;
    bool converged = false;
    for (int sweep = 0; sweep < sweep_cap && !converged; ++sweep) {
        if (offdiag_norm(m) <= tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (apq == 0.0) continue;
                double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(tau) + std::sqrt(tau * tau + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = c * akp - s * akq;
                    m.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m.at(p, k), aqk = m.at(q, k);
                    m.at(p, k) = c * apk - s * aqk;
                    m.at(q, k) = s * apk + c * aqk;
                }
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
            }
    }
    if (!converged && offdiag_norm(m) > tol) {
        std::ostringstream msg;
        msg << "eigensolver did not converge after " << sweep_cap
            << " sweeps; off-diagonal residual " << offdiag_norm(m);
        throw Error(msg.str());
    }

    std::vector<double> vals;
    vals.reserve(n);
    for (int i = 0; i < n; ++i) vals.push_back(m.at(i, i));
    std::sort(vals.begin(), vals.end());
    return vals;
}

Spectrum eigenvalues_sym(const SymMatrix& m, double tol) {
    auto vals = eigenvalues_raw(m, tol);
    Spectrum s;
    s.tol = tol;
    s.dimension = m.n;
    size_t i = 0;
    while (i < vals.size()) {
        size_t j = i + 1;
        while (j < vals.size() && vals[j] - vals[j - 1] <= tol) ++j;
        double sum = 0.0;
        for (size_t k = i; k < j; ++k) sum += vals[k];
        s.values.push_back(sum / static_cast<double>(j - i));
        s.multiplicity.push_back(static_cast<int>(j - i));
        i = j;
    }
    return s;
}

Spectrum fg_spectrum_closed(int n) {
    if (n < 0) throw OutOfDomain("level must be nonnegative");
    std::vector<double> vals;
    if (n == 0) {
        vals = {4.0};
    } else {
        vals = {1.0, 4.0};
        std::vector<double> x = {-1.0};
        for (int m = 2; m <= n; ++m) {
            if (m > 2) {
                // X_m = F^{-1}(X_{m-1}) for F(t) = 4 - 2t - t^2:
                // t^2 + 2t + (c - 4) = 0, so t = -1 +- sqrt(5 - c).
                std::vector<double> next;
                for (double c : x) {
                    double r = std::sqrt(5.0 - c);
                    next.push_back(-1.0 - r);
                    next.push_back(-1.0 + r);
                }
                x = std::move(next);
            }
            for (double th : x) {
                double r = std::sqrt(5.0 - th);
                vals.push_back(1.0 - r);
                vals.push_back(1.0 + r);
            }
        }
    }
    std::sort(vals.begin(), vals.end());
    Spectrum s;
    s.values = std::move(vals);
    return s;
}

DetResult determinant(std::vector<std::vector<double>> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw OutOfDomain("determinant needs a square matrix");
    DetResult r;
    r.value = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t i = col + 1; i < n; ++i)
            if (std::fabs(m[i][col]) > std::fabs(m[pivot][col])) pivot = i;
        if (std::fabs(m[pivot][col]) < 1e-300) {
            r.value = 0.0;
            r.singular = true;
            return r;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            r.value = -r.value;
        }
        r.value *= m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            double f = m[i][col] / m[col][col];
            if (f == 0.0) continue;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return r;
}

namespace {

Group fg_group() {
    using selfsim::Generator;
    static Group g = [] {
        Generator a{"a", {1, 2, 0}, {{}, {}, {}}};
        Generator s{"s", {0, 1, 2}, {{{0, false}}, {}, {{1, false}}}};
        return selfsim::GroupDef::create("fg", 3, {std::move(a), std::move(s)});
    }();
    return g;
}

Group phi_group() {
    using selfsim::Generator;
    static Group g = [] {
        Generator a{"a", {1, 0}, {{{1, false}}, {}}};
        Generator b{"b", {0, 1}, {{{0, false}}, {}}};
        return selfsim::GroupDef::create("phi", 2, {std::move(a), std::move(b)});
    }();
    return g;
}

// Dense P + P^T for the level-n permutation of a single generator.
std::vector<std::vector<double>> sym_perm_matrix(const Group& g, int gen, int n) {
    Element e = selfsim::make_element(g, {{gen, false}});
    auto perm = selfsim::act_level(e, n);
    size_t size = perm.size();
    std::vector<std::vector<double>> m(size, std::vector<double>(size, 0.0));
    for (size_t v = 0; v < size; ++v) {
        m[perm[v]][v] += 1.0;
        m[v][perm[v]] += 1.0;
    }
    return m;
}

double det_q(const std::vector<std::vector<double>>& S,
             const std::vector<std::vector<double>>& A, double lambda, double mu) {
    size_t n = S.size();
    std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            q[i][j] = S[i][j] + lambda * A[i][j] - (i == j ? mu : 0.0);
    return determinant(std::move(q)).value;
}

double draw_eighth(std::mt19937_64& rng) {
    return (static_cast<double>(rng() % 33) - 16.0) / 8.0;
}

double ipow(double x, long e) {
    double r = 1.0;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

bool fg_detq_check(int n, int samples, std::uint64_t seed, double tol) {
    if (n < 2 || n > 4) throw OutOfDomain("level must be between 2 and 4");
    if (samples < 1) throw OutOfDomain("need at least one sample");

    Group g = fg_group();
    auto A_n = sym_perm_matrix(g, 0, n);
    auto S_n = sym_perm_matrix(g, 1, n);
    auto A_m = sym_perm_matrix(g, 0, n - 1);
    auto S_m = sym_perm_matrix(g, 1, n - 1);
    auto A_0 = sym_perm_matrix(g, 0, 0);
    auto S_0 = sym_perm_matrix(g, 1, 0);
    auto A_1 = sym_perm_matrix(g, 0, 1);
    auto S_1 = sym_perm_matrix(g, 1, 1);

    std::mt19937_64 rng(seed);
    long reps = 1;
    for (int i = 2; i < n; ++i) reps *= 3;   // 3^(n-2)

    for (int s = 0; s < samples; ++s) {
        double lambda = 0.0, mu = 0.0;
        double alpha = 0.0, gamma = 0.0;
        bool found = false;
        for (int tries = 0; tries < 100; ++tries) {
            lambda = draw_eighth(rng);
            mu = draw_eighth(rng);
            alpha = 2.0 - mu + lambda;
            gamma = mu * mu - lambda * lambda - mu - 2.0;
            if (std::fabs(alpha * gamma) > 1e-3) {
                found = true;
                break;
            }
        }
        if (!found) throw Error("no sample point away from the recursion poles");

        double beta = 2.0 - mu - lambda;
        double delta = mu * mu - lambda * lambda - 2.0 * mu - lambda;

        // Base cases in closed form at this sample point.
        double q0 = 2.0 + 2.0 * lambda - mu;
        double q1 = q0 * beta * beta;
        if (std::fabs(det_q(S_0, A_0, lambda, mu) - q0) >
            tol * std::max(1.0, std::fabs(q0)))
            return false;
        if (std::fabs(det_q(S_1, A_1, lambda, mu) - q1) >
            tol * std::max(1.0, std::fabs(q1)))
            return false;

        double direct = det_q(S_n, A_n, lambda, mu);
        double factor = ipow(alpha * beta * gamma * gamma, reps);
        double l2 = lambda * lambda * beta / (alpha * gamma);
        double m2 = mu + 2.0 * lambda * lambda * delta / (alpha * gamma);
        double rec = factor * det_q(S_m, A_m, l2, m2);
        if (std::fabs(direct - rec) > tol * std::max(1.0, std::fabs(direct)))
            return false;
    }
    return true;
}

bool img_phi_recursion_check(int k, int samples, std::uint64_t seed, double tol) {
    if (k < 1 || k > 5) throw OutOfDomain("level must be between 1 and 5");
    if (samples < 1) throw OutOfDomain("need at least one sample");

    Group g = phi_group();
    auto A_hi = sym_perm_matrix(g, 0, k + 1);
    auto B_hi = sym_perm_matrix(g, 1, k + 1);
    auto A_lo = sym_perm_matrix(g, 0, k);
    auto B_lo = sym_perm_matrix(g, 1, k);

    auto phi = [](const std::vector<std::vector<double>>& A,
                  const std::vector<std::vector<double>>& B, double l, double l1,
                  double l2) {
        size_t n = A.size();
        std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m[i][j] = l1 * A[i][j] + l2 * B[i][j] + (i == j ? l : 0.0);
        return determinant(std::move(m)).value;
    };

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        double l = draw_eighth(rng);
        double l1 = draw_eighth(rng);
        double l2 = draw_eighth(rng);
        double big = l + 2.0 * l2;
        double direct = phi(A_hi, B_hi, l, l1, l2);
        double rec = phi(A_lo, B_lo, big * l - 2.0 * l1 * l1, big * l2, -l1 * l1);
        if (std::fabs(direct - rec) > tol * std::max(1.0, std::fabs(direct)))
            return false;
    }
    return true;
}

} // namespace ssg::spectra
