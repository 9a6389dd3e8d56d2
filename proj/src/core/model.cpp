#include "core/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "core/errors.hpp"

namespace hokm {

namespace {

void check_theta(const Hypergraph& g, std::span<const double> theta) {
    if (static_cast<int>(theta.size()) != g.n())
        throw Error(ErrorCode::invalid_argument,
                    "phase vector length " + std::to_string(theta.size()) +
                        " does not match node count " + std::to_string(g.n()));
}

void check_params(const ModelParams& p) {
    if (p.k1 < 0 || p.k2 < 0 || p.k3 < 0)
        throw Error(ErrorCode::invalid_argument, "coupling strengths must be nonnegative");
    if (p.triadic_sign != 1.0 && p.triadic_sign != -1.0)
        throw Error(ErrorCode::invalid_argument, "triadic_sign must be +1 or -1");
}

const std::vector<double>& omega_or_throw(const Hypergraph& g, const ModelParams& p) {
    if (static_cast<int>(p.omega.size()) != g.n())
        throw Error(ErrorCode::invalid_argument, "omega length does not match node count");
    return p.omega;
}

}  // namespace

std::optional<std::string> resonance_violation(const Hypergraph& g, std::span<const double> omega,
                                               double eps, const std::vector<int>* pinned) {
    std::vector<char> in(g.n(), pinned ? 0 : 1);
    if (pinned)
        for (int i : *pinned) in.at(i) = 1;
    for (const auto& e : g.edges()) {
        if (!in[e[0]] || !in[e[1]]) continue;
        if (std::abs(omega[e[1]] - omega[e[0]]) <= eps)
            return "edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                   "}: |w_j - w_i| <= " + std::to_string(eps);
    }
    for (const auto& t : g.triangles()) {
        if (!in[t[0]] || !in[t[1]] || !in[t[2]]) continue;
        for (int c = 0; c < 3; ++c) {
            const int i = t[c], j = t[(c + 1) % 3], k = t[(c + 2) % 3];
            if (std::abs(omega[j] + omega[k] - 2.0 * omega[i]) <= eps)
                return "triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                       std::to_string(t[2]) + "} centered at " + std::to_string(i) +
                       ": |w_j + w_k - 2 w_i| <= " + std::to_string(eps);
        }
    }
    return std::nullopt;
}

std::vector<double> hokm_rhs(const Hypergraph& g, const ModelParams& p,
                             std::span<const double> theta) {
    check_theta(g, theta);
    check_params(p);
    const auto& omega = omega_or_throw(g, p);
    const int n = g.n();
    const double nn = static_cast<double>(n);

    std::vector<std::complex<double>> z(n), z2(n), acc(n, {0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        z[i] = std::polar(1.0, theta[i]);
        z2[i] = z[i] * z[i];
    }
    // Pairwise: sum_j A_ij sin(th_j - th_i) = Im(conj(z_i) * sum_adj z_j).
    for (const auto& e : g.edges()) {
        acc[e[0]] += z[e[1]];
        acc[e[1]] += z[e[0]];
    }
    std::vector<double> tri(n, 0.0);
    // Triadic: per triangle {a,b,c} and center a the ordered (j,k) sum is
    // 2 sin(th_b+th_c-2 th_a) + s [sin(2 th_b-th_c-th_a) + sin(2 th_c-th_b-th_a)]
    // with u_x = sin(2 th_x - th_y - th_z) so the center-a term is -2u_a + s(u_b+u_c).
    const double s = p.triadic_sign;
    for (const auto& t : g.triangles()) {
        const int a = t[0], b = t[1], c = t[2];
        const std::complex<double> pab = z[a] * z[b], pac = z[a] * z[c], pbc = z[b] * z[c];
        const double ua = std::imag(z2[a] * std::conj(pbc));
        const double ub = std::imag(z2[b] * std::conj(pac));
        const double uc = std::imag(z2[c] * std::conj(pab));
        tri[a] += -2.0 * ua + s * (ub + uc);
        tri[b] += -2.0 * ub + s * (ua + uc);
        tri[c] += -2.0 * uc + s * (ua + ub);
    }
    std::vector<double> out(n);
    const double c1 = p.k1 / nn, c2 = p.k2 / (nn * nn);
    for (int i = 0; i < n; ++i)
        out[i] = omega[i] + c1 * std::imag(std::conj(z[i]) * acc[i]) + c2 * tri[i];
    return out;
}

double order_parameter(std::span<const double> theta) {
    return cluster_order_parameter(theta, 1);
}

double cluster_order_parameter(std::span<const double> theta, int m) {
    if (theta.empty()) throw Error(ErrorCode::invalid_argument, "empty phase vector");
    if (m < 1) throw Error(ErrorCode::invalid_argument, "harmonic index must be >= 1");
    std::complex<double> sum{0.0, 0.0};
    for (double th : theta) sum += std::polar(1.0, m * th);
    return std::abs(sum) / static_cast<double>(theta.size());
}

double averaged_order_parameter(const std::vector<std::pair<double, double>>& series, double t0,
                                double t_fin) {
    if (!(t0 < t_fin)) throw Error(ErrorCode::invalid_argument, "need t0 < t_fin");
    constexpr double slack = 1e-9;
    double sum = 0.0;
    long count = 0;
    for (const auto& [t, r] : series) {
        if (t > t0 + slack && t <= t_fin + slack) {
            sum += r;
            ++count;
        }
    }
    if (count == 0)
        throw Error(ErrorCode::invalid_argument, "averaging window (" + std::to_string(t0) + "," +
                                                     std::to_string(t_fin) + "] contains no samples");
    return sum / static_cast<double>(count);
}

std::vector<double> multiorder_laplacian(const Hypergraph& g, const ModelParams& p) {
    check_params(p);
    const int n = g.n();
    const double nn = static_cast<double>(n);
    std::vector<double> L(static_cast<std::size_t>(n) * n, 0.0);
    const double w1 = 2.0 * p.k1 / nn;            // 2 L1 off-diagonal weight
    const double w2 = 6.0 * p.k2 / (nn * nn);     // 6 L2 off-diagonal weight per triangle
    auto add = [&](int i, int j, double w) {
        L[static_cast<std::size_t>(i) * n + j] -= w;
        L[static_cast<std::size_t>(i) * n + i] += w;
    };
    for (const auto& e : g.edges()) {
        add(e[0], e[1], w1);
        add(e[1], e[0], w1);
    }
    for (const auto& t : g.triangles()) {
        // sum_k B_ijk contributes 1 per shared triangle for each ordered pair.
        add(t[0], t[1], w2);
        add(t[1], t[0], w2);
        add(t[0], t[2], w2);
        add(t[2], t[0], w2);
        add(t[1], t[2], w2);
        add(t[2], t[1], w2);
    }
    return L;
}

namespace {

// Cyclic Jacobi with eigenvector accumulation; returns (values, vectors) with
// vectors stored column-wise in v (row-major n x n).
void jacobi_eigen(std::vector<double>& a, std::vector<double>& v, int n) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto at = [&](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(a, i, j) * at(a, i, j);
        if (std::sqrt(2.0 * off) <= 1e-14 * norm) return;
        for (int pq = 0; pq < n; ++pq)
            for (int q = pq + 1; q < n; ++q) {
                const int p_ = pq;
                const double apq = at(a, p_, q);
                if (apq == 0.0) continue;
                const double tau = (at(a, q, q) - at(a, p_, p_)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p_), akq = at(a, k, q);
                    at(a, k, p_) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p_, k), aqk = at(a, q, k);
                    at(a, p_, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p_), vkq = at(v, k, q);
                    at(v, k, p_) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
    }
    throw Error(ErrorCode::numeric, "Jacobi eigensolver did not converge within the sweep cap");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    std::vector<double> v;
    jacobi_eigen(a, v, n);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<double> sync_jacobian_spectrum(const Hypergraph& g, const ModelParams& p) {
    const int n = g.n();
    std::vector<double> L = multiorder_laplacian(g, p);
    const std::vector<double> L0 = L;
    std::vector<double> v;
    jacobi_eigen(L, v, n);
    // Residual check against the original matrix.
    double lnorm = 0.0;
    for (double x : L0) lnorm += x * x;
    lnorm = std::sqrt(lnorm);
    for (int col = 0; col < n; ++col) {
        const double lam = L[static_cast<std::size_t>(col) * n + col];
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += L0[static_cast<std::size_t>(i) * n + j] * v[static_cast<std::size_t>(j) * n + col];
            acc -= lam * v[static_cast<std::size_t>(i) * n + col];
            res += acc * acc;
        }
        if (std::sqrt(res) > 1e-8 * std::max(lnorm, 1e-300) && lnorm > 0.0)
            throw Error(ErrorCode::numeric, "eigenpair residual above tolerance");
    }
    std::vector<double> spec;
    spec.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        const double lam = L[static_cast<std::size_t>(i) * n + i];
        spec.push_back(lam);
        spec.push_back(-lam);
    }
    std::sort(spec.begin(), spec.end());
    return spec;
}

std::vector<double> d3_rhs(int n, const ModelParams& p, std::span<const double> theta,
                           QuarticVariant variant) {
    check_params(p);
    if (static_cast<int>(theta.size()) != n)
        throw Error(ErrorCode::invalid_argument, "phase vector length does not match n");
    if (static_cast<int>(p.omega.size()) != n)
        throw Error(ErrorCode::invalid_argument, "omega length does not match n");
    std::vector<double> out(p.omega.begin(), p.omega.end());
    if (n < 4 || p.k3 == 0.0) return out;
    const double c = p.k3 / (static_cast<double>(n) * n * n);
    // All-to-all quadruples: for node i, iterate unordered {a,b,c} of the other
    // nodes; the ordered (j,k,l) sum is recovered from the summand symmetries.
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a) {
            if (a == i) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == i) continue;
                for (int cc = b + 1; cc < n; ++cc) {
                    if (cc == i) continue;
                    const double ta = theta[a], tb = theta[b], tc = theta[cc], ti = theta[i];
                    if (variant == QuarticVariant::type1) {
                        // sin(th_j+th_k+th_l-3th_i): symmetric, 6 ordered copies;
                        // sin(3th_j-th_k-th_l-th_i): 2 copies per choice of j.
                        acc += 6.0 * std::sin(ta + tb + tc - 3.0 * ti) +
                               2.0 * (std::sin(3.0 * ta - tb - tc - ti) +
                                      std::sin(3.0 * tb - ta - tc - ti) +
                                      std::sin(3.0 * tc - ta - tb - ti));
                    } else {
                        // sin(th_k+th_l-th_j-th_i): symmetric in (k,l), 2 copies
                        // per choice of j.
                        acc += 2.0 * (std::sin(tb + tc - ta - ti) + std::sin(ta + tc - tb - ti) +
                                      std::sin(ta + tb - tc - ti));
                    }
                }
            }
        }
        out[i] += (variant == QuarticVariant::type1 ? 1.5 : 2.0) * c * acc;
    }
    return out;
}

}  // namespace hokm
