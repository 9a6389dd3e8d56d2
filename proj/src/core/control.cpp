#include "core/control.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace hokm {

namespace {

void check_mode_needs_pins(const ControlSpec& spec) {
    if (spec.mode == ControlMode::none)
        throw Error(ErrorCode::invalid_argument, "control evaluation with mode=none");
}

std::vector<int> validated_pinned(const Hypergraph& g, const ControlSpec& spec) {
    std::vector<int> pinned = spec.pinned;
    std::sort(pinned.begin(), pinned.end());
    if (std::adjacent_find(pinned.begin(), pinned.end()) != pinned.end())
        throw Error(ErrorCode::invalid_argument, "pinned indices must be distinct");
    for (int i : pinned)
        if (i < 0 || i >= g.n())
            throw Error(ErrorCode::invalid_argument,
                        "pinned index " + std::to_string(i) + " out of range");
    return pinned;
}

}  // namespace

ControlWorkspace::ControlWorkspace(const Hypergraph& g, std::span<const double> omega,
                                   const ControlSpec& spec, double eps_res) {
    check_mode_needs_pins(spec);
    if (static_cast<int>(omega.size()) != g.n())
        throw Error(ErrorCode::invalid_argument, "omega length does not match node count");
    mode_ = spec.mode;
    pinned_ = validated_pinned(g, spec);
    n_ = g.n();
    n_scale_ = static_cast<double>(g.n());

    std::vector<int> local(g.n(), -1);
    for (std::size_t l = 0; l < pinned_.size(); ++l) local[pinned_[l]] = static_cast<int>(l);

    auto guard = [&](double nu, const std::string& what) {
        if (std::abs(nu) <= eps_res)
            throw Error(ErrorCode::resonance, "resonant frequency combination on " + what);
    };
    for (const auto& e : g.edges()) {
        const int la = local[e[0]], lb = local[e[1]];
        if (la < 0 || lb < 0) continue;
        const double nu = omega[e[1]] - omega[e[0]];
        guard(nu, "edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}");
        edges_.push_back({la, lb, 1.0 / nu});
    }
    if (mode_ == ControlMode::full) {
        for (const auto& t : g.triangles()) {
            const int l0 = local[t[0]], l1 = local[t[1]], l2 = local[t[2]];
            if (l0 < 0 || l1 < 0 || l2 < 0) continue;
            PinnedTriangle pt;
            pt.v[0] = l0;
            pt.v[1] = l1;
            pt.v[2] = l2;
            for (int c = 0; c < 3; ++c) {
                const int i = t[c], j = t[(c + 1) % 3], k = t[(c + 2) % 3];
                const double nu = omega[j] + omega[k] - 2.0 * omega[i];
                guard(nu, "triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                              std::to_string(t[2]) + "} centered at " + std::to_string(i));
                pt.inv_nu[c] = 1.0 / nu;
            }
            triangles_.push_back(pt);
        }
    }
    const std::size_t m = pinned_.size();
    z_.resize(m);
    z2_.resize(m);
    vec_c_.resize(m);
    vec_s_.resize(m);
    mat_c_.resize(m * m);
    mat_s_.resize(m * m);
}

void ControlWorkspace::eval(std::span<const double> theta, double k1, double k2,
                            std::span<double> h_out) const {
    if (static_cast<int>(theta.size()) != n_ || static_cast<int>(h_out.size()) != n_)
        throw Error(ErrorCode::invalid_argument, "phase/control vector length mismatch");
    std::fill(h_out.begin(), h_out.end(), 0.0);
    const std::size_t m = pinned_.size();
    if (m == 0) return;

    for (std::size_t l = 0; l < m; ++l) {
        z_[l] = std::polar(1.0, theta[pinned_[l]]);
        z2_[l] = z_[l] * z_[l];
    }
    std::fill(vec_c_.begin(), vec_c_.end(), 0.0);
    std::fill(vec_s_.begin(), vec_s_.end(), 0.0);
    std::fill(mat_c_.begin(), mat_c_.end(), 0.0);
    std::fill(mat_s_.begin(), mat_s_.end(), 0.0);
    auto MC = [&](int i, int j) -> double& { return mat_c_[static_cast<std::size_t>(i) * m + j]; };
    auto MS = [&](int i, int j) -> double& { return mat_s_[static_cast<std::size_t>(i) * m + j]; };

    // Pairwise Fourier modes. Both orientations of an edge are folded into one
    // visit: the mode coefficient is q = -K1/N per orientation.
    const double q1 = -k1 / n_scale_;
    for (const auto& e : edges_) {
        const std::complex<double> ph = z_[e.b] * std::conj(z_[e.a]);  // exp(i(th_b - th_a))
        const double gc = 2.0 * q1 * ph.real();
        const double gs = 2.0 * q1 * ph.imag();
        const double gc_nu = gc * e.inv_nu;
        const double gs_nu = gs * e.inv_nu;
        vec_c_[e.a] -= gc_nu;
        vec_c_[e.b] += gc_nu;
        vec_s_[e.a] -= gs;
        vec_s_[e.b] += gs;
        MC(e.a, e.a) += gc;
        MC(e.b, e.b) += gc;
        MC(e.a, e.b) -= gc;
        MC(e.b, e.a) -= gc;
        MS(e.a, e.a) += gs_nu;
        MS(e.b, e.b) += gs_nu;
        MS(e.a, e.b) -= gs_nu;
        MS(e.b, e.a) -= gs_nu;
    }

    if (mode_ == ControlMode::full) {
        // Triadic modes: one per (triangle, center), carrying weight 2 for the
        // two ordered realizations; mode vector is e_p + e_r - 2 e_center.
        const double q2 = -2.0 * k2 / (n_scale_ * n_scale_);
        for (const auto& t : triangles_) {
            const std::complex<double> pab = z_[t.v[0]] * z_[t.v[1]];
            const std::complex<double> pac = z_[t.v[0]] * z_[t.v[2]];
            const std::complex<double> pbc = z_[t.v[1]] * z_[t.v[2]];
            const std::complex<double> ph[3] = {pbc * std::conj(z2_[t.v[0]]),
                                                pac * std::conj(z2_[t.v[1]]),
                                                pab * std::conj(z2_[t.v[2]])};
            for (int c = 0; c < 3; ++c) {
                const int i0 = t.v[c], p = t.v[(c + 1) % 3], r = t.v[(c + 2) % 3];
                const double gc = q2 * ph[c].real();
                const double gs = q2 * ph[c].imag();
                const double gc_nu = gc * t.inv_nu[c];
                const double gs_nu = gs * t.inv_nu[c];
                vec_c_[i0] -= 2.0 * gc_nu;
                vec_c_[p] += gc_nu;
                vec_c_[r] += gc_nu;
                vec_s_[i0] -= 2.0 * gs;
                vec_s_[p] += gs;
                vec_s_[r] += gs;
                MC(i0, i0) += 4.0 * gc;
                MC(p, p) += gc;
                MC(r, r) += gc;
                MC(i0, p) -= 2.0 * gc;
                MC(p, i0) -= 2.0 * gc;
                MC(i0, r) -= 2.0 * gc;
                MC(r, i0) -= 2.0 * gc;
                MC(p, r) += gc;
                MC(r, p) += gc;
                MS(i0, i0) += 4.0 * gs_nu;
                MS(p, p) += gs_nu;
                MS(r, r) += gs_nu;
                MS(i0, p) -= 2.0 * gs_nu;
                MS(p, i0) -= 2.0 * gs_nu;
                MS(i0, r) -= 2.0 * gs_nu;
                MS(r, i0) -= 2.0 * gs_nu;
                MS(p, r) += gs_nu;
                MS(r, p) += gs_nu;
            }
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        const double* rc = &mat_c_[i * m];
        const double* rs = &mat_s_[i * m];
        for (std::size_t j = 0; j < m; ++j) acc += rc[j] * vec_c_[j] + rs[j] * vec_s_[j];
        h_out[pinned_[i]] = 0.125 * acc;
    }
}

namespace {

std::vector<double> eval_control(const Hypergraph& g, const ModelParams& p,
                                 std::span<const double> theta, const ControlSpec& spec) {
    ControlWorkspace ws(g, p.omega, spec);
    std::vector<double> h(g.n(), 0.0);
    ws.eval(theta, p.k1, p.k2, h);
    return h;
}

}  // namespace

std::vector<double> control_full(const Hypergraph& g, const ModelParams& p,
                                 std::span<const double> theta, const ControlSpec& spec) {
    if (spec.mode != ControlMode::full)
        throw Error(ErrorCode::invalid_argument, "control_full requires mode=full");
    return eval_control(g, p, theta, spec);
}

std::vector<double> control_pairwise(const Hypergraph& g, const ModelParams& p,
                                     std::span<const double> theta, const ControlSpec& spec) {
    if (spec.mode != ControlMode::pairwise_only)
        throw Error(ErrorCode::invalid_argument, "control_pairwise requires mode=pairwise_only");
    return eval_control(g, p, theta, spec);
}

std::vector<double> controlled_rhs(const Hypergraph& g, const ModelParams& p,
                                   std::span<const double> theta, const ControlSpec& spec) {
    std::vector<double> rhs = hokm_rhs(g, p, theta);
    if (spec.mode == ControlMode::none) return rhs;
    const std::vector<double> h = eval_control(g, p, theta, spec);
    for (int i = 0; i < g.n(); ++i) rhs[i] += h[i];
    return rhs;
}

double control_intensity(std::span<const double> control, int pinned_count, IntensityNorm norm) {
    const int divisor =
        norm == IntensityNorm::all_nodes ? static_cast<int>(control.size()) : pinned_count;
    if (divisor < 1) throw Error(ErrorCode::invalid_argument, "empty normalization set");
    double sum = 0.0;
    for (double h : control) sum += std::abs(h);
    return sum / static_cast<double>(divisor);
}

double bracket_functional(const Hypergraph& g, const ModelParams& p, const ActionAngleState& s,
                          const ControlSpec& spec) {
    check_mode_needs_pins(spec);
    const int n = g.n();
    if (static_cast<int>(s.actions.size()) != n || static_cast<int>(s.angles.size()) != n ||
        static_cast<int>(p.omega.size()) != n)
        throw Error(ErrorCode::invalid_argument, "state/omega length mismatch");
    for (double a : s.actions)
        if (!(a > 0.0)) throw Error(ErrorCode::numeric, "nonpositive action");

    const std::vector<int> pinned = validated_pinned(g, spec);
    std::vector<char> in(n, 0);
    for (int i : pinned) in[i] = 1;

    const double nn = static_cast<double>(n);
    // Gradients of V and Gamma V, assembled per Fourier mode:
    //   V      = sum_a q_a f_a(I) sin(x_a)
    //   GammaV = -sum_a q_a (f_a(I)/nu_a) cos(x_a)
    std::vector<double> dv_dth(n, 0.0), dv_di(n, 0.0), dg_dth(n, 0.0), dg_di(n, 0.0);
    auto add_mode = [&](double q, double nu, double f, std::span<const int> nodes,
                        std::span<const double> df, std::span<const int> kvec, double x) {
        if (std::abs(nu) <= kResonanceEps)
            throw Error(ErrorCode::resonance, "resonant frequency combination in pinned set");
        const double cx = std::cos(x), sx = std::sin(x);
        for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
            const int node = nodes[idx];
            dv_dth[node] += q * f * cx * kvec[idx];
            dv_di[node] += q * df[idx] * sx;
            dg_dth[node] += q * (f / nu) * sx * kvec[idx];
            dg_di[node] -= q * (df[idx] / nu) * cx;
        }
    };

    const double q1 = -p.k1 / nn;
    for (const auto& e : g.edges()) {
        if (!in[e[0]] || !in[e[1]]) continue;
        // ordered realizations (a,b) and (b,a)
        for (int dir = 0; dir < 2; ++dir) {
            const int i = dir == 0 ? e[0] : e[1];
            const int j = dir == 0 ? e[1] : e[0];
            const double ii = s.actions[i], ij = s.actions[j];
            const double r = std::sqrt(ii * ij);
            const double f = r * (ij - ii);
            const double dfi = 0.5 * (r / ii) * (ij - ii) - r;
            const double dfj = 0.5 * (r / ij) * (ij - ii) + r;
            const int nodes[2] = {i, j};
            const double df[2] = {dfi, dfj};
            const int kvec[2] = {-1, 1};
            add_mode(q1, p.omega[j] - p.omega[i], f, nodes, df, kvec,
                     s.angles[j] - s.angles[i]);
        }
    }
    if (spec.mode == ControlMode::full) {
        const double q2 = -2.0 * p.k2 / (nn * nn);  // two ordered realizations per center
        for (const auto& t : g.triangles()) {
            if (!in[t[0]] || !in[t[1]] || !in[t[2]]) continue;
            for (int c = 0; c < 3; ++c) {
                const int i = t[c], j = t[(c + 1) % 3], k = t[(c + 2) % 3];
                const double ii = s.actions[i], ij = s.actions[j], ik = s.actions[k];
                const double r = std::cbrt(ii * ij * ik);
                const double sum = ij + ik - 2.0 * ii;
                const double f = r * sum;
                const double dfi = (r / (3.0 * ii)) * sum - 2.0 * r;
                const double dfj = (r / (3.0 * ij)) * sum + r;
                const double dfk = (r / (3.0 * ik)) * sum + r;
                const int nodes[3] = {i, j, k};
                const double df[3] = {dfi, dfj, dfk};
                const int kvec[3] = {-2, 1, 1};
                add_mode(q2, p.omega[j] + p.omega[k] - 2.0 * p.omega[i], f, nodes, df, kvec,
                         s.angles[j] + s.angles[k] - 2.0 * s.angles[i]);
            }
        }
    }
    double bracket = 0.0;
    for (int i = 0; i < n; ++i) bracket += dg_di[i] * dv_dth[i] - dg_dth[i] * dv_di[i];
    return bracket;
}

std::vector<double> control_oracle_fd(const Hypergraph& g, const ModelParams& p,
                                      std::span<const double> theta, const ControlSpec& spec,
                                      double delta) {
    check_mode_needs_pins(spec);
    const int n = g.n();
    if (static_cast<int>(theta.size()) != n)
        throw Error(ErrorCode::invalid_argument, "phase vector length mismatch");
    ActionAngleState s;
    s.actions.assign(n, 0.5);
    s.angles.assign(theta.begin(), theta.end());
    std::vector<double> h(n, 0.0);
    for (int i : validated_pinned(g, spec)) {
        s.actions[i] = 0.5 + delta;
        const double plus = bracket_functional(g, p, s, spec);
        s.actions[i] = 0.5 - delta;
        const double minus = bracket_functional(g, p, s, spec);
        s.actions[i] = 0.5;
        h[i] = -0.5 * (plus - minus) / (2.0 * delta);
    }
    return h;
}

}  // namespace hokm
