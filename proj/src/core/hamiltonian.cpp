#include "core/hamiltonian.hpp"

#include <cmath>
#include <complex>

#include "core/errors.hpp"

namespace hokm {

namespace {

constexpr double kActionFloor = 1e-12;

void check_state(const Hypergraph& g, const ModelParams& p, const ActionAngleState& s) {
    if (static_cast<int>(s.actions.size()) != g.n() || static_cast<int>(s.angles.size()) != g.n())
        throw Error(ErrorCode::invalid_argument, "action/angle length does not match node count");
    if (static_cast<int>(p.omega.size()) != g.n())
        throw Error(ErrorCode::invalid_argument, "omega length does not match node count");
    for (double a : s.actions)
        if (!(a > 0.0))
            throw Error(ErrorCode::numeric, "nonpositive action: the embedding flow left its domain");
}

double clamped(double a) { return a < kActionFloor ? kActionFloor : a; }

}  // namespace

double hamiltonian_value(const Hypergraph& g, const ModelParams& p, const ActionAngleState& s) {
    check_state(g, p, s);
    const int n = g.n();
    const double nn = static_cast<double>(n);
    double h = 0.0;
    for (int i = 0; i < n; ++i) h += p.omega[i] * s.actions[i];
    // Ordered pair/triple sums collapse to twice the per-simplex terms.
    double pair_sum = 0.0;
    for (const auto& e : g.edges()) {
        const double ia = clamped(s.actions[e[0]]), ib = clamped(s.actions[e[1]]);
        pair_sum += 2.0 * std::sqrt(ia * ib) * (ib - ia) * std::sin(s.angles[e[1]] - s.angles[e[0]]);
    }
    double tri_sum = 0.0;
    for (const auto& t : g.triangles()) {
        const double ia = clamped(s.actions[t[0]]), ib = clamped(s.actions[t[1]]),
                     ic = clamped(s.actions[t[2]]);
        const double r = std::cbrt(ia * ib * ic);
        const double ta = s.angles[t[0]], tb = s.angles[t[1]], tc = s.angles[t[2]];
        tri_sum += 2.0 * r *
                   ((ib + ic - 2.0 * ia) * std::sin(tb + tc - 2.0 * ta) +
                    (ia + ic - 2.0 * ib) * std::sin(ta + tc - 2.0 * tb) +
                    (ia + ib - 2.0 * ic) * std::sin(ta + tb - 2.0 * tc));
    }
    return h - p.k1 / nn * pair_sum - p.k2 / (nn * nn) * tri_sum;
}

std::pair<std::vector<double>, std::vector<double>> hamiltonian_flow_rhs(
    const Hypergraph& g, const ModelParams& p, const ActionAngleState& s) {
    check_state(g, p, s);
    const int n = g.n();
    const double nn = static_cast<double>(n);
    const double c1 = p.k1 / nn, c2 = p.k2 / (nn * nn);

    std::vector<std::complex<double>> z(n), z2(n);
    for (int i = 0; i < n; ++i) {
        z[i] = std::polar(1.0, s.angles[i]);
        z2[i] = z[i] * z[i];
    }
    std::vector<double> idot(n, 0.0), thdot(n, 0.0);

    for (const auto& e : g.edges()) {
        const int a = e[0], b = e[1];
        const double ia = clamped(s.actions[a]), ib = clamped(s.actions[b]);
        const double r = std::sqrt(ia * ib);
        const double diff = ib - ia;
        const std::complex<double> ph = z[b] * std::conj(z[a]);  // exp(i(th_b - th_a))
        const double cs = ph.real(), sn = ph.imag();
        const double ge = 2.0 * r * diff * cs;
        idot[a] -= c1 * ge;
        idot[b] += c1 * ge;
        const double da = 0.5 * (r / ia) * diff - r;
        const double db = 0.5 * (r / ib) * diff + r;
        thdot[a] -= 2.0 * c1 * sn * da;
        thdot[b] -= 2.0 * c1 * sn * db;
    }

    for (const auto& t : g.triangles()) {
        const int a = t[0], b = t[1], c = t[2];
        const double ia = clamped(s.actions[a]), ib = clamped(s.actions[b]),
                     ic = clamped(s.actions[c]);
        const double r = std::cbrt(ia * ib * ic);
        const double sa = ib + ic - 2.0 * ia;  // action factor of the a-centered mode
        const double sb = ia + ic - 2.0 * ib;
        const double sc = ia + ib - 2.0 * ic;
        const std::complex<double> pab = z[a] * z[b], pac = z[a] * z[c], pbc = z[b] * z[c];
        const std::complex<double> ea = pbc * std::conj(z2[a]);  // exp(i(th_b+th_c-2th_a))
        const std::complex<double> eb = pac * std::conj(z2[b]);
        const std::complex<double> ec = pab * std::conj(z2[c]);
        const double ga = 2.0 * r * sa * ea.real();
        const double gb = 2.0 * r * sb * eb.real();
        const double gc = 2.0 * r * sc * ec.real();
        idot[a] += c2 * (-2.0 * ga + gb + gc);
        idot[b] += c2 * (ga - 2.0 * gb + gc);
        idot[c] += c2 * (ga + gb - 2.0 * gc);
        const double wa = r / (3.0 * ia), wb = r / (3.0 * ib), wc = r / (3.0 * ic);
        const double sina = ea.imag(), sinb = eb.imag(), sinc = ec.imag();
        thdot[a] -= 2.0 * c2 *
                    (sina * (wa * sa - 2.0 * r) + sinb * (wa * sb + r) + sinc * (wa * sc + r));
        thdot[b] -= 2.0 * c2 *
                    (sina * (wb * sa + r) + sinb * (wb * sb - 2.0 * r) + sinc * (wb * sc + r));
        thdot[c] -= 2.0 * c2 *
                    (sina * (wc * sa + r) + sinb * (wc * sb + r) + sinc * (wc * sc - 2.0 * r));
    }

    for (int i = 0; i < n; ++i) thdot[i] += p.omega[i];
    return {std::move(idot), std::move(thdot)};
}

void hamiltonian_flow_packed(const Hypergraph& g, const ModelParams& p, std::span<const double> y,
                             std::span<double> dydt) {
    const int n = g.n();
    if (static_cast<int>(y.size()) != 2 * n || static_cast<int>(dydt.size()) != 2 * n)
        throw Error(ErrorCode::invalid_argument, "packed state must have length 2n");
    ActionAngleState s;
    s.actions.assign(y.begin(), y.begin() + n);
    s.angles.assign(y.begin() + n, y.end());
    auto [idot, thdot] = hamiltonian_flow_rhs(g, p, s);
    std::copy(idot.begin(), idot.end(), dydt.begin());
    std::copy(thdot.begin(), thdot.end(), dydt.begin() + n);
}

}  // namespace hokm
