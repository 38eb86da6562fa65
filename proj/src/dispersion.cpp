#include <vpdlr/diagnostics.hpp>
#include <vpdlr/errors.hpp>
#include <vpdlr/fft.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace vpdlr {

namespace {

using cplx = std::complex<double>;
constexpr int weideman_n = 64;

// Coefficients of Weideman's rational expansion of w in the upper half plane.
struct weideman_table {
    double L;
    std::array<double, weideman_n> a; // highest power first
};

const weideman_table& table() {
    static const weideman_table tab = [] {
        weideman_table t;
        const int N = weideman_n, M = 2 * N, M2 = 2 * M;
        t.L = std::sqrt(N / std::sqrt(2.0));
        cvec f(M2, 0.0);
        // f[0] = 0, f[1 + j] for k = -M+1 .. M-1.
        for (int j = 0; j < M2 - 1; ++j) {
            const int k = j - M + 1;
            const double th = k * std::numbers::pi / M;
            const double tt = t.L * std::tan(0.5 * th);
            f[j + 1] = std::exp(-tt * tt) * (t.L * t.L + tt * tt);
        }
        cvec g(M2);
        for (int j = 0; j < M2; ++j) g[j] = f[(j + M) % M2]; // fftshift
        fft(g);
        for (int j = 0; j < N; ++j) t.a[j] = g[N - j].real() / M2;
        return t;
    }();
    return tab;
}

cplx faddeeva_upper(cplx z) {
    const weideman_table& t = table();
    const cplx iz(-z.imag(), z.real());
    const cplx den = t.L - iz;
    const cplx Z = (t.L + iz) / den;
    cplx p = 0.0;
    for (double c : t.a) p = p * Z + c;
    return 2.0 * p / (den * den) + (1.0 / std::sqrt(std::numbers::pi)) / den;
}

// Dielectric function and its omega-derivative.
std::pair<cplx, cplx> dielectric(double k, cplx omega, double vbar, bool two_beams) {
    const double s2k = std::sqrt(2.0) * k;
    cplx F = 1.0, dF = 0.0;
    const int beams = two_beams ? 2 : 1;
    for (int b = 0; b < beams; ++b) {
        const double drift = two_beams ? (b == 0 ? vbar : -vbar) : 0.0;
        const double share = 1.0 / beams;
        const cplx zeta = (omega / k - drift) / std::sqrt(2.0);
        const cplx Z = plasma_z(zeta);
        const cplx g = 1.0 + zeta * Z;
        const cplx dZ = -2.0 * g;
        F += share * g / (k * k);
        dF += share * (Z + zeta * dZ) / (k * k) / s2k;
    }
    return {F, dF};
}

cplx dispersion_newton(double k, cplx omega0, double vbar, bool two_beams) {
    cplx omega = omega0;
    for (int it = 0; it < 100; ++it) {
        const auto [F, dF] = dielectric(k, omega, vbar, two_beams);
        const cplx step = F / dF;
        omega -= step;
        if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag())) break;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(omega))) return omega;
    }
    throw error(error_kind::no_root, "diagnostics", "dispersion relation: Newton iteration did not converge");
}

} // namespace

cplx faddeeva(cplx z) {
    if (z.imag() >= 0.0) return faddeeva_upper(z);
    return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

cplx plasma_z(cplx z) { return cplx(0.0, std::sqrt(std::numbers::pi)) * faddeeva(z); }

cplx landau_dispersion_rate(double k) {
    if (!(k > 0.0)) throw error(error_kind::invalid_input, "diagnostics", "wavenumber must be positive");
    // Bohm-Gross frequency as the starting point.
    return dispersion_newton(k, cplx(std::sqrt(1.0 + 3.0 * k * k), -0.01), 0.0, false);
}

cplx two_stream_dispersion_rate(double k, double vbar) {
    if (!(k > 0.0)) throw error(error_kind::invalid_input, "diagnostics", "wavenumber must be positive");
    // For symmetric beams the dielectric function is real on the imaginary
    // axis; the fastest growing root is the largest sign change there.
    const int samples = 400;
    const double g_max = 2.0;
    double prev = dielectric(k, cplx(0.0, g_max), vbar, true).first.real();
    for (int i = samples - 1; i >= 1; --i) {
        const double g = g_max * i / samples;
        const double cur = dielectric(k, cplx(0.0, g), vbar, true).first.real();
        if ((cur < 0.0) != (prev < 0.0))
            return dispersion_newton(k, cplx(0.0, g + 0.5 * g_max / samples), vbar, true);
        prev = cur;
    }
    throw error(error_kind::no_root, "diagnostics", "two-stream dispersion relation has no growing root");
}

} // namespace vpdlr
