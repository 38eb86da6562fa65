#include <vpdlr/fft.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>
#include <map>
#include <numbers>

namespace vpdlr {

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

struct plan {
    std::vector<int> bitrev;
    cvec twiddle; // exp(-2 pi i k/n), k < n/2
};

const plan& get_plan(int n) {
    thread_local std::map<int, plan> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    plan p;
    p.bitrev.resize(n);
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < bits; ++b)
            if (i & (1 << b)) r |= 1 << (bits - 1 - b);
        p.bitrev[i] = r;
    }
    p.twiddle.resize(n / 2);
    for (int k = 0; k < n / 2; ++k) {
        double a = -2.0 * std::numbers::pi * k / n;
        p.twiddle[k] = {std::cos(a), std::sin(a)};
    }
    return cache.emplace(n, std::move(p)).first->second;
}

} // namespace

void fft(cvec& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    if (!is_power_of_two(n))
        throw error(error_kind::invalid_input, "grid", "fft length must be a power of two");
    if (n == 1) return;
    const plan& p = get_plan(n);

    for (int i = 0; i < n; ++i)
        if (i < p.bitrev[i]) std::swap(a[i], a[p.bitrev[i]]);

    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2, stride = n / len;
        for (int i = 0; i < n; i += len) {
            for (int k = 0; k < half; ++k) {
                std::complex<double> w = p.twiddle[k * stride];
                if (inverse) w = std::conj(w);
                std::complex<double> u = a[i + k];
                std::complex<double> t = w * a[i + k + half];
                a[i + k] = u + t;
                a[i + k + half] = u - t;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / n;
        for (auto& z : a) z *= s;
    }
}

} // namespace vpdlr
