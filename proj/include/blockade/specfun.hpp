#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "blockade/constants.hpp"

namespace blockade {

/// Angular momentum stored as 2j, so integer and half-integer values are
/// exact.  The channel basis of this problem is all-integer; half-integer
/// support exists for the Wigner routines.
struct HalfInteger {
    int twice = 0;

    constexpr HalfInteger() = default;
    constexpr HalfInteger(int whole) : twice(2 * whole) {}
    static constexpr HalfInteger from_twice(int t) {
        HalfInteger h;
        h.twice = t;
        return h;
    }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
};

namespace detail {

inline double log_factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(512);
        t[0] = 0.0;
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] + std::log(double(k));
        return t;
    }();
    if (n < 0) throw std::domain_error("log_factorial of negative argument");
    return n < int(table.size()) ? table[n] : std::lgamma(double(n) + 1.0);
}

// triangle rule on twice-values, including the integer-perimeter condition
inline bool triad_ok(int ta, int tb, int tc) {
    if ((ta + tb + tc) % 2 != 0) return false;
    return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

// ln of Delta(abc) = (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!
inline double log_triangle_coeff(int ta, int tb, int tc) {
    return log_factorial((ta + tb - tc) / 2) + log_factorial((ta - tb + tc) / 2) +
           log_factorial((-ta + tb + tc) / 2) - log_factorial((ta + tb + tc) / 2 + 1);
}

} // namespace detail

/// Legendre polynomial P_ell(x) by upward recurrence.  x is clamped to
/// [-1, 1]; values beyond |x| = 1 + 1e-12 are rejected.
inline double legendre_p(int ell, double x) {
    if (ell < 0) throw std::domain_error("legendre_p: negative degree");
    if (std::abs(x) > 1.0 + 1e-12) throw std::domain_error("legendre_p: |x| > 1");
    x = std::clamp(x, -1.0, 1.0);
    if (ell == 0) return 1.0;
    double pm1 = 1.0, p = x;
    for (int l = 1; l < ell; ++l) {
        const double pp1 = ((2 * l + 1) * x * p - l * pm1) / (l + 1);
        pm1 = p;
        p = pp1;
    }
    return p;
}

/// Exponentially scaled modified spherical Bessel functions of the first
/// kind, out[l] = e^(-x) i_l(x) for l = 0..lmax.  Finite for all x >= 0;
/// at x = 0 the values are {1, 0, 0, ...}.  Series for small x, Miller's
/// downward recurrence normalized against the closed-form l = 0 otherwise.
inline void scaled_bessel_i_all(int lmax, double x, double* out) {
    if (lmax < 0) throw std::domain_error("scaled_bessel_i_all: negative order");
    if (x < 0) throw std::domain_error("scaled_bessel_i_all: negative argument");
    if (x == 0.0) {
        out[0] = 1.0;
        for (int l = 1; l <= lmax; ++l) out[l] = 0.0;
        return;
    }
    if (x < 1.0) {
        // i_l(x) = x^l / (2l+1)!! * sum_k (x^2/2)^k / (k! (2l+2k+1)!!)
        const double ex = std::exp(-x);
        const double x2h = 0.5 * x * x;
        double xl = 1.0;        // x^l
        double dfact = 1.0;     // (2l+1)!!
        for (int l = 0; l <= lmax; ++l) {
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 40; ++k) {
                term *= x2h / (double(k) * double(2 * l + 2 * k + 1));
                sum += term;
                if (term < 1e-18 * sum) break;
            }
            out[l] = ex * xl / dfact * sum;
            xl *= x;
            dfact *= double(2 * l + 3);
        }
        return;
    }
    const int lstart = lmax + 26 + int(std::sqrt(x));
    double ip1 = 0.0, i = 1e-155;
    std::vector<double> ladder(lmax + 1);
    for (int l = lstart; l >= 0; --l) {
        const double im1 = ip1 + (2 * l + 1) / x * i;
        if (l - 1 <= lmax && l - 1 >= 0) ladder[l - 1] = im1;
        if (l <= lmax) ladder[l] = i; // overwritten as we descend; final value kept
        ip1 = i;
        i = im1;
    }
    // exact scaled l = 0: e^(-x) sinh(x)/x = (1 - e^(-2x)) / (2x)
    const double i0 = (1.0 - std::exp(-2.0 * x)) / (2.0 * x);
    const double scale = i0 / ladder[0];
    for (int l = 0; l <= lmax; ++l) out[l] = ladder[l] * scale;
}

inline double scaled_bessel_i(int ell, double x) {
    std::vector<double> tmp(ell + 1);
    scaled_bessel_i_all(ell, x, tmp.data());
    return tmp[ell];
}

/// Wigner 3j symbol from the Racah formula with log-factorial
/// accumulation.  Invalid triads and projections return 0.
inline double wigner_3j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger m1,
                        HalfInteger m2, HalfInteger m3) {
    using detail::log_factorial;
    const int tj1 = j1.twice, tj2 = j2.twice, tj3 = j3.twice;
    const int tm1 = m1.twice, tm2 = m2.twice, tm3 = m3.twice;
    if (tj1 < 0 || tj2 < 0 || tj3 < 0) return 0.0;
    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0) return 0.0;
    if (!detail::triad_ok(tj1, tj2, tj3)) return 0.0;

    // all exact integers from here on
    const int jpm1 = (tj1 + tm1) / 2, jmm1 = (tj1 - tm1) / 2;
    const int jpm2 = (tj2 + tm2) / 2, jmm2 = (tj2 - tm2) / 2;
    const int jpm3 = (tj3 + tm3) / 2, jmm3 = (tj3 - tm3) / 2;

    const double log_pref =
        0.5 * (detail::log_triangle_coeff(tj1, tj2, tj3) + log_factorial(jpm1) +
               log_factorial(jmm1) + log_factorial(jpm2) + log_factorial(jmm2) +
               log_factorial(jpm3) + log_factorial(jmm3));

    const int a = (tj1 + tj2 - tj3) / 2; // j1 + j2 - j3
    const int b = (tj3 - tj2 + tm1) / 2; // j3 - j2 + m1
    const int c = (tj3 - tj1 - tm2) / 2; // j3 - j1 - m2
    const int kmin = std::max({0, -b, -c});
    const int kmax = std::min({a, jmm1, jpm2});
    if (kmin > kmax) return 0.0;

    // peel the largest term out of the alternating sum
    double max_log = -1e300;
    for (int k = kmin; k <= kmax; ++k) {
        const double lt = -(log_factorial(k) + log_factorial(a - k) + log_factorial(jmm1 - k) +
                            log_factorial(jpm2 - k) + log_factorial(b + k) + log_factorial(c + k));
        max_log = std::max(max_log, lt);
    }
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double lt = -(log_factorial(k) + log_factorial(a - k) + log_factorial(jmm1 - k) +
                            log_factorial(jpm2 - k) + log_factorial(b + k) + log_factorial(c + k));
        const double term = std::exp(lt - max_log);
        sum += (k % 2 == 0) ? term : -term;
    }
    const int phase_exp = (tj1 - tj2 - tm3) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * sum * std::exp(log_pref + max_log);
}

/// Wigner 6j symbol from the Racah formula; 0 for violated triads.
inline double wigner_6j(HalfInteger j1, HalfInteger j2, HalfInteger j3, HalfInteger j4,
                        HalfInteger j5, HalfInteger j6) {
    using detail::log_factorial;
    const int t1 = j1.twice, t2 = j2.twice, t3 = j3.twice;
    const int t4 = j4.twice, t5 = j5.twice, t6 = j6.twice;
    if (t1 < 0 || t2 < 0 || t3 < 0 || t4 < 0 || t5 < 0 || t6 < 0) return 0.0;
    if (!detail::triad_ok(t1, t2, t3) || !detail::triad_ok(t1, t5, t6) ||
        !detail::triad_ok(t4, t2, t6) || !detail::triad_ok(t4, t5, t3))
        return 0.0;

    const double log_pref =
        0.5 * (detail::log_triangle_coeff(t1, t2, t3) + detail::log_triangle_coeff(t1, t5, t6) +
               detail::log_triangle_coeff(t4, t2, t6) + detail::log_triangle_coeff(t4, t5, t3));

    const int s1 = (t1 + t2 + t3) / 2, s2 = (t1 + t5 + t6) / 2;
    const int s3 = (t4 + t2 + t6) / 2, s4 = (t4 + t5 + t3) / 2;
    const int q1 = (t1 + t2 + t4 + t5) / 2, q2 = (t2 + t3 + t5 + t6) / 2,
              q3 = (t3 + t1 + t6 + t4) / 2;
    const int kmin = std::max({s1, s2, s3, s4});
    const int kmax = std::min({q1, q2, q3});
    if (kmin > kmax) return 0.0;

    double max_log = -1e300;
    for (int k = kmin; k <= kmax; ++k) {
        const double lt = log_factorial(k + 1) -
                          (log_factorial(k - s1) + log_factorial(k - s2) + log_factorial(k - s3) +
                           log_factorial(k - s4) + log_factorial(q1 - k) + log_factorial(q2 - k) +
                           log_factorial(q3 - k));
        max_log = std::max(max_log, lt);
    }
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double lt = log_factorial(k + 1) -
                          (log_factorial(k - s1) + log_factorial(k - s2) + log_factorial(k - s3) +
                           log_factorial(k - s4) + log_factorial(q1 - k) + log_factorial(q2 - k) +
                           log_factorial(q3 - k));
        const double term = std::exp(lt - max_log);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum * std::exp(log_pref + max_log);
}

/// Li_{3/2}(z) = sum_{k>=1} z^k / k^{3/2} on [0, 1].  Direct series for
/// k < 200, then an Euler-Maclaurin tail whose integral has the closed form
/// 2 e^(-aN)/sqrt(N) - 2 sqrt(a pi) erfc(sqrt(aN)) with a = -ln z.
inline double polylog_3_2(double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("polylog_3_2: argument outside [0, 1]");
    if (z == 0.0) return 0.0;

    constexpr int N = 200;
    double sum = 0.0, zk = 1.0;
    for (int k = 1; k < N; ++k) {
        zk *= z;
        sum += zk / (double(k) * std::sqrt(double(k)));
        if (zk < 1e-300) return sum;
    }
    const double a = -std::log(z);
    const double sN = std::sqrt(double(N));
    const double zN = std::exp(-a * N);
    const double integral =
        2.0 * zN / sN - 2.0 * std::sqrt(a * constants::pi) * std::erfc(std::sqrt(a * N));
    // f(t) = e^(-a t) t^(-3/2) and its odd derivatives at t = N
    const double g0 = 1.0 / (double(N) * sN);
    const double g1 = -1.5 * g0 / N;
    const double g2 = 3.75 * g0 / (double(N) * N);
    const double g3 = -13.125 * g0 / (double(N) * N * N);
    const double f0 = zN * g0;
    const double f1 = zN * (g1 - a * g0);
    const double f3 = zN * (g3 - 3.0 * a * g2 + 3.0 * a * a * g1 - a * a * a * g0);
    return sum + integral + 0.5 * f0 - f1 / 12.0 + f3 / 720.0;
}

} // namespace blockade
