"""Independent high-precision oracles for values frozen into the C++ tests.

Uses mpmath brute force (direct sums, power series, quadrature); nothing
here shares code with the library.
"""
import mpmath as mp

mp.mp.dps = 40


def h_s2(a):
    a = mp.mpf(a)
    s = mp.nsum(lambda n: (2 * n + 1) / ((n * (n + 1)) ** 2 + a * a) ** 2, [1, mp.inf])
    return 4 / mp.pi * a ** 3 * s


def h_t2(a, K=1000):
    # raw enumeration of the disc |k| <= K with exact (fsum) accumulation;
    # the omitted tail is below 1e-16 for a <= 20
    import math
    import numpy as np
    x = np.arange(-K, K + 1, dtype=np.float64)
    m = (x[:, None] ** 2 + x[None, :] ** 2).ravel()
    m = m[(m > 0) & (m <= K * K)]
    a = float(a)
    tot = math.fsum((1.0 / (m * m + a * a) ** 2).tolist())
    return 4 / mp.pi ** 2 * mp.mpf(a) ** 3 * tot


def j0_series(x, terms=60):
    x = mp.mpf(x)
    return mp.fsum((-1) ** k * (x / 2) ** (2 * k) / mp.factorial(k) ** 2 for k in range(terms))


def chi_series(E):
    mu = mp.pi ** 2 / 16
    f = lambda t: 1 / (1 + mu * t * t)
    return mp.nsum(lambda n: (2 * n + 1) * (1 - f(E / (n * (n + 1)))) ** 2, [1, mp.inf]) / (4 * mp.pi)


if __name__ == "__main__":
    print("psi(1)", mp.digamma(1))
    print("psi'(1)", mp.psi(1, 1))
    print("psi(1+2i)", mp.digamma(mp.mpc(1, 2)))
    print("psi'(1+2i)", mp.psi(1, mp.mpc(1, 2)))
    print("psi(-3.5+0.25i)", mp.digamma(mp.mpc(-3.5, 0.25)))
    print("psi(1e6+3i)", mp.digamma(mp.mpc(1e6, 3)))
    print("J0(10) series", j0_series(10))
    for x in [15.999, 16, 16.001, 100, 1000]:
        print("J0", x, mp.besselj(0, x))
    print("J0 zero", mp.findroot(lambda x: j0_series(x), 2.4))
    for a in [1, 5, 20, 0.5, 7.3, 40, 100]:
        print("H_S2", a, h_s2(a))
    print("H_S2 small-a limit", 4 / mp.pi * mp.nsum(lambda n: (2 * n + 1) / (n * (n + 1)) ** 4, [1, mp.inf]))
    for a in [10, 100]:
        print("remainder", a, (h_s2(a) - 1 + 8 / (3 * mp.pi * a)) * a ** 3)
    print("-64/(315pi)", -64 / (315 * mp.pi))
    for E in [1, 10, 100]:
        print("chi", E, chi_series(E), "AE", mp.pi / 64 * E, "ratio", chi_series(E) / (mp.pi / 64 * E))
    for L in [1, 5]:
        lhs = mp.nsum(lambda j: mp.e ** (-2 * L * mp.sqrt(j)), [1, mp.inf])
        print("tail chain", L, lhs, mp.e ** (-L) * 2 / L ** 2)
    al = 1 / mp.mpf("4.6")
    b = mp.mpf("4.75")
    print("P(0)", (4 * al ** 4 + 1) ** 2 - 1 / b)
    print("conservative threshold", (2 / (al * mp.pi) * mp.log(2 ** mp.mpf(1.5) * b / al ** 2)) ** 2)
    print("optimistic threshold", (4 / mp.pi * mp.log(64 / mp.pi)) ** 2)
    h = lambda r: r / (r ** 4 + 1) ** 2
    for xi in [0.5, 1, 5, 10]:
        v = mp.quadosc(lambda r: mp.besselj(0, xi * r) * h(r), [0, mp.inf], zeros=lambda n: mp.besseljzero(0, n) / xi)
        print("hhat", xi, v, "bound", mp.e ** (-xi / 2))
    for a in [1, 5, 20]:
        print("H_T2", a, h_t2(a))
    # sum_k |k|^{-8} = 4 zeta(4) beta(4) (sums of two squares), Dirichlet beta by Hurwitz zeta
    beta4 = (mp.zeta(4, mp.mpf(1) / 4) - mp.zeta(4, mp.mpf(3) / 4)) / 4 ** 4
    print("H_T2 small-a limit", 4 / mp.pi ** 2 * 4 * mp.zeta(4) * beta4)
