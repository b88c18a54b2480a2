#!/usr/bin/env python3
"""Print the mpmath reference values frozen in tests/test_reference_values.cpp."""
import mpmath as mp

mp.mp.dps = 40


def kbessel(R, x):
    return mp.re(mp.besselk(1j * R, x))


def heat_kernel(t, rho):
    # s = rho + u^2; cosh s - cosh rho = 2 sinh(rho + u^2/2) sinh(u^2/2)
    def integrand(u):
        s = rho + u * u
        if u == 0:
            return 0 if rho == 0 else 2 * s * mp.exp(-s * s / (4 * t)) * mp.sqrt(2 / mp.sinh(rho))
        den = mp.sqrt(2 * mp.sinh(rho + u * u / 2) * mp.sinh(u * u / 2))
        return 2 * u * s * mp.exp(-s * s / (4 * t)) / den
    val = mp.quad(integrand, [0, 0.5, 1, 2, 4, mp.sqrt(4 * t * 120) + 4])
    return mp.sqrt(2) * mp.exp(-t / 4) / (4 * mp.pi * t) ** 1.5 * val


def main():
    print("# R x K_iR(x)")
    for R in (0, 1, 5, 9.5, 13.7):
        for x in (0.01, 0.5, 3, 10, 25):
            print(R, x, mp.nstr(kbessel(mp.mpf(R), mp.mpf(x)), 17))
    print("# t zeta(1 + it)")
    for t in (0.5, 2, 10, 24):
        z = mp.zeta(1 + 1j * t)
        print(t, mp.nstr(z.real, 17), mp.nstr(z.imag, 17))
    print("# z loggamma(z)")
    for z in (mp.mpc(0.5, 3), mp.mpc(1, 12), mp.mpc(5, -2)):
        g = mp.loggamma(z)
        print(z, mp.nstr(g.real, 17), mp.nstr(g.imag, 17))
    print("# t rho p_t(rho)")
    for t in (0.25, 0.5, 2, 8):
        for rho in (0, 0.01, 0.5, 2, 6):
            print(t, rho, mp.nstr(heat_kernel(mp.mpf(t), mp.mpf(rho)), 17))


if __name__ == "__main__":
    main()
