#!/usr/bin/env python3
"""Generate Hecke-normalized Maass cusp form coefficients for SL2(Z).

Runs Hejhal's collocation method in mpmath at high precision, refines each
spectral parameter by a secant iteration on the difference between a(2)
solved at two collocation heights, and writes the result in the `#maass-sl2z v1` format
read by the library.

    python3 scripts/gen_maass_data.py > data/maass_sl2z.txt
"""
import sys

import mpmath as mp

# Approximate spectral parameters (from published tables) and parities.
SEEDS = [
    ("9.5336952613535575543", "odd"),
    ("12.173008324679677", "odd"),
    ("13.779751351890738", "even"),
    ("14.358509518259813", "odd"),
    ("16.138073171529580", "odd"),
    ("16.644259201899820", "odd"),
    ("17.738563381", "even"),
    ("18.180917834", "odd"),
]

N_OUT = 16


def reduce_point(x, y):
    """Pull x+iy back into the standard fundamental domain."""
    while True:
        x = x - mp.floor(x + mp.mpf(1) / 2)
        r2 = x * x + y * y
        if r2 >= 1 - mp.mpf(10) ** (-mp.mp.dps + 5):
            return x, y
        x, y = -x / r2, y / r2


def trig(parity, t):
    return mp.cos(t) if parity == "even" else mp.sin(t)


def solve(r, parity, M, Y):
    """Return [a_1..a_M] with a_1 = 1 for spectral parameter r."""
    Q = M + 12
    nu = mp.mpc(0, r)
    pts = []
    for m in range(1, Q + 1):
        x = (mp.mpf(m) - mp.mpf(1) / 2) / (2 * Q)
        xs, ys = reduce_point(x, Y)
        pts.append((x, xs, ys))
    kstar = [[mp.re(mp.besselk(nu, 2 * mp.pi * l * ys)) * mp.sqrt(ys) * trig(parity, 2 * mp.pi * l * xs)
              for l in range(1, M + 1)] for (_, xs, ys) in pts]
    diag = [mp.sqrt(Y) * mp.re(mp.besselk(nu, 2 * mp.pi * n * Y)) for n in range(1, M + 1)]
    V = mp.matrix(M, M)
    for n in range(1, M + 1):
        cs = [trig(parity, 2 * mp.pi * n * p[0]) for p in pts]
        for l in range(1, M + 1):
            s = mp.fsum(cs[m] * kstar[m][l - 1] for m in range(Q))
            V[n - 1, l - 1] = 2 * s / Q
        V[n - 1, n - 1] -= diag[n - 1]
    # a_1 = 1; solve rows n = 2..M for a_2..a_M
    A = mp.matrix(M - 1, M - 1)
    b = mp.matrix(M - 1, 1)
    for i in range(1, M):
        for j in range(1, M):
            A[i - 1, j - 1] = V[i, j]
        b[i - 1] = -V[i, 0]
    sol = mp.lu_solve(A, b)
    return [mp.mpf(1)] + [sol[i] for i in range(M - 1)]


def height_defect(r, parity, M):
    """a_2 from two collocation heights; vanishes only at eigenvalues."""
    a = solve(r, parity, M, mp.mpf("0.80"))
    b = solve(r, parity, M, mp.mpf("0.70"))
    return a[1] - b[1]


def refine(r0, parity, M, tol, step):
    r0 = mp.mpf(r0)
    r1 = r0 + step
    f0 = height_defect(r0, parity, M)
    f1 = height_defect(r1, parity, M)
    for _ in range(20):
        if f1 == f0 or abs(r1 - r0) < tol:
            break
        r2 = r1 - f1 * (r1 - r0) / (f1 - f0)
        r0, f0 = r1, f1
        r1 = r2
        f1 = height_defect(r1, parity, M)
        print(f"# {parity} M={M} r={mp.nstr(r1, 30)} defect={mp.nstr(f1, 3)}", file=sys.stderr)
    return r1


def main():
    mp.mp.dps = 40
    print("#maass-sl2z v1")
    # the format has no comment lines; diagnostics go to stderr
    for r0, parity in SEEDS:
        mp.mp.dps = 30
        r = refine(r0, parity, 12, mp.mpf("1e-20"), mp.mpf("1e-7"))
        mp.mp.dps = 64
        r = refine(r, parity, 24, mp.mpf("1e-50"), mp.mpf("1e-22"))
        mp.mp.dps = 80
        a = solve(r, parity, 26, mp.mpf("0.60"))[:N_OUT]
        print(f"# {parity} r={mp.nstr(r, 25)} a2*a3-a6={mp.nstr(a[1] * a[2] - a[5], 3)} "
              f"a2^2-1-a4={mp.nstr(a[1] ** 2 - 1 - a[3], 3)}", file=sys.stderr)
        mp.mp.dps = 40
        print(f"form r={mp.nstr(r, 16, strip_zeros=False)} parity={parity} n={N_OUT}")
        for i in range(0, N_OUT, 6):
            print(" ".join(mp.nstr(c, 17, strip_zeros=False, min_fixed=-1, max_fixed=-1) for c in a[i:i + 6]))
        sys.stdout.flush()


if __name__ == "__main__":
    main()
