"""Generate frozen Chebyshev tables for the Riemann-Siegel correction terms.

The remainder of the Riemann-Siegel main sum admits the expansion

    Z(t) - 2 sum_{n<=N} cos(theta(t) - t ln n)/sqrt(n)
        = (-1)^{N-1} a^{-1/2} sum_{k>=0} C_k(z) a^{-k},

with a = sqrt(t/(2 pi)), N = floor(a), p = a - N, z = 1 - 2p.  Each C_k is
a fixed entire function of z.  This script extracts C_0..C_K on a Chebyshev
grid of z by solving, per z node, a high-precision linear system built from
exact evaluations of Z(t) on a ladder of N values, then fits Chebyshev
coefficients and writes them to src/freezelab/_rs_tables.py.

Run: python3 tools/gen_rs_tables.py
"""

import time

import mpmath as mp
import numpy as np

K = 18                 # highest correction index
N_Z = 33               # Chebyshev-Lobatto nodes in z
LADDER_BASE = 40
LADDER_RATIO = 1.18
DPS = 120

mp.mp.dps = DPS


def remainder(n_int: int, p: mp.mpf) -> mp.mpf:
    a = n_int + p
    t = 2 * mp.pi * a * a
    theta = mp.siegeltheta(t)
    main = 2 * mp.fsum(
        mp.cos(theta - t * mp.log(n)) / mp.sqrt(n) for n in range(1, n_int + 1)
    )
    z = mp.siegelz(t)
    return (z - main) * (-1) ** (n_int - 1) * mp.sqrt(a)


def main():
    ladder = sorted({int(round(LADDER_BASE * LADDER_RATIO**i)) for i in range(K + 2)})
    assert len(ladder) >= K + 2
    solve_nodes = ladder[: K + 1]
    check_node = ladder[K + 1]

    zs = np.cos(np.pi * np.arange(N_Z) / (N_Z - 1))  # Lobatto nodes, z[0]=1
    c_table = np.empty((K + 1, N_Z))
    t0 = time.time()
    worst_resid = 0.0
    for j, z in enumerate(zs):
        p = (1 - mp.mpf(repr(float(z)))) / 2
        rs = [remainder(n, p) for n in solve_nodes]
        mat = mp.matrix(K + 1, K + 1)
        for i, n in enumerate(solve_nodes):
            a = mp.mpf(n) + p
            for k in range(K + 1):
                mat[i, k] = a ** (-k)
        sol = mp.lu_solve(mat, mp.matrix(rs))
        # residual at the held-out ladder point
        a = mp.mpf(check_node) + p
        pred = mp.fsum(sol[k] * a ** (-k) for k in range(K + 1))
        resid = abs(pred - remainder(check_node, p))
        worst_resid = max(worst_resid, float(resid))
        c_table[:, j] = [float(sol[k]) for k in range(K + 1)]
        print(f"z node {j+1}/{N_Z} done ({time.time()-t0:.0f}s, resid {float(resid):.2e})",
              flush=True)

    # Chebyshev interpolation through the Lobatto nodes, one series per k
    cheb = np.empty((K + 1, N_Z))
    for k in range(K + 1):
        cheb[k] = np.polynomial.chebyshev.chebfit(zs, c_table[k], N_Z - 1)

    with open("src/freezelab/_rs_tables.py", "w") as fh:
        fh.write('"""Frozen Chebyshev coefficients of the Riemann-Siegel correction\n')
        fh.write('terms C_0..C_K as functions of z on [-1, 1].\n\n')
        fh.write("Generated by tools/gen_rs_tables.py; do not edit by hand.\n")
        fh.write(f'Held-out ladder residual during generation: {worst_resid:.3e}\n"""\n\n')
        fh.write("import numpy as np\n\n")
        fh.write(f"K_MAX = {K}\n\n")
        fh.write("CHEB = np.array([\n")
        for k in range(K + 1):
            rows = ", ".join(repr(v) for v in cheb[k])
            fh.write(f"    [{rows}],\n")
        fh.write("])\n")
    print(f"max |C_k| by k: {np.abs(c_table).max(axis=1)}")
    print(f"worst held-out residual: {worst_resid:.3e}")
    print("wrote src/freezelab/_rs_tables.py")


if __name__ == "__main__":
    main()
