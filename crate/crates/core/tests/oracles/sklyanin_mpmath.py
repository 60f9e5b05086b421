"""Independent high-precision evaluation of the chart Poisson brackets.

Group elements come from mpmath's matrix exponential, derivatives from
mpmath's numerical differentiation at 60 digits, and the invariant fields
from a QR least-squares solve. Prints `k l value` for every chart pair at
the points frozen in tests/regression.rs.

    python3 tests/oracles/sklyanin_mpmath.py
"""

from mpmath import mp, mpf, matrix, expm, diff, qr_solve, tan, tanh, cos, cosh, sinh

mp.dps = 60


def generators(eta):
    e2 = eta * eta
    z = lambda: matrix(4, 4)
    J0, J1, J2, P0, P1, P2 = (z() for _ in range(6))
    J0[2, 3], J0[3, 2] = -1, 1
    J1[1, 3], J1[3, 1] = -1, -1
    J2[1, 2], J2[2, 1] = 1, 1
    P0[0, 1], P0[1, 0] = -e2, 1
    P1[0, 2], P1[2, 0] = e2, 1
    P2[0, 3], P2[3, 0] = e2, 1
    return [J0, J1, J2, P0, P1, P2]


def element(c, eta):
    J0, J1, J2, P0, P1, P2 = generators(eta)
    x0, x1, x2, t0, t1, t2 = c
    return expm(x0 * P0) * expm(x1 * P1) * expm(x2 * P2) * expm(t2 * J2) * expm(t1 * J1) * expm(t0 * J0)


def r_matrix(eta, xi):
    # eta J0^J2 + 1/2(-P0^J0 + P1^J1 + P2^J2), with A^B = A(x)B - B(x)A
    r = matrix(6, 6)
    J0, J1, J2, P0, P1, P2 = range(6)

    def wedge(a, b, s):
        r[a, b] += s
        r[b, a] -= s

    wedge(J0, J2, eta)
    wedge(P0, J0, -mpf(1) / 2)
    wedge(P1, J1, mpf(1) / 2)
    wedge(P2, J2, mpf(1) / 2)
    return r * xi


def fields(c, eta):
    T = element(c, eta)
    cols = []
    for k in range(6):
        def entry(t, k=k):
            cc = list(c)
            cc[k] = t
            return element(cc, eta)
        d = matrix(4, 4)
        for i in range(4):
            for j in range(4):
                d[i, j] = diff(lambda t: entry(t)[i, j], c[k])
        cols.append(d)
    D = matrix(16, 6)
    for k in range(6):
        for p in range(16):
            D[p, k] = cols[k][p // 4, p % 4]
    left, right = [], []
    for X in generators(eta):
        for target, out in ((T * X, left), (X * T, right)):
            b = matrix(16, 1)
            for p in range(16):
                b[p] = target[p // 4, p % 4]
            a, res = qr_solve(D, b)
            assert res < mpf(10) ** -40, res
            out.append([a[k] for k in range(6)])
    return left, right


def brackets(c, eta, xi):
    left, right = fields(c, eta)
    r = r_matrix(eta, xi)
    pi = matrix(6, 6)
    for k in range(6):
        for l in range(6):
            s = 0
            for a in range(6):
                for b in range(6):
                    s += r[a, b] * (left[a][k] * left[b][l] - right[a][k] * right[b][l])
            pi[k, l] = s
    return pi


def closed_xx(x, eta, xi):
    x0, x1, x2 = x
    u = cos(eta * x0) * (cos(eta * x0) * cosh(eta * x1) + sinh(eta * x1))
    return (-xi * tanh(eta * x2) / eta * u, xi * tanh(eta * x1) / eta * u, xi * tan(eta * x0) / eta * u)


POINTS = [
    (("0.1", "0.2", "0.3", "0.4", "0.5", "0.6"), "0.5", "1"),
    (("-0.35", "0.6", "-0.15", "0.7", "-0.25", "0.45"), "-0.8", "2"),
    (("0.55", "-0.4", "0.25", "-0.6", "0.3", "-0.75"), "0.3", "-1"),
]

if __name__ == "__main__":
    for coords, eta, xi in POINTS:
        c = [mpf(v) for v in coords]
        eta, xi = mpf(eta), mpf(xi)
        pi = brackets(c, eta, xi)
        cf = closed_xx(c[:3], eta, xi)
        for slot, (k, l) in enumerate([(0, 1), (0, 2), (1, 2)]):
            assert abs(pi[k, l] - cf[slot]) < mpf(10) ** -30, (k, l)
        print("point", coords, "eta", eta, "xi", xi)
        for k in range(6):
            for l in range(k + 1, 6):
                print(k, l, mp.nstr(pi[k, l], 20))
