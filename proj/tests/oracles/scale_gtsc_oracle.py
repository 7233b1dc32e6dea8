# Reference W^(q)(x) for GTSC exponents by high-precision Laplace inversion in mpmath.
from mpmath import mp, mpf, gamma, invertlaplace, sqrt, sinh, erfc, exp, pi

mp.dps = 40


def psi(a, g, c, zeta, kappa, varphi):
    C = c * gamma(-a)
    return lambda t: (t - varphi) * (kappa + zeta * t + C * (g ** a - (g + t) ** a))


CASES = {
    "A": dict(g=1, c=1, zeta=0, kappa=0, varphi=0),
    "B": dict(g=1, c=1, zeta=0, kappa=1, varphi=0),
    "C": dict(g=1, c=1, zeta=0, kappa=0, varphi=1),
    "D": dict(g=1, c=1, zeta=1, kappa=0, varphi=0),
}


def w(label, a, q, x):
    p = psi(mpf(a), **{k: mpf(v) for k, v in CASES[label].items()})
    return invertlaplace(lambda s: 1 / (p(s) - q), x, method="dehoog")


if __name__ == "__main__":
    for label, a, q, x in [("A", mpf(1) / 2, mpf(1) / 2, 1), ("B", -mpf(1) / 2, 0, 1), ("C", mpf(1) / 3, 0, 2),
                           ("D", mpf(1) / 3, mpf(1) / 2, 1), ("D", -mpf(2) / 3, 0, mpf(1) / 4),
                           ("A", 1 / sqrt(2), mpf(1) / 2, 1)]:
        print(label, a, q, x, mp.nstr(w(label, a, q, x), 20))
    # IG(1,1) at q = 0 and at the double-root value q0 = 16/27
    x = mpf(1)
    print("ig0", mp.nstr((1 / mpf(2)) * ((1 + x) * erfc(-sqrt(x / 2)) + sqrt(2 * x / pi) * exp(-x / 2) - 1), 20))
    ig = lambda s: (s - 0) * (sqrt(2) * (sqrt(s + mpf(1) / 2) - sqrt(mpf(1) / 2)))
    print("igq0", mp.nstr(invertlaplace(lambda s: 1 / (ig(s) - mpf(16) / 27), x, method="dehoog"), 20))
    print("sinh1", mp.nstr(sinh(1), 20))
