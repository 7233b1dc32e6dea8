# Reference values for the applications layer.  Run: python3 applications_oracle.py
import mpmath as mp

mp.mp.dps = 40


def gtsc_psi(alpha, gamma=1, c=1, zeta=0, kappa=0, varphi=0):
    cg = c * mp.gamma(-alpha)
    return lambda t: (t - varphi) * (kappa + zeta * t + cg * (gamma**alpha - (gamma + t) ** alpha))


def inv(F, x):
    return mp.invertlaplace(F, x, method="dehoog")


# inverse Gaussian delta = gamma = 1 as a tempered ladder: alpha = 1/2, c = 1/sqrt(2 pi), gamma = 1/2
ig = gtsc_psi(mp.mpf(1) / 2, gamma=mp.mpf(1) / 2, c=1 / mp.sqrt(2 * mp.pi))
w = lambda x: inv(lambda t: 1 / ig(t), x)
print("ig exit W(1)/W(2)", mp.nstr(w(1) / w(2), 20))

# case E, alpha = 1/2, q = 1: W'' <-> theta^2/(psi - q) - W'(0+), W'(0+) = 1/zeta = 1
psiE = gtsc_psi(mp.mpf(1) / 2, zeta=1, kappa=1)
q = 1
w2 = lambda x: inv(lambda t: t**2 / (psiE(t) - q) - 1, x)
a = mp.findroot(w2, 0.5)
wpa = inv(lambda t: t / (psiE(t) - q), a)
print("case E a*", mp.nstr(a, 20), "W'(a*)", mp.nstr(wpa, 20))
print("case E value at a*/2", mp.nstr(inv(lambda t: 1 / (psiE(t) - q), a / 2) / wpa, 20))

# Z^(q) for case A, alpha = 1/2, q = 1 at x = 2: transform psi/(theta (psi - q))
psiA = gtsc_psi(mp.mpf(1) / 2)
print("case A Z(2)", mp.nstr(inv(lambda t: psiA(t) / (t * (psiA(t) - 1)), 2), 20))


# risk model: psi = theta (kappa + lambda - lambda (gamma/(gamma + theta))^nu)
def risk_ruin(lam, kappa, gamma, nu, x):
    psi = lambda t: t * (kappa + lam - lam * (gamma / (gamma + t)) ** nu)
    return 1 - kappa * inv(lambda t: 1 / psi(t), x)


print("risk(1,1,1,0.5) ruin x=1", mp.nstr(risk_ruin(1, 1, 1, mp.mpf(1) / 2, 1), 20))
print("risk(2,0.5,1.5,0.3) ruin x=2", mp.nstr(risk_ruin(2, mp.mpf(1) / 2, mp.mpf(3) / 2, mp.mpf(3) / 10, 2), 20))
