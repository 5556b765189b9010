# Brute-force grid oracle for the dual-pairing norm of one f under an exponent
# that crosses 2. The pairing maximizer over rho_{p'}(g) <= 1 has
# |g| e^{-|z|^2} = (kappa v / p')^{p-1} with v = |f| e^{-|z|^2}.
# Run: python3 tests/oracles/equivalence_counterexample.py
import numpy as np
from scipy.optimize import brentq

h = 0.01
L = 8
x = np.arange(-L, L + h / 2, h)
X, Y = np.meshgrid(x, x)
Z = X + 1j * Y
R2 = np.abs(Z) ** 2
poly = [complex(-0.6363492541157398, 0.06810095085928447), complex(0.5576923813800105, 0.2730005017903212),
        complex(-0.959227252241091, 0.02152651871667688)]
c = complex(0.5967786586842503, 0.6407919646801594)
a = complex(-1.4421587745878952, 0.13659124367957487)
F = sum(ck * Z ** k for k, ck in enumerate(poly)) + c * np.exp(2 * Z * np.conj(a))
P = 2.5438751708047023 + 0.808113769462418 * np.sin(X) * np.exp(-np.abs(Z) / 4)
Pd = P / (P - 1)
dA = h * h
Cp = np.sum(np.exp(-R2 * P)) * dA
Cd = np.sum(np.exp(-R2 * Pd)) * dA
v = np.abs(F) * np.exp(-R2)


def rho(lam):
    return np.sum((v / lam) ** P) * dA / Cp


nrm = brentq(lambda l: rho(l) - 1, 1e-3, 1e3, xtol=1e-14)
vh = v / nrm


def phi(k):
    return np.sum((k * vh / Pd) ** P) * dA / Cd


k = brentq(lambda k: phi(k) - 1, 1e-6, 1e6, xtol=1e-14)
val = (2 / np.pi) * np.sum(vh * (k * vh / Pd) ** (P - 1)) * dA
print("norm", repr(nrm), "triple", repr(val * nrm), "ratio", repr(val))
# norm 7.493522643027089 triple 7.401939352721737 ratio 0.9877783394181676
