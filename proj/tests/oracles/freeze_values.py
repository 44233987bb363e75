# Copyright 2026 The Orlicz Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracles for the frozen constants used in the C++ tests.

Everything here uses mpmath / scipy directly on the defining formulas
(suprema by dense evaluation + bounded scalar optimisation, integrals by
adaptive quadrature, norms by root finding on the modular). None of it
shares code with the C++ library. Run with `python3 freeze_values.py`.
"""
import math

import mpmath as mp
from scipy import integrate, optimize

mp.mp.dps = 30


def conj_power_closed(p, s):
    return (p - 1) * p ** (-p / (p - 1)) * s ** (p / (p - 1))


def conj_brute(phi, s):
    # sup_t (s t - phi(t)) by bounded search on log t
    f = lambda u: -(s * mp.e ** u - phi(mp.e ** u))
    grid = [mp.mpf(k) / 10 for k in range(-300, 300)]
    best = min(grid, key=f)
    res = optimize.minimize_scalar(lambda u: float(f(u)), bounds=(float(best) - 0.2, float(best) + 0.2),
                                   method="bounded", options={"xatol": 1e-14})
    return -res.fun


print("# conjugate of t^3 at s=0.5,1,10 (closed form vs brute)")
for s in (0.5, 1.0, 10.0):
    print(s, conj_power_closed(3, s), conj_brute(lambda t: t ** 3, s))

print("# Delta2 ratio of e^t-t-1 at t=10,20,50")
phi_e = lambda t: mp.expm1(t) - t
for t in (10, 20, 50):
    print(t, phi_e(2 * t) / phi_e(t))

print("# counterexample scan: first t>=1 on a 1e-3 lattice with phi(t)>1 and phi(2t)>=phi(t)")
j = 0
while True:
    t = 1 + j * mp.mpf("0.001")
    if phi_e(t) > 1 and phi_e(2 * t) >= 1 * phi_e(t):
        print("t1 =", t, "phi(t1) =", phi_e(t), "ratio =", phi_e(2 * t) / phi_e(t))
        break
    j += 1
for k in (2, 3):
    t = mp.mpf(k)
    print("k", k, "phi(2k)/phi(k) =", phi_e(2 * t) / phi_e(t))

print("# |log(1+e^{i pi/3})| / log 2")
z = mp.e ** (1j * mp.pi / 3)
print(abs(mp.log(1 + z)), abs(mp.log(1 + z)) / mp.log(2))

print("# calculus constant (p e)^{-1/p} for p=1.5,2,3,5")
for p in (1.5, 2, 3, 5):
    print(p, (p * math.e) ** (-1 / p))

print("# semigroup Weiss sup for lambda_n=-n, c_n=sqrt n, Phi=t^2: sup sqrt(u) e^{-u}")
print(math.sqrt(0.5) * math.exp(-0.5))

print("# int_0^1 ln^2(1/t) dt")
print(mp.quad(lambda t: mp.log(1 / t) ** 2, [0, 1]))


# Class-P example (iii): Phi^{-1}(t) = t^{1/p} min(1, t^{1/q-1/p}), p=2, q=3
# so Phi(t) = t^2 for t <= 1 and t^3 for t >= 1.
def phi_iii(t):
    return t ** 2 if t <= 1 else t ** 3


def lux_exp(phi, s):
    # Luxemburg norm of e^{-s t} on (0, inf): modular(k) = int phi(e^{-st}/k) dt
    def modular(k):
        val, _ = integrate.quad(lambda t: phi(math.exp(-s * t) / k), 0, math.inf, epsabs=0, epsrel=1e-13, limit=500)
        return val
    return optimize.brentq(lambda lk: modular(math.exp(lk)) - 1, -30, 30, xtol=1e-15, rtol=1e-15)


print("# Luxemburg norm of e^{-t} on (0,inf) for class-P (iii) Phi")
print(math.exp(lux_exp(phi_iii, 1.0)))

print("# Luxemburg norm of the step (2 on (0,1), 1 on (1,2)) for class-P (iii)")
mod = lambda k: phi_iii(2 / k) + phi_iii(1 / k)
print(optimize.brentq(lambda k: mod(k) - 1, 0.5, 10, xtol=1e-15, rtol=1e-15))


def conj_iii(s):
    return conj_brute(lambda t: t ** 2 if t <= 1 else t ** 3, s)


print("# conjugate of class-P (iii) at s = 1, 2.5, 10")
for s in (1.0, 2.5, 10.0):
    print(s, conj_iii(s))
