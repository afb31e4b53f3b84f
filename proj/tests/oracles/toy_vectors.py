#!/usr/bin/env python3
# Copyright 2026 The Private Web Search Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracle for the toy-group vectors frozen into the C++ tests.

Plain Python integer arithmetic only; nothing here shares code with the
library. Run it to regenerate the constants quoted in the test files.
"""
from fractions import Fraction
from itertools import product
from math import comb, log10

p, q, g = 23, 11, 4
assert (p - 1) % q == 0 and pow(g, q, p) == 1 and g != 1
qr = sorted({x * x % p for x in range(1, p)})
print("QR mod 23:", qr)
print("G_q == QR:", sorted(pow(g, k, p) for k in range(q)) == qr)

def enc(m):
    return m if m in qr else p - m

print("encode 3,5,1 ->", enc(3), enc(5), enc(1))

# Key generation and El Gamal.
y1, y2 = pow(g, 3, p), pow(g, 5, p)
print("y(x=3)=", y1, " y(x=5)=", y2, " combined=", y1 * y2 % p, " 4^8=", pow(g, 8, p))
y = 18
a, b = pow(g, 2, p), 9 * pow(y, 2, p) % p
print("encrypt(m=9,r=2) ->", (a, b))
d = pow(a, 3, p)
print("td_share(x=3) ->", d, " combine ->", b * pow(d, -1, p) % p)
ra, rb = a * g % p, b * y % p
print("rerandomize(gamma=1) ->", (ra, rb), " decrypts to", rb * pow(pow(ra, 3, p), -1, p) % p)

# Schnorr worked example with forced challenge.
x, h, w, e = 3, 18, 5, 7
comm = pow(g, w, p)
z = (w + e * x) % q
print("dl proof: a=", comm, "z=", z, "g^z=", pow(g, z, p), "a*h^e=", comm * pow(h, e, p) % p)

# Shamir example over Z_11.
qt = 11
shares = [(j, (5 + 2 * j + 3 * j * j) % qt) for j in (1, 2, 3)]
print("shares of 5 with (2,3):", shares)

def lagrange0(points, mod):
    s = 0
    for j, v in points:
        num, den = 1, 1
        for k, _ in points:
            if k != j:
                num = num * k % mod
                den = den * (k - j) % mod
        s = (s + v * num * pow(den, -1, mod)) % mod
    return s

print("reconstruct ->", lagrange0(shares, qt))
print("pad(10, a=1, n=2) ->", (10 << 2) | 1)

# Exhaustive Z_5 privacy: distribution of any 2 of 3 shares is independent of q.
mod = 5
for subset in [(1, 2), (1, 3), (2, 3)]:
    dists = []
    for secret in range(mod):
        hist = {}
        for c1, c2 in product(range(mod), repeat=2):
            key = tuple((secret + c1 * j + c2 * j * j) % mod for j in subset)
            hist[key] = hist.get(key, 0) + 1
        dists.append(hist)
    assert all(d == dists[0] for d in dists)
print("Z_5 privacy exhaustive: ok")

# Lemma.
def exact(nu, t, n):
    ng = nu // n
    return Fraction(comb(t, n // 2) * comb(nu - t, n // 2), ng * comb(nu, n))

def bound(nu, t, n):
    ng = nu // n
    return Fraction(2 ** n, ng) * Fraction(nu - t, t) ** (n // 2) * Fraction(t, nu) ** n

print("exact(4,2,2) =", exact(4, 2, 2), " bound(4,2,2) =", bound(4, 2, 2))
bnd = bound(10**6, 10**3, 30)
print("bound(1e6,1e3,30) = %.6e (log10 %.4f)" % (float(bnd), log10(bnd.numerator) - log10(bnd.denominator)))
ex = exact(100, 30, 10)
print("exact(100,30,10) = %.8e ; 1e6 trials -> mean %.2f sd %.2f" % (float(ex), float(ex) * 1e6, (float(ex) * (1 - float(ex)) * 1e6) ** 0.5))
viol = 0
for nu in (100, 1000, 10000):
    for frac in (Fraction(1, 1000), Fraction(1, 100), Fraction(1, 10)):
        t = int(nu * frac)
        if t == 0:
            continue
        for n in range(4, 31, 2):
            if exact(nu, t, n) > bound(nu, t, n):
                viol += 1
print("grid violations of exact <= bound:", viol)
