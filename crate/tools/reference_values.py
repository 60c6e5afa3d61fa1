#!/usr/bin/env python3
"""Regenerate the high-precision reference values frozen into the test suite.

Every constant below is computed with 40-digit arithmetic (mpmath) and then
rounded to f64 for use in assertions. Run:

    python3 tools/reference_values.py
"""

from mpmath import mp, mpf, gamma, loggamma, hyp2f1, pi, sin, sqrt, log

mp.dps = 40


def gl_truncated(coeffs, r, x, q, n):
    """Truncated Grunwald-Letnikov sum for f(t) = sum_j coeffs[j] * t^j.

    Direct summation of h^{-r} * sum_{k=0}^{n} (-1)^k C(r,k) f(x - k h)
    with h = q x / n, abscissae formed as x (1 - q k / n).
    """
    r, x, q = mpf(r), mpf(x), mpf(q)
    h = q * x / n
    weight = mpf(1)  # signed weight (-1)^k C(r,k), k = 0
    total = mpf(0)
    for k in range(n + 1):
        t = x * (1 - q * k / n)
        ft = sum(c * t**j for j, c in enumerate(coeffs) if c != 0)
        total += weight * ft
        weight = weight * (k - r) / (k + 1)
    return h ** (-r) * total


def rl_power(p, r, x):
    p, r, x = mpf(p), mpf(r), mpf(x)
    return gamma(p + 1) / gamma(p - r + 1) * x ** (p - r)


def show(label, value):
    print(f"{label:<58} {mpf(value)}")


print("== log-gamma spot table: x, ln|Gamma(x)|, sign ==")
for x in ["0.1", "0.5", "1.5", "7.3", "42", "123.456", "170", "-0.5", "-1.5", "-2.5", "-10.3"]:
    g = gamma(mpf(x))
    print(f"  x={x:<9} ln={log(abs(g))!s:<45} sign={'+1' if g > 0 else '-1'}")

print("\n== Gauss 2F1 spots ==")
show("2F1(0.3, 0.7; 2.1; 0.5)", hyp2f1(mpf("0.3"), mpf("0.7"), mpf("2.1"), mpf("0.5")))
show("2F1(1.1, 0.4; 1.9; 0.95)", hyp2f1(mpf("1.1"), mpf("0.4"), mpf("1.9"), mpf("0.95")))
show("2F1(-0.5, 0.8; 1.2; -0.7)", hyp2f1(mpf("-0.5"), mpf("0.8"), mpf("1.2"), mpf("-0.7")))
show("2F1(0.2, 0.3; 2.0; 1.0)  [unit argument]", hyp2f1(mpf("0.2"), mpf("0.3"), mpf("2.0"), 1))

print("\n== characteristic-equation spots ==")
p, r, q = mpf("0.5"), mpf("0.25"), mpf("0.7")
show("q^-r 2F1(-0.5,-0.25;0.75;0.7)", q ** (-r) * hyp2f1(-p, -r, 1 - r, q))
p, r, q = mpf("3.2"), mpf("0.75"), mpf("0.9")
show("q^-r 2F1(-3.2,-0.75;0.25;0.9)", q ** (-r) * hyp2f1(-p, -r, 1 - r, q))
p, r = mpf(2), mpf("0.75")
q = mpf("0.6")
fin = sum(
    [gamma(p + 1) / (gamma(mpf(j) + 1) * gamma(p - j + 1)) * (-q) ** j / (r - j) for j in range(3)]
)
show("q^-r * r * finite_sum(p=2, r=0.75, q=0.6)", q ** (-r) * r * fin)
p, r = mpf("1.7"), mpf("0.25")
show("rhs(p=1.7, r=0.25)", pi * r / sin(pi * r) * gamma(p + 1) / (gamma(r + 1) * gamma(p - r + 1)))

print("\n== Riemann-Liouville spots ==")
show("rl(p=1, r=0.5, x=1) = 2/sqrt(pi)", rl_power(1, "0.5", 1))
show("rl(p=2, r=0.5, x=1)", rl_power(2, "0.5", 1))
two_axis = rl_power("0.7", "0.3", "1.2") * rl_power("1.3", "0.6", "0.9")
show("rl(p=(0.7,1.3), r=(0.3,0.6), x=(1.2,0.9))", two_axis)

print("\n== GL truncation study: p=1, r=0.5, x=1, q=1 ==")
target = rl_power(1, "0.5", 1)
prev = None
for n in (100, 1000, 10000):
    value = gl_truncated([0, 1], "0.5", 1, 1, n)
    rel = abs(value - target) / target
    print(f"  N={n:<6} gl={value!s:<45} rel_err={rel}")
    assert prev is None or rel < prev
    prev = rel

print("\n== GL truncation study: taylor (0,1,1), r=0.5, x=1, q=1 ==")
target = rl_power(1, "0.5", 1) + rl_power(2, "0.5", 1)
print(f"  target = {target}")
prev = None
for n in (100, 1000, 10000):
    value = gl_truncated([0, 1, 1], "0.5", 1, 1, n)
    rel = abs(value - target) / target
    print(f"  N={n:<6} gl={value!s:<45} rel_err={rel}")
    assert prev is None or rel < prev
    prev = rel
