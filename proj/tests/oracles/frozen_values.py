"""Reference values frozen into the C++ tests.

Every number here is computed with mpmath at 40 digits, by routes that do not
share code with the library (direct hypergeometric evaluation, erf, gamma,
brute-force sums). Re-run with `python3 tests/oracles/frozen_values.py`.
"""
from mpmath import mp, mpf, hyp1f1, hyp0f1, exp, erf, sqrt, pi, log, gamma, nsum, inf, factorial, rf, mpc, conj, re, im

mp.dps = 40
ln2 = log(2)


def show(name, value):
    print(f"{name:48s} {mp.nstr(value, 20)}")


show("1F1(1;1.5;1)", hyp1f1(1, 1.5, 1))
for x in (mpf("0.25"), mpf(1), mpf(4)):
    show(f"erf closed form 1F1(1;1.5;{x})", sqrt(pi) / (2 * sqrt(x)) * exp(x) * erf(sqrt(x)))
    show(f"  erf(sqrt({x}))", erf(sqrt(x)))
show("1F1(1;1.5;1)*exp(-0.5)", hyp1f1(1, 1.5, 1) * exp(-0.5))
show("1F1(1;1.5;30)", hyp1f1(1, 1.5, 30))
show("asym 1F1(1;1.5;30)", gamma(1.5) / gamma(1) * exp(30) * mpf(30) ** (1 - 1.5))
show("1F1(1;2;50)", hyp1f1(1, 2, 50))
show("0F1(;2;1)", hyp0f1(2, 1))
show("1F1(1;2;0.5)", hyp1f1(1, 2, 0.5))
show("1F1(1;2;0.25)", hyp1f1(1, 2, 0.25))
show("normalized BG-PHO k=1 eps=ln2 |z|^2=0.5", 0.5 * hyp1f1(1, 2, 0.25) / hyp1f1(1, 2, 0.5))

# identity audit, e0 = 0.5, eps = ln 2, x = 1
e0, eps, x = mpf("0.5"), ln2, mpf(1)
lhs = exp(-eps * e0) * hyp1f1(1, e0 + 1, exp(-eps) * x)
rhs = hyp1f1(1, e0 + 1, x) * exp((exp(-eps) - 1) * x - eps * e0)
lhs_bf = nsum(lambda n: exp(-eps * (n + e0)) * x ** n / rf(e0 + 1, n), [0, inf])
show("audit lhs", lhs)
show("audit lhs (brute force)", lhs_bf)
show("audit rhs", rhs)
show("audit abs_diff", abs(lhs - rhs))

# asymptotic omega, linear spectrum
for e0, x in ((mpf("0.5"), mpf(30)), (mpf(1), mpf(50))):
    series = hyp1f1(1, e0 + 1, x)
    asym = gamma(e0 + 1) * exp(x) / x ** e0
    show(f"omega series e0={e0} x={x}", series)
    show(f"omega asym   e0={e0} x={x}", asym)
    show("  rel diff", abs(asym / series - 1))

# quadratic partition function, b = 1, eps = 1
show("Z quadratic b=1 eps=1", nsum(lambda n: exp(-n * (n + 1)), [0, inf]))

# oscillator thermal element, eps = 5, x = 2
show("exp(2 e^-5)", exp(2 * exp(-5)))

# KP pho k=1 thermal element at complex labels, eps = 0.5
z, zp = mpc("0.3", "0.2"), mpc("0.4", "-0.1")
w = conj(z) * zp
show("omega pho-kp re", re(exp(-1) * (1 - exp(mpf("-0.5")) * w) ** -2))
show("omega pho-kp im", im(exp(-1) * (1 - exp(mpf("-0.5")) * w) ** -2))
