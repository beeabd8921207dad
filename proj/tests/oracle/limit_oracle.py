#!/usr/bin/env python3
"""Independent oracle for frozen test values.

q-binomials are evaluated from the Pochhammer limit
    lim_{a->q} (a;q)_n / ((a;q)_k (a;q)_{n-k})
with sympy rational-function arithmetic. Integer binomials use the
coefficient of x^k in the Laurent expansion of (1+x)^n around 0 (k >= 0)
or infinity (k < 0). Neither route shares code with the C++ library.
Run: python3 tests/oracle/limit_oracle.py
"""
import sympy as sp
from math import comb, factorial

a, q, x = sp.symbols("a q x")


def poch(n):
    if n >= 0:
        return sp.Mul(*[(1 - a * q**j) for j in range(n)])
    return sp.Mul(*[1 / (1 - a * q**(-j)) for j in range(1, -n + 1)])


def qbinom_limit(n, k):
    expr = sp.cancel(sp.together(poch(n) / (poch(k) * poch(n - k))))
    return sp.expand(sp.cancel(expr.subs(a, q)))


def render(expr):
    expr = sp.expand(expr)
    if expr == 0:
        return "0"
    terms = sp.Poly(sp.expand(expr * q**400), q).terms()
    items = sorted((e[0] - 400, int(c)) for e, c in terms)
    out = []
    for i, (e, c) in enumerate(items):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qp = "q" if e == 1 else f"q^{e}"
            body = qp if mag == 1 else f"{mag}*{qp}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def falling(n, j):
    r = 1
    for i in range(j):
        r *= n - i
    return r


def int_bin(n, k):
    if k >= 0:
        return falling(n, k) // factorial(k)
    # (1+x)^n = x^n (1+1/x)^n = sum_j C(n,j) x^(n-j) around infinity
    j = n - k
    if j < 0:
        return 0
    return falling(n, j) // factorial(j)


def apery(n):
    return sum(int_bin(n, k) ** 2 * int_bin(n + k, k) ** 2 for k in range(-200, 201))


def main():
    print("# limit-definition q-binomials")
    for n, k in [(-3, -5), (-3, 2), (-3, -4), (-4, -8), (-1, 3), (4, 2), (-2, -3),
                 (-5, 3), (-4, -6), (3, -2), (-3, -2), (6, 3), (-6, -2), (0, 0), (-2, 0)]:
        print(f"qbinom({n},{k}) = {render(qbinom_limit(n, k))}")
    print("# integer binomials")
    for n, k in [(-11, -19), (-3, 2), (-2, -3), (-4, -8), (-3, -5)]:
        print(f"bin({n},{k}) = {int_bin(n, k)}")
    print("bin grid n,k in -2..2:")
    for n in range(-2, 3):
        print("  ", [int_bin(n, k) for k in range(-2, 3)])
    print("# q^22 * qbinom(-4,-8) vs Phi5*Phi6*Phi7")
    lhs = sp.expand(q**22 * qbinom_limit(-4, -8))
    rhs = sp.expand(sp.cyclotomic_poly(5, q) * sp.cyclotomic_poly(6, q) * sp.cyclotomic_poly(7, q))
    print("equal:", sp.expand(lhs - rhs) == 0)
    print("# Chu-Vandermonde")
    def chu(n, m, k):
        js = range(0, k + 1) if k >= 0 else range(-1, k, -1)
        s = sum(q**((k - j) * (n - j)) * qbinom_limit(n, j) * qbinom_limit(m, k - j) for j in js)
        return sp.expand(s - qbinom_limit(n + m, k)) == 0
    for t in [(-3, -1, 4), (2, 3, 2), (-2, -2, -3)]:
        print("chu", t, chu(*t))
    print("# q-Lucas (5,2) mod Phi_4")
    diff = sp.expand(qbinom_limit(5, 2) - qbinom_limit(1, 2) * int_bin(1, 0))
    print("rem:", sp.rem(diff, sp.cyclotomic_poly(4, q), q))
    print("# Pochhammer (-x;q)_-3 coefficient of x^2")
    f = 1
    for j in range(1, 4):
        f = f / (1 + x * q**(-j))
    c2 = sp.series(f, x, 0, 3).removeO().coeff(x, 2)
    print("coef x^2:", render(sp.expand(c2)))
    print("# freshman: middle gaussian binomials mod Phi_m")
    for m in (5, 6):
        ok = all(sp.rem(sp.expand(qbinom_limit(m, k)), sp.cyclotomic_poly(m, q), q) == 0 for k in range(1, m))
        print("m", m, ok)
    print("# Apery numbers")
    print("A(n), n=0..5:", [apery(n) for n in range(6)])
    print("A(-n), n=1..6:", [apery(-n) for n in range(1, 7)])
    for lhs_i, rhs_i in [(4, 0), (24, 4), (5, 1), (10, 2), (25, 5)]:
        print(f"A({lhs_i}) - A({rhs_i}) mod 125 = {(apery(lhs_i) - apery(rhs_i)) % 125}")


if __name__ == "__main__":
    main()
