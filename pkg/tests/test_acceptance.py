"""Exit criteria.  Each test prints one PASS/FAIL line; run with ``-s`` or ``-v``."""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from minorsum.integral import (
    approx_integral,
    iterated_integral_oracle,
    lhs_pfaffian,
    rhs_product,
)
from minorsum.linalg import Matrix, SkewMatrix, determinant, pfaffian_combinatorial, pfaffian_eliminate
from minorsum.okada import minor_sum_bruteforce, minor_sum_okada
from minorsum.symbolic import reduction_check, verify_identity

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def _report(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        return ok

    return _report


def random_positive_rational(rng):
    return Fraction(rng.randint(1, 20), rng.randint(1, 6))


def test_1_okada_identity(report):
    rng = np.random.default_rng(20240101)
    start = time.perf_counter()
    matches, parities = 0, set()
    trials = 500
    for t in range(trials):
        n = int(rng.integers(2, 9))
        k = int(rng.integers(1, 7))
        parities.add(k % 2)
        C = Matrix(rng.integers(-5, 6, size=(n, k)).tolist(), cols=k)
        matches += minor_sum_okada(C).value == minor_sum_bruteforce(C).value
    elapsed = time.perf_counter() - start
    ok = matches == trials and elapsed < 30 and parities == {0, 1}
    report("1 Okada identity", ok, f"{matches}/{trials} exact matches in {elapsed:.2f}s (< 30s)")
    assert ok


def test_2_pfaffian_self_consistency(report):
    rng = random.Random(7)
    start = time.perf_counter()
    good = 0
    trials = 200
    for t in range(trials):
        dim = (2, 4, 6, 8)[t % 4]
        vals = {(i, j): Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                for i in range(dim) for j in range(i + 1, dim)}
        S = SkewMatrix.from_upper(dim, lambda i, j: vals[i, j])
        pf = pfaffian_eliminate(S)
        good += pf == pfaffian_combinatorial(S) and pf * pf == determinant(S)
    elapsed = time.perf_counter() - start
    ok = good == trials and elapsed < 10
    report("2 Pfaffian self-consistency", ok, f"{good}/{trials} exact in {elapsed:.2f}s (< 10s)")
    assert ok


# golden values; (1,2) from the closed form, the rest from an independent
# sympy iterated integration run before the package was written
GOLDEN = [
    ((1, 2), Fraction(1, 6)),
    ((1, 2, 3), Fraction(1, 180)),
    ((1, 2, 3, 4), Fraction(1, 25200)),
    ((1, 2, 3, 4, 5), Fraction(1, 15876000)),
]


def test_3_main_formula(report):
    start = time.perf_counter()
    failures = []
    for a, value in GOLDEN:
        got = (lhs_pfaffian(a), rhs_product(a), iterated_integral_oracle(a))
        if got != (value,) * 3:
            failures.append((a, got))
    rng = random.Random(3)
    for _ in range(100):
        k = rng.randint(1, 6)
        a = [random_positive_rational(rng) for _ in range(k)]
        r = rhs_product(a)
        if not (lhs_pfaffian(a) == r == iterated_integral_oracle(a)):
            failures.append(a)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    report("3 main formula", ok,
           f"4 golden + 100 random, {len(failures)} failures in {elapsed:.2f}s (< 60s)")
    assert ok, failures


def test_4_symbolic_instances(report):
    start = time.perf_counter()
    identity = {k: verify_identity(k) for k in range(1, 6)}
    reduction = {k: reduction_check(k) for k in range(2, 6)}
    elapsed = time.perf_counter() - start
    ok = all(identity.values()) and all(reduction.values()) and elapsed < 60
    report("4 symbolic instances", ok,
           f"identity k=1..5 {identity}, reduction k=2..5 {reduction}, {elapsed:.2f}s (< 60s)")
    assert ok


def test_5_structural_properties(report):
    rng = random.Random(5)
    cases = 200
    swap_ok = repeat_ok = homog_ok = multi_ok = 0
    for _ in range(cases):
        k = rng.randint(2, 6)
        a = [random_positive_rational(rng) for _ in range(k)]
        i, j = rng.sample(range(k), 2)
        b = list(a)
        b[i], b[j] = b[j], b[i]
        swap_ok += lhs_pfaffian(b) == -lhs_pfaffian(a) and rhs_product(b) == -rhs_product(a)
        c = list(a)
        c[j] = c[i]
        repeat_ok += lhs_pfaffian(c) == 0 and rhs_product(c) == 0
    for _ in range(cases):
        k = rng.randint(1, 6)
        a = [random_positive_rational(rng) for _ in range(k)]
        base = lhs_pfaffian(a)
        homog_ok += all(
            lhs_pfaffian([lam * x for x in a]) == lam ** (-k) * base
            for lam in (Fraction(2), Fraction(3), Fraction(1, 2))
        )
    for _ in range(cases):
        n, k = rng.randint(1, 8), rng.randint(1, 6)
        C = Matrix([[rng.randint(-5, 5) for _ in range(k)] for _ in range(n)], cols=k)
        j = rng.randrange(k)
        u = [rng.randint(-5, 5) for _ in range(n)]
        v = [rng.randint(-5, 5) for _ in range(n)]
        alpha, beta = Fraction(rng.randint(-5, 5), rng.randint(1, 3)), rng.randint(-5, 5)
        mixed = minor_sum_okada(C.replace_column(j, [alpha * x + beta * y for x, y in zip(u, v)]))
        parts = (alpha * minor_sum_okada(C.replace_column(j, u)).value
                 + beta * minor_sum_okada(C.replace_column(j, v)).value)
        multi_ok += mixed.value == parts
    counts = (swap_ok, repeat_ok, homog_ok, multi_ok)
    ok = counts == (cases,) * 4
    report("5 structural properties", ok,
           f"antisymmetry {swap_ok}/{cases}, repeated-zero {repeat_ok}/{cases}, "
           f"homogeneity {homog_ok}/{cases}, multilinearity {multi_ok}/{cases}")
    assert ok


def test_6_discretization_convergence(report):
    start = time.perf_counter()
    details, ok = [], True
    for a in ((1, 2), (1, 2, 3)):
        exact = float(lhs_pfaffian(a))
        err_200 = abs(approx_integral(a, 200) - exact)
        err_2000 = abs(approx_integral(a, 2000) - exact)
        rel = err_2000 / abs(exact)
        ok &= rel < 0.01 and err_2000 < err_200
        details.append(f"a={a}: rel err {rel:.2e} at n=2000, abs err {err_200:.2e} -> {err_2000:.2e}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30
    report("6 discretization convergence", ok, "; ".join(details) + f"; {elapsed:.2f}s (< 30s)")
    assert ok
