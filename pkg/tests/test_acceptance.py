"""Exit criteria, one test per criterion, each at its stated size.

Every test appends a PASS/FAIL line that the terminal summary prints.
"""

import random
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES
from oracles import mobius, mod_p_roots_distinct, riemann_hurwitz_v4, root_difference_disc, scan_s_unit_equation
from shafdec.decompose import decompose_recursive
from shafdec.enumeration import INF, canonical_class, enumerate_split_models, s_unit_solutions
from shafdec.exactmath import Poly, PrimeSet, discriminant, resultant
from shafdec.fiberprod import fiber_genus
from shafdec.hypermodel import (
    PointedModel,
    complete_the_square,
    good_reduction_outside,
    lockhart_discriminant,
    reduction_bijection_check,
    weierstrass_points,
)

X = Poly.x()
ODD_PRIMES_TO_50 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def rand_rational(rng, num=9, den=5):
    return F(rng.randint(-num, num), rng.randint(1, den))


def rand_roots(rng, n):
    roots = set()
    while len(roots) < n:
        roots.add(rand_rational(rng))
    return sorted(roots)


def rand_split_model(rng, genus):
    roots = rand_roots(rng, 2 * genus + 1)
    return PointedModel(genus, Poly.from_roots(roots)), roots


def test_criterion_1_discriminant_oracles():
    rng = random.Random(1)
    disc_ok = 0
    for _ in range(200):
        roots = rand_roots(rng, rng.randint(2, 8))
        if discriminant(Poly.from_roots(roots)) == root_difference_disc(roots):
            disc_ok += 1
    mult_ok = 0
    for _ in range(200):
        roots = rand_roots(rng, rng.randint(2, 9))
        k = rng.randint(1, len(roots) - 1)
        f, g = Poly.from_roots(roots[:k]), Poly.from_roots(roots[k:])
        if discriminant(f * g) == discriminant(f) * discriminant(g) * resultant(f, g) ** 2:
            mult_ok += 1
    record(1, disc_ok == 200 and mult_ok == 200,
           f"Sylvester disc = root-difference product {disc_ok}/200; multiplicativity {mult_ok}/200")


def test_criterion_2_lockhart_model_checks():
    d1 = lockhart_discriminant(PointedModel(1, X**3 - X))
    d2 = lockhart_discriminant(PointedModel(1, X**3, Poly([1])))
    rng = random.Random(2)
    preserved = 0
    checked = 0
    while checked < 100:
        g = rng.randint(1, 4)
        P = Poly([rand_rational(rng) for _ in range(2 * g + 1)] + [F(rng.randint(1, 5), rng.randint(1, 3))])
        Q = Poly([rand_rational(rng) for _ in range(rng.randint(0, g + 1))])
        m = PointedModel(g, P, Q)
        if not m.form.is_squarefree():
            continue
        S = PrimeSet(tuple(sorted({2} | set(rng.sample([3, 5, 7, 11], rng.randint(0, 2))))))
        checked += 1
        if lockhart_discriminant(complete_the_square(m, S)) == lockhart_discriminant(m):
            preserved += 1
    ok = d1 == 64 and d2 == -27 and preserved == 100
    record(2, ok, f"Delta(y^2=x^3-x)={d1}, Delta(y^2+y=x^3)={d2}, preserved {preserved}/100")


def test_criterion_3_lemma_reduction_bijection():
    rng = random.Random(3)
    agree = total = oracle_agree = 0
    totals_ok = 0
    for _ in range(100):
        m, roots = rand_split_model(rng, rng.randint(1, 4))
        delta = lockhart_discriminant(m)
        bad_den = {p for a in m.P for p in ODD_PRIMES_TO_50 if a.denominator % p == 0}
        for p in ODD_PRIMES_TO_50:
            if p in bad_den:
                continue
            verdict = reduction_bijection_check(m, p)
            total += 1
            agree += verdict == (delta.numerator % p != 0)
            oracle_agree += verdict == mod_p_roots_distinct(roots, p)
        totals_ok += weierstrass_points(m).total == 2 * m.genus + 2
    ok = agree == total and oracle_agree == total and totals_ok == 100
    record(3, ok, f"bijection vs p∤Delta {agree}/{total} (root oracle {oracle_agree}/{total}); "
                  f"2g+2 Weierstrass points {totals_ok}/100")


def test_criterion_4_decomposition_pipeline():
    S = PrimeSet((2, 3, 5, 7))
    tree = decompose_recursive(PointedModel(2, Poly.from_roots([-1, -2, -3, -4, -5])), S)
    base_ok = len(tree.internal_nodes()) == 1 and [l.genus for l in tree.leaves()] == [1, 1]
    rng = random.Random(4)
    good = 0
    runs = 0
    for g in range(2, 6):
        for _ in range(4):
            m, _ = rand_split_model(rng, g)
            t = decompose_recursive(m, S)
            nodes = t.internal_nodes()
            ok = len(nodes) == g - 1 and [l.genus for l in t.leaves()] == [1] * g
            for n in nodes:
                ok &= n.split.R1 * n.split.R2 == n.R
                ok &= discriminant(n.R) == discriminant(n.split.R1) * discriminant(n.split.R2) * resultant(
                    n.split.R1, n.split.R2) ** 2
            good += ok
            runs += 1
    record(4, base_ok and good == runs,
           f"genus-2 example 1 node/2 leaves: {base_ok}; random g=2..5 trees correct {good}/{runs}")


def _rand_squarefree_pair(rng):
    d1, d2 = rng.randint(2, 10), rng.randint(2, 10)
    roots = rand_roots(rng, d1 + d2)
    pool = iter(roots)
    quads = iter([2, 3, 5, 6, 7])

    def build(d):
        p = Poly([1])
        while d >= 2 and rng.random() < 0.3:
            p = p * (X**2 - next(quads))
            d -= 2
        return p * Poly.from_roots([next(pool) for _ in range(d)])

    return build(d1), build(d2)


def test_criterion_5_fiber_product_genus():
    rng = random.Random(5)
    agree = 0
    for _ in range(500):
        R1, R2 = _rand_squarefree_pair(rng)
        r = fiber_genus(R1, R2)
        agree += r.g3 == r.g1 + r.g2 + r.g12 == riemann_hurwitz_v4(R1.degree, R2.degree)
    pattern = {}
    for g in range(2, 7):
        r = fiber_genus(Poly.from_roots([1, 2, 3]), Poly.from_roots(range(10, 10 + 2 * g - 1)))
        pattern[g] = r.g3
    pattern_ok = all(v == 2 * g and v >= 2 for g, v in pattern.items())
    record(5, agree == 500 and pattern_ok,
           f"Riemann-Hurwitz = additivity {agree}/500; (3,2g-1) genus {pattern}")


def test_criterion_6_finiteness_at_desk_scale():
    S2 = PrimeSet((2,))
    e1 = enumerate_split_models(1, S2, 10)
    e2 = enumerate_split_models(2, S2, 10)
    sols = [(s.x, s.y) for s in s_unit_solutions(S2, 10)]
    oracle = scan_s_unit_equation([2], 10)
    ok = (
        len(e1.classes) == 1
        and e1.classes[0].report.discriminant == 64
        and len(e2.classes) == 0
        and sols == oracle == [(-1, 2), (F(1, 2), F(1, 2)), (2, -1)]
    )
    record(6, ok, f"g=1: {len(e1.classes)} class (Delta={e1.classes[0].report.discriminant}); "
                  f"g=2: {len(e2.classes)} classes; S-unit solutions {len(sols)} = oracle {len(oracle)}")


CRITERION_7_RUNS = [(1, (2,), 10), (2, (2,), 10), (2, (2, 3), 6), (2, (2, 3, 5), 3)]


def test_criterion_7_cross_module_consistency():
    failures = []
    reps = 0
    for genus, primes, bound in CRITERION_7_RUNS:
        S = PrimeSet(primes)
        for c in enumerate_split_models(genus, S, bound).classes:
            reps += 1
            if not good_reduction_outside(c.model, S).good_outside_s:
                failures.append((genus, primes, c.roots, "representative not good"))
                continue
            if genus >= 2:
                tree = decompose_recursive(c.model, S)
                if not tree.all_factor_reductions_good():
                    bad = sorted({p for n in tree.internal_nodes()
                                  for r in n.child_reports for p in r.bad_primes})
                    failures.append((genus, primes, tuple(map(str, c.roots)), f"factor curves bad at {bad}"))
    record(7, not failures, f"{reps - len(failures)}/{reps} representatives consistent; failures: {failures}")


def test_criterion_8_canonicalization_soundness():
    rng = random.Random(8)
    configs = [
        [F(0), F(1), F(-1), INF],
        [F(0), F(1), F(2), F(3), F(4), INF],
        [F(0), F(1, 2), F(3), F(-5, 2), F(7)],
        [F(0), F(1), F(9), F(-8), F(4), F(-3), F(3, 4), INF],
    ]
    for _ in range(4):
        configs.append(rand_roots(rng, rng.randint(4, 7)))
    invariant = 0
    for pts in configs:
        base = canonical_class(pts).signature
        same = True
        for _ in range(50):
            while True:
                a, b, c, d = (F(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(4))
                if a * d - b * c:
                    break
            same &= canonical_class([mobius(a, b, c, d, p) for p in pts]).signature == base
        invariant += same
    harmonic = canonical_class([0, 1, -1, INF]).signature == canonical_class([0, 1, 2, INF]).signature == (-1,)
    record(8, invariant == len(configs) and harmonic,
           f"invariant under 50 Moebius maps on {invariant}/{len(configs)} configurations; "
           f"{{0,1,-1,oo}} ~ {{0,1,2,oo}} signature (-1): {harmonic}")
