"""Acceptance criteria, one test per criterion, all at exact tolerance.

Every test records a PASS/FAIL line; the lines are printed at the end of a
pytest run (see conftest.py) and when this file is run as a script.
"""
from __future__ import annotations

import time
from fractions import Fraction

from gptmaxinc import zoo
from gptmaxinc.channel import HermitianMatrix, kron, qubit_channel_case, verify_case
from gptmaxinc.compat import (
    JointWitness, check_compatible, complement_variants, degcom_free, degcom_half, dual_beta,
    verify_duality,
)
from gptmaxinc.gpt import effect_from_functional
from gptmaxinc.maxinc import (
    DiscriminationTask, check_pair_maxinc, find_discriminator, find_maxinc, forced_table,
    joint_would_discriminate,
)
from gptmaxinc.polytope import Halfspace, exposed_face
from oracles import bisect_degcom

HALF = Fraction(1, 2)
RESULTS: list[str] = []
CERTIFICATES: list = []  # every certificate produced below, re-examined by criterion 10

_random = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def random_cases():
    if "cases" not in _random:
        _random["cases"] = zoo.random_instances(60, seed=7)
    return _random["cases"]


def pair(K, fa, fb, ga, gb):
    return effect_from_functional(K, fa, fb), effect_from_functional(K, ga, gb)


def test_criterion_01_square_is_maximal():
    t0 = time.perf_counter()
    K = zoo.space("square")
    f, g = pair(K, (1, 0), 0, (0, 1), 0)
    lam_h, lam_f = degcom_half(f, g).lambda_star, degcom_free(f, g).lambda_star
    beta = dual_beta(f, g).beta
    dual_ok = verify_duality(f, g)
    elapsed = time.perf_counter() - t0
    cert = check_pair_maxinc(f, g)
    if cert:
        CERTIFICATES.append(cert)
    ok = lam_h == HALF and lam_f == HALF and beta == 1 and dual_ok and elapsed < 1
    record(1, "square x1, x2: half = free = 1/2, beta = 1, duality", ok,
           f"half={lam_h} free={lam_f} beta={beta} {elapsed:.3f}s")


def test_criterion_02_simplex_is_compatible():
    K = zoo.space("simplex3")
    f, g = pair(K, (1, 1, 0, 0), 0, (1, 0, 1, 0), 0)
    found = check_compatible(f, g)
    b1 = effect_from_functional(K, (1, 0, 0, 0), 0)
    supplied_ok = JointWitness(b1, f, g).is_valid()
    lam = degcom_half(f, g).lambda_star
    ok = found is not None and found.is_valid() and supplied_ok and lam == 1
    record(2, "3-simplex b1+b2, b1+b3: compatible, p = b1 valid, lambda = 1", ok,
           f"lambda={lam} supplied p valid={supplied_ok}")


def test_criterion_03_cut_pyramid_has_no_maximal_pair():
    K = zoo.space("cut-pyramid")
    top = exposed_face(K.body, Halfspace((0, 0, 1), 1))
    top_ok = top.dim == 2 and len(top) == 4 and top in K.faces
    t0 = time.perf_counter()
    found = find_maxinc(K)
    elapsed = time.perf_counter() - t0
    ok = top_ok and found is None and elapsed < 30
    record(3, "cut-off pyramid: square top face exists, search finds none", ok,
           f"top face={top.vertex_indices} {elapsed:.2f}s")


def test_criterion_04_octahedron_is_maximal():
    found = find_maxinc(zoo.space("octahedron"))
    lam = None
    if found:
        f, g, cert = found
        CERTIFICATES.append(cert)
        lam = degcom_half(f, g).lambda_star
    record(4, "octahedron: search finds a pair with lambda = 1/2", lam == HALF, f"lambda={lam}")


def test_criterion_05_planar_characterization():
    verdicts = {}
    for name in ("square", "triangle", "hexagon"):
        found = find_maxinc(zoo.space(name))
        verdicts[name] = found is not None
        if found:
            CERTIFICATES.append(found[2])
    ok = verdicts == {"square": True, "triangle": False, "hexagon": False}
    record(5, "2-D: found on the square, none on triangle and hexagon", ok, str(verdicts))


def test_criterion_06_duality_identity():
    bad = []
    for i, (K, f, g) in enumerate(random_cases()):
        lam = degcom_half(f, g).lambda_star
        beta = dual_beta(f, g).beta
        compatible = check_compatible(f, g) is not None
        if beta != (1 - lam) / lam or (beta == 0) != compatible:
            bad.append(i)
    n = len(random_cases())
    record(6, f"beta = (1 - lambda)/lambda and beta = 0 iff compatible on {n} instances",
           n >= 50 and not bad, f"violations={bad}")


def test_criterion_07_complement_invariance():
    bad = []
    for i, (K, f, g) in enumerate(random_cases()):
        lams = {degcom_half(a, b).lambda_star for a, b in complement_variants(f, g)}
        if len(lams) != 1:
            bad.append(i)
    record(7, f"four complement variants agree on {len(random_cases())} instances",
           not bad, f"violations={bad}")


def test_criterion_08_bounds():
    lams = []
    for K, f, g in random_cases():
        lams.append(degcom_half(f, g).lambda_star)
        lams.append(degcom_free(f, g).lambda_star)
        cert = check_pair_maxinc(f, g)
        if cert:
            CERTIFICATES.append(cert)
    ok = all(HALF <= x <= 1 for x in lams)
    record(8, "every computed lambda lies in [1/2, 1]", ok,
           f"min={min(lams)} max={max(lams)} over {len(lams)} values")


def test_criterion_09_bisection_oracle():
    bad = []
    widest = Fraction(0)
    for i, (K, f, g) in enumerate(zoo.random_instances(20, seed=9)):
        lam = degcom_half(f, g).lambda_star
        lo, hi = bisect_degcom(K.vertices, f.values, g.values)
        widest = max(widest, hi - lo)
        if not (lo <= lam <= hi and hi - lo < Fraction(1, 10**9)):
            bad.append(i)
    record(9, "exact lambda inside a certified bisection bracket of width < 1e-9 (20 instances)",
           not bad, f"widest={float(widest):.2e} violations={bad}")


def test_criterion_10_discrimination_obstruction():
    for name in zoo.names():
        found = find_maxinc(zoo.space(name))
        if found:
            CERTIFICATES.append(found[2])
    bad = []
    for k, cert in enumerate(CERTIFICATES):
        forced = joint_would_discriminate(cert.f, cert.g)
        if forced is None or forced.discriminator_exists:
            bad.append(k)
            continue
        pts = cert.points
        table = forced_table([cert.f(x) for x in pts], [cert.g(x) for x in pts])
        quad = DiscriminationTask(pts[:3], pts[3:])
        if table["p"] != (0, 0, 0, 1) or find_discriminator(cert.f.space, quad) is not None:
            bad.append(k)
    record(10, f"all {len(CERTIFICATES)} certificates force an impossible discrimination",
           len(CERTIFICATES) > 0 and not bad, f"violations={bad}")


def test_criterion_11_channel_witness():
    case = qubit_channel_case()
    rep = verify_case(case)
    table_ok = rep.values == {"C00": (0, 0), "C10": (1, 0), "C01": (0, 1), "C11": (1, 1)}
    one = kron(HermitianMatrix.identity(2), HermitianMatrix.identity(2))
    mid_ok = case.C00 + case.C11 == one == case.C10 + case.C01
    dom = verify_case(case.replace(M=case.M.scaled(2))).failed()
    choi = verify_case(case.replace(C10=HermitianMatrix.diag([1, 0, 1, 0]))).failed()
    ok = rep.passed and table_ok and mid_ok and "effect M" in dom and "choi C10" in choi
    record(11, "qubit channels: all checks pass; both perturbations fail as intended", ok,
           f"2M fails {dom}; bad Tr1 fails {choi}")


def test_criterion_12_empty_level_intersection():
    K = zoo.space("square")
    f, g = pair(K, (1, 0), 0, (1, 0), 0)
    cert = check_pair_maxinc(f, g)
    lam = degcom_half(f, g).lambda_star
    record(12, "square f = g = x1: not maximal and lambda > 1/2", cert is None and lam > HALF,
           f"lambda={lam}")


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
