"""Verification suites: every identity the library implements, runnable as
seeded, deterministic check lists with machine-readable witnesses.

Each suite maps (n, seed, samples) to a list of check dicts carrying
expected/got values and a pass flag; a failing check serializes the full
witness object.  Identical (suite, n, seed, samples) always produce the
same checks, independent of worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from random import Random

from . import antisym, contour
from .asm import asm_count_formula, enumerate_asms, genfun_doubly_refined
from .lgv import lgv_genfun_xy
from .nilp import enumerate_nilps, genfun_U, involution_g, involution_h, u_statistic
from .schur import (
    random_distinct_rationals,
    recursion_check_q3,
    schur_staircase,
    verify_dyck_values,
    wheel_check,
    zprime_residue_sum,
)
from .sixvertex import normalize_Z, weighted_partition_sum, zn_normalized
from .tsscpp import (
    mrr_u_statistic,
    mrr_u_statistic_upper_left,
    nilp_to_tsscpp,
    tsscpp_to_nilp,
)


def _rng(seed, suite, n):
    return Random(f"{seed}:{suite}:{n}")


def _check(name, n, expected, got, **extra):
    entry = {
        "check": name,
        "n": n,
        "expected": str(expected),
        "got": str(got),
        "pass": expected == got,
    }
    entry.update(extra)
    return entry


# -- suites ------------------------------------------------------------------

def suite_doubly_refined(n, seed, samples):
    brute = genfun_doubly_refined(n, "tilde")
    paths = genfun_U(n, 0, 1)
    lgv = lgv_genfun_xy(n)
    return [
        _check("asm-equals-paths", n, str(brute), str(paths)),
        _check("asm-equals-lgv", n, str(brute), str(lgv)),
    ]


def suite_dyck(n, seed, samples):
    return verify_dyck_values(n)


def suite_wheel(n, seed, samples):
    samples = 20 if samples is None else samples
    return wheel_check(lambda pts: schur_staircase(n, pts), n, samples,
                       _rng(seed, "wheel", n))


def suite_recursion(n, seed, samples):
    samples = 5 if samples is None else samples
    checks = recursion_check_q3(n, samples, _rng(seed, "recursion", n))
    rng = _rng(seed, "recursion-generic", n)
    for _ in range(samples):
        s = random_distinct_rationals(rng, 2 * n)
        s = [v if v else Fraction(1, 17) for v in s]
        r = Fraction(rng.randint(2, 9), rng.randint(1, 9))
        if abs(r) == 1:
            r += 1
        q = r * r
        s[n] = s[0] / r  # z_{n+1} = z_1 / q
        z = [v * v for v in s]
        lhs = normalize_Z(weighted_partition_sum(n, s, r), n, s, r)
        ssub = s[1:n] + s[n + 1:]
        pref = Fraction(1) / q ** (n - 1)
        for j in range(1, n):
            pref *= z[0] - q * q * z[j]
        for j in range(n + 1, 2 * n):
            pref *= z[0] - z[j] / q
        rhs = pref * normalize_Z(
            weighted_partition_sum(n - 1, ssub, r), n - 1, ssub, r
        )
        checks.append(_check("corner-recursion-generic-q", n, rhs, lhs,
                             point=[str(v) for v in z], q=str(q)))
    return checks


def suite_zeilid(n, seed, samples):
    checks = [contour.zeilid_check(n, 1, contour.phi_bilinear(n))]
    rng = _rng(seed, "zeilid", n)
    for _ in range(3):
        shape = sorted((rng.randint(0, 2) for _ in range(n)), reverse=True)
        checks.append(contour.zeilid_check(n, 1, contour.monomial_symmetric(n, shape)))
    return checks


def suite_a_independence(n, seed, samples):
    base = contour.integral_A(n)
    variants = [
        ("zeros", [Fraction(0)] * (n - 1)),
        ("y(1-y)", [contour.a_profile_y1y()] * (n - 1)),
    ]
    rng = _rng(seed, "a-independence", n)
    for k in range(3):
        variants.append(
            (f"random-{k}",
             [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n - 1)])
        )
    checks = []
    for label, avec in variants:
        got = contour.integral_I(n, avec)
        checks.append(_check("interpolating-integral", n, str(base), str(got),
                             profile=label))
    return checks


def suite_appendix_d(n, seed, samples):
    samples = 10 if samples is None else samples
    rng = _rng(seed, "appendix-d", n)
    checks = []
    done = 0
    while done < samples:
        w = antisym.sample_points(rng, n)
        z = antisym.sample_points(rng, n, forbid=set(w))
        r = Fraction(rng.randint(2, 9), rng.randint(1, 9))
        if abs(r) == 1:
            continue
        try:
            b = antisym.bn_brute(n, w, z, r)
            c = antisym.bn_closed(n, w, z, r)
        except antisym.SingularSampleError:
            continue
        checks.append(_check("antisymmetrized-kernel", n, c, b,
                             w=[str(v) for v in w], z=[str(v) for v in z], q=str(r * r)))
        done += 1
    done = 0
    while done < samples:
        w = antisym.sample_points(rng, n)
        z = antisym.sample_points(rng, n, forbid=set(w))
        try:
            d = antisym.fbar_det(n, w, z)
            c = antisym.fbar_cauchy(n, w, z)
        except antisym.SingularSampleError:
            continue
        checks.append(_check("cauchy-determinant", n, c, d,
                             w=[str(v) for v in w], z=[str(v) for v in z]))
        done += 1
    if n <= 3:
        checks.append(contour.homogeneous_limit_check(n))
    return checks


def suite_even_partitions(n, seed, samples):
    return [contour.even_partition_sum_check(n, 2 * n + 2)]


def suite_bijections(n, seed, samples):
    from .sixvertex import asm_to_six_vertex, six_vertex_to_asm

    count = 0
    asm_rt = True
    witness = None
    for a in enumerate_asms(n):
        count += 1
        if six_vertex_to_asm(asm_to_six_vertex(a)) != a:
            asm_rt = False
            witness = a.to_rows()
    checks = [
        _check("asm-count", n, asm_count_formula(n), count),
        {"check": "asm-vertex-roundtrip", "n": n, "expected": "identity",
         "got": "identity" if asm_rt else "mismatch", "pass": asm_rt,
         **({"witness": witness} if witness else {})},
    ]
    count = 0
    path_rt = True
    witness = None
    for p in enumerate_nilps(n):
        count += 1
        if tsscpp_to_nilp(nilp_to_tsscpp(p)) != p:
            path_rt = False
            witness = p.to_json_dict()
    checks.append(_check("path-bundle-count", n, asm_count_formula(n), count))
    checks.append(
        {"check": "tsscpp-path-roundtrip", "n": n, "expected": "identity",
         "got": "identity" if path_rt else "mismatch", "pass": path_rt,
         **({"witness": witness} if witness else {})}
    )
    return checks


def suite_involutions(n, seed, samples):
    objs = list(enumerate_nilps(n))
    checks = []
    ok_g = True
    g_witness = None
    for k in range(1, n - 1):
        for p in objs:
            q = involution_g(p, k)
            if (involution_g(q, k) != p
                    or u_statistic(q, k) != u_statistic(p, k + 1)
                    or u_statistic(q, k + 1) != u_statistic(p, k)):
                ok_g = False
                g_witness = {"row": k, **p.to_json_dict()}
    checks.append({"check": "slice-swap-involution", "n": n,
                   "expected": "involution", "got": "involution" if ok_g else "broken",
                   "pass": ok_g, **({"witness": g_witness} if g_witness else {})})
    ok_h = True
    h_witness = None
    for p in objs:
        q = involution_h(p)
        if involution_h(q) != p or (n >= 2 and q.steps[1] != p.steps[1]):
            ok_h = False
            h_witness = p.to_json_dict()
        if u_statistic(q, 0) != (n - 1) - u_statistic(p, 1):
            ok_h = False
            h_witness = p.to_json_dict()
    checks.append({"check": "top-swap-involution", "n": n,
                   "expected": "involution", "got": "involution" if ok_h else "broken",
                   "pass": ok_h, **({"witness": h_witness} if h_witness else {})})
    base = genfun_U(n, 0, 1)
    for i in range(2, n + 1):
        checks.append(_check("statistic-index-independence", n,
                             str(base), str(genfun_U(n, 0, i)), index=i))
    for i in range(2, n + 1):
        c0 = Counter((u_statistic(p, 0), u_statistic(p, i)) for p in objs)
        c1 = Counter(((n - 1) - u_statistic(p, 1), u_statistic(p, i)) for p in objs)
        checks.append(_check("top-swap-count-identity", n,
                             sorted(c0.items()), sorted(c1.items()), index=i))
    return checks


def suite_mrr(n, seed, samples):
    pairs = [(p, nilp_to_tsscpp(p)) for p in enumerate_nilps(n)]
    checks = []
    forms_ok = True
    stats_ok = True
    witness = None
    for p, a in pairs:
        for k in range(1, n + 2):
            if mrr_u_statistic(a, k) != mrr_u_statistic_upper_left(a, k):
                forms_ok = False
                witness = a.to_rows()
        for k in range(1, n + 1):
            if mrr_u_statistic(a, k) != u_statistic(p, k):
                stats_ok = False
                witness = a.to_rows()
    checks.append({"check": "array-formula-agreement", "n": n,
                   "expected": "equal", "got": "equal" if forms_ok else "differ",
                   "pass": forms_ok, **({"witness": witness} if witness else {})})
    checks.append({"check": "array-vs-path-statistics", "n": n,
                   "expected": "equal", "got": "equal" if stats_ok else "differ",
                   "pass": stats_ok, **({"witness": witness} if witness else {})})
    flip = Counter((n - 1) - mrr_u_statistic(a, n + 1) for _, a in pairs)
    u0 = Counter(u_statistic(p, 0) for p, _ in pairs)
    checks.append(_check("extra-step-multiset", n, sorted(u0.items()),
                         sorted(flip.items())))
    return checks


def suite_zprime(n, seed, samples):
    samples = 20 if samples is None else samples
    rng = _rng(seed, "zprime", n)
    checks = []
    for _ in range(samples):
        pts = random_distinct_rationals(rng, 2 * n)
        zp = zprime_residue_sum(n, pts)
        sc = schur_staircase(n, pts)
        checks.append(_check("residue-sum-vs-schur", n, sc, zp,
                             point=[str(v) for v in pts]))
    return checks


def suite_sixv_schur(n, seed, samples):
    from .algebra.cyclo import ZETA
    samples = 10 if samples is None else samples
    rng = _rng(seed, "six-vertex", n)
    checks = []
    for _ in range(samples):
        s = random_distinct_rationals(rng, 2 * n)
        s = [v if v else Fraction(1, 17) for v in s]
        z = [v * v for v in s]
        got = zn_normalized(n, z, ZETA)
        want = schur_staircase(n, z)
        checks.append(_check("six-vertex-vs-schur", n, want, got,
                             point=[str(v) for v in z]))
    return checks


SUITES = {
    "doubly-refined": (suite_doubly_refined, (1, 5), 6),
    "dyck": (suite_dyck, (1, 4), 5),
    "wheel": (suite_wheel, (2, 3), 4),
    "recursion": (suite_recursion, (2, 3), 4),
    "zeilid": (suite_zeilid, (1, 4), 4),
    "a-independence": (suite_a_independence, (1, 4), 5),
    "appendix-d": (suite_appendix_d, (1, 3), 4),
    "even-partitions": (suite_even_partitions, (1, 3), 3),
    "bijections": (suite_bijections, (1, 4), 5),
    "involutions": (suite_involutions, (1, 4), 4),
    "mrr": (suite_mrr, (1, 4), 4),
    "zprime": (suite_zprime, (1, 3), 3),
    "six-vertex": (suite_sixv_schur, (1, 3), 3),
}


def _run_task(args):
    suite, n, seed, samples = args
    fn = SUITES[suite][0]
    return fn(n, seed, samples)


def run_verify(suite, n_range=None, seed=0, samples=None, workers=1):
    """Run one suite over an n-range; returns the versioned report dict."""
    if suite not in SUITES:
        raise KeyError(suite)
    fn, default_range, limit = SUITES[suite]
    lo, hi = n_range if n_range else default_range
    if hi > limit:
        raise ValueError(f"suite {suite} is limited to n <= {limit}")
    if lo < 1:
        raise ValueError("n must be >= 1")
    lo = max(lo, default_range[0])  # suites with n >= 2 preconditions
    tasks = [(suite, n, seed, samples) for n in range(lo, hi + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    checks = [c for chunk in results for c in chunk]
    failures = [c for c in checks if not c["pass"]]
    return {
        "schema": "v1",
        "command": "verify",
        "suite": suite,
        "n_range": [lo, hi],
        "seed": seed,
        "samples": samples,
        "checks": checks,
        "total": len(checks),
        "failures": len(failures),
        "pass": not failures,
    }
