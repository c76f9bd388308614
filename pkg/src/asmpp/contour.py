"""Formal contour integrals as iterated constant-term extraction.

An IntegrandSpec declares, per contour variable, the power of the monomial
denominator, plus an ordered list of factors.  Each factor is either a
polynomial or an explicitly declared geometric factor 1/(1-g) with g of
positive valuation in the contour variables: which poles sit inside the
contours is semantic input taken from the integral being encoded, never
inferred.

Evaluation multiplies everything out as a truncated Laurent series and takes
the coefficient of u**-1 one variable at a time.  Since every factor is a
polynomial (or expands into one) with nonnegative exponents, exponents never
decrease after the initial monomial; a term that overshoots exponent -1 in
any contour variable can therefore never contribute, which keeps the
intermediate series small no matter how generous the declared window is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .algebra.poly import MultiPoly
from .algebra.series import (
    TruncatedSeries,
    ContourSideError,
    geometric_mul,
    positive_valuation,
    residue_at_zero,
)
from .genpoly import GenPoly

XY = ("x", "y")


@dataclass
class IntegrandSpec:
    """A formal multi-contour integrand.

    factors: sequence of ("poly", MultiPoly) or ("geom", MultiPoly); a geom
    entry g stands for 1/(1-g) expanded as a geometric series.
    """

    u_vars: tuple
    denom_powers: dict
    factors: list = field(default_factory=list)
    coeff_vars: tuple = XY

    def all_vars(self):
        return tuple(self.u_vars) + tuple(self.coeff_vars)

    def add_poly(self, p: MultiPoly):
        self.factors.append(("poly", p))

    def add_geom(self, g: MultiPoly):
        self.factors.append(("geom", g))


def iterated_residue(spec: IntegrandSpec, order=None, hi=None):
    """Evaluate the iterated formal residue; returns a MultiPoly in the
    coefficient variables.

    order: contour variables, innermost first (default: reversed u_vars).
    hi: upper window bound per contour variable (default 2n, n = #vars);
    results are independent of hi because exponents in contour variables
    never decrease across the remaining factors.
    """
    u_vars = tuple(spec.u_vars)
    if order is None:
        order = tuple(reversed(u_vars))
    else:
        order = tuple(order)
        if sorted(order) != sorted(u_vars):
            raise ValueError("order must be a permutation of the contour variables")
    if hi is None:
        hi = 2 * len(u_vars)

    all_vars = spec.all_vars()
    rank = {v: i for i, v in enumerate(order)}

    # validate factor exponents: nonnegative in every contour variable
    for kind, p in spec.factors:
        lifted = p.lift(all_vars) if p.vars != all_vars else p
        for exps in lifted.terms:
            if any(e < 0 for e in exps):
                raise ValueError("factors must have nonnegative exponents")
        if kind == "geom" and not positive_valuation(lifted, u_vars):
            raise ContourSideError(
                "geometric factor has a constant term in the contour variables"
            )

    # a factor is multiplied in just before its earliest-integrated variable
    stages = [[] for _ in order]
    tail = []
    for kind, p in spec.factors:
        idxs = [rank[v] for v in u_vars if v in p.vars and p.degree(v) > 0]
        if idxs:
            stages[min(idxs)].append((kind, p))
        else:
            tail.append((kind, p))

    # Exponents in contour variables never decrease (all factors checked
    # nonnegative), so only terms at exponent <= -1 can still reach the
    # residue: cap every contour window at min(hi, -1) from the start.
    cap = min(hi, -1)
    variables = all_vars
    window = [
        (-spec.denom_powers.get(v, 0), cap) if v in u_vars else (0, None)
        for v in variables
    ]
    start = {
        tuple(-spec.denom_powers.get(v, 0) if v in u_vars else 0 for v in variables): 1
    }
    series = TruncatedSeries(variables, window, start)

    remaining = list(order)
    for stage_idx, v in enumerate(order):
        for kind, p in stages[stage_idx]:
            if kind == "poly":
                series = series.mul_poly(p)
            else:
                series = geometric_mul(series, p, remaining)
        series = residue_at_zero(series, v)
        remaining.remove(v)

    result = series.to_poly()
    for kind, p in tail:
        if kind != "poly":
            raise ContourSideError("geometric factor without contour variables")
        idxs = [p.vars.index(v) for v in result.vars]
        projected = MultiPoly(
            result.vars,
            {tuple(e[i] for i in idxs): c for e, c in p.terms.items()},
        )
        result = result * projected
    return result


def _uvar(i):
    return f"u{i}"


def _mono(variables, assignment, coeff=1):
    exps = [0] * len(variables)
    for v, e in assignment.items():
        exps[variables.index(v)] = e
    return MultiPoly(variables, {tuple(exps): coeff})


def _to_genpoly(n, poly: MultiPoly) -> GenPoly:
    result = GenPoly(n, convention="tilde")
    if not isinstance(poly, MultiPoly):
        result.add_term(0, 0, int(poly))
        return result
    ix = poly.vars.index("x") if "x" in poly.vars else None
    iy = poly.vars.index("y") if "y" in poly.vars else None
    for exps, coeff in poly.terms.items():
        c = Fraction(coeff)
        assert c.denominator == 1, "refined counts must be integers"
        i = exps[ix] if ix is not None else 0
        j = exps[iy] if iy is not None else 0
        result.add_term(i, j, int(c))
    return result


def integral_A(n: int, order=None, hi=None) -> GenPoly:
    """The (n-1)-fold formal integral for the doubly refined ASM polynomial:
    variables u_2..u_n with denominators u_l**(2l-2), numerators
    (1+u_l)(1+x u_l), the 1/(1+u_l(1-y)) factor expanded about the origin,
    and the antisymmetrizing cross factors (u_m - u_l)(1+u_m+u_m u_l)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return _to_genpoly(1, 1)
    u = [_uvar(l) for l in range(2, n + 1)]
    variables = tuple(u) + XY
    spec = IntegrandSpec(
        u_vars=tuple(u),
        denom_powers={_uvar(l): 2 * l - 2 for l in range(2, n + 1)},
        coeff_vars=XY,
    )
    for l in range(2, n + 1):
        ul = _uvar(l)
        spec.add_poly(_mono(variables, {}) + _mono(variables, {ul: 1}))          # 1 + u_l
        spec.add_poly(_mono(variables, {}) + _mono(variables, {ul: 1, "x": 1}))  # 1 + x u_l
        # 1/(1 + u_l (1-y)) = 1/(1 - (y-1) u_l)
        spec.add_geom(_mono(variables, {ul: 1, "y": 1}) + _mono(variables, {ul: 1}, -1))
    for l in range(2, n + 1):
        for m in range(l + 1, n + 1):
            ul, um = _uvar(l), _uvar(m)
            spec.add_poly(_mono(variables, {um: 1}) + _mono(variables, {ul: 1}, -1))
            spec.add_poly(
                _mono(variables, {})
                + _mono(variables, {um: 1})
                + _mono(variables, {um: 1, ul: 1})
            )
    return _to_genpoly(n, iterated_residue(spec, order=order, hi=hi))


def integral_U(n: int, form: str = "raw", order=None, hi=None) -> GenPoly:
    """The refined lattice-path polynomial as a formal integral.

    form="raw": the n-fold integral with denominators u_i**(2i-1), factors
    1/(1-u_i**2), (1+x u_i), (1+y u_i) and (1+u_i)**(i-2) for i >= 2, and
    cross factors (u_j-u_i)/(1-u_i u_j).
    form="after-u1": the (n-1)-fold integral left after the innermost
    variable has been integrated out.  Both must agree.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if form == "raw":
        u = [_uvar(i) for i in range(1, n + 1)]
        variables = tuple(u) + XY
        spec = IntegrandSpec(
            u_vars=tuple(u),
            denom_powers={_uvar(i): 2 * i - 1 for i in range(1, n + 1)},
            coeff_vars=XY,
        )
        for i in range(1, n + 1):
            ui = _uvar(i)
            spec.add_geom(_mono(variables, {ui: 2}))                                 # 1/(1-u_i^2)
            spec.add_poly(_mono(variables, {}) + _mono(variables, {ui: 1, "x": 1}))  # 1 + x u_i
            if i >= 2:
                spec.add_poly(_mono(variables, {}) + _mono(variables, {ui: 1, "y": 1}))
                one_plus = _mono(variables, {}) + _mono(variables, {ui: 1})
                spec.add_poly(one_plus ** (i - 2))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                ui, uj = _uvar(i), _uvar(j)
                spec.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
                spec.add_geom(_mono(variables, {ui: 1, uj: 1}))
        return _to_genpoly(n, iterated_residue(spec, order=order, hi=hi))
    if form == "after-u1":
        if n == 1:
            return _to_genpoly(1, 1)
        u = [_uvar(i) for i in range(2, n + 1)]
        variables = tuple(u) + XY
        spec = IntegrandSpec(
            u_vars=tuple(u),
            denom_powers={_uvar(i): 2 * i - 2 for i in range(2, n + 1)},
            coeff_vars=XY,
        )
        for i in range(2, n + 1):
            ui = _uvar(i)
            spec.add_poly(_mono(variables, {}) + _mono(variables, {ui: 1, "x": 1}))
            spec.add_poly(_mono(variables, {}) + _mono(variables, {ui: 1, "y": 1}))
            one_plus = _mono(variables, {}) + _mono(variables, {ui: 1})
            spec.add_poly(one_plus ** (i - 2))
            spec.add_geom(_mono(variables, {ui: 2}))
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                ui, uj = _uvar(i), _uvar(j)
                spec.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
                spec.add_geom(_mono(variables, {ui: 1, uj: 1}))
        return _to_genpoly(n, iterated_residue(spec, order=order, hi=hi))
    raise ValueError(f"unknown form {form!r}")


def integral_I(n: int, avec, order=None, hi=None) -> GenPoly:
    """The interpolating integral with numerators (1 + u_l + a_l u_l**2).

    avec supplies a_1..a_{n-1} as rationals or polynomials in (x, y); the
    result does not depend on them (a fact the verification suite checks):
    a_l = 0 gives the ASM polynomial, a_l = y(1-y) the lattice-path one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(avec) != n - 1:
        raise ValueError("need n-1 interpolation entries")
    if n == 1:
        return _to_genpoly(1, 1)
    u = [_uvar(l) for l in range(1, n)]
    variables = tuple(u) + XY
    spec = IntegrandSpec(
        u_vars=tuple(u),
        denom_powers={_uvar(l): 2 * l for l in range(1, n)},
        coeff_vars=XY,
    )
    for l in range(1, n):
        ul = _uvar(l)
        a_l = avec[l - 1]
        if not isinstance(a_l, MultiPoly):
            a_l = MultiPoly.constant(XY, Fraction(a_l))
        quad = a_l.lift(variables) * _mono(variables, {ul: 2})
        spec.add_poly(_mono(variables, {}) + _mono(variables, {ul: 1}) + quad)
        spec.add_poly(_mono(variables, {}) + _mono(variables, {ul: 1, "x": 1}))
        spec.add_geom(_mono(variables, {ul: 1, "y": 1}) + _mono(variables, {ul: 1}, -1))
    for l in range(1, n):
        for m in range(l + 1, n):
            ul, um = _uvar(l), _uvar(m)
            spec.add_poly(_mono(variables, {um: 1}) + _mono(variables, {ul: 1}, -1))
            spec.add_poly(
                _mono(variables, {})
                + _mono(variables, {um: 1})
                + _mono(variables, {um: 1, ul: 1})
            )
    return _to_genpoly(n, iterated_residue(spec, order=order, hi=hi))


def a_profile_y1y() -> MultiPoly:
    """The interpolation value y(1-y) selecting the lattice-path side."""
    y = MultiPoly.variable(XY, "y")
    return y - y * y


# ---------------------------------------------------------------------------
# The antisymmetrization identity behind the route equality
# ---------------------------------------------------------------------------

def is_symmetric(phi: MultiPoly, u_vars) -> bool:
    """Full symmetry under permuting u_vars (checked on all transpositions)."""
    for a in range(len(u_vars) - 1):
        swapped = _swap_vars(phi, u_vars[a], u_vars[a + 1])
        if swapped != phi:
            return False
    return True


def _swap_vars(p: MultiPoly, v1, v2) -> MultiPoly:
    i1, i2 = p.vars.index(v1), p.vars.index(v2)
    terms = {}
    for exps, coeff in p.terms.items():
        e = list(exps)
        e[i1], e[i2] = e[i2], e[i1]
        terms[tuple(e)] = coeff
    return MultiPoly(p.vars, terms)


def zeilid_check(n: int, tau, phi: MultiPoly, order=None, hi=None):
    """Both sides of the antisymmetrization identity for a symmetric phi,
    evaluated as formal integrals; returns a report entry."""
    u = [_uvar(i) for i in range(1, n + 1)]
    coeff_vars = tuple(v for v in phi.vars if v not in u)
    variables = tuple(u) + coeff_vars
    if not is_symmetric(phi.lift(variables), u):
        raise ValueError("phi must be symmetric in the contour variables")

    lhs = IntegrandSpec(tuple(u), {_uvar(i): 2 * i for i in range(1, n + 1)},
                        coeff_vars=coeff_vars)
    lhs.add_poly(phi.lift(variables))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            lhs.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
            lhs.add_poly(
                _mono(variables, {})
                + _mono(variables, {uj: 1}, tau)
                + _mono(variables, {ui: 1, uj: 1})
            )

    rhs = IntegrandSpec(tuple(u), {_uvar(i): 2 * i for i in range(1, n + 1)},
                        coeff_vars=coeff_vars)
    rhs.add_poly(phi.lift(variables))
    for i in range(1, n + 1):
        ui = _uvar(i)
        one_tau = _mono(variables, {}) + _mono(variables, {ui: 1}, tau)
        rhs.add_poly(one_tau ** (i - 1))
        rhs.add_geom(_mono(variables, {ui: 2}))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            rhs.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
            rhs.add_geom(_mono(variables, {ui: 1, uj: 1}))

    left = iterated_residue(lhs, order=order, hi=hi)
    right = iterated_residue(rhs, order=order, hi=hi)
    return {
        "check": "antisymmetrization-identity",
        "n": n,
        "tau": str(tau),
        "phi": str(phi),
        "expected": str(right),
        "got": str(left),
        "pass": left == right,
    }


def phi_bilinear(n: int) -> MultiPoly:
    """prod_i (1+x u_i)(1+y u_i): the instance used by the route equality."""
    u = [_uvar(i) for i in range(1, n + 1)]
    variables = tuple(u) + XY
    phi = _mono(variables, {})
    for i in range(1, n + 1):
        ui = _uvar(i)
        phi = phi * (_mono(variables, {}) + _mono(variables, {ui: 1, "x": 1}))
        phi = phi * (_mono(variables, {}) + _mono(variables, {ui: 1, "y": 1}))
    return phi


def monomial_symmetric(n: int, shape) -> MultiPoly:
    """The monomial symmetric polynomial m_shape(u_1..u_n)."""
    u = [_uvar(i) for i in range(1, n + 1)]
    variables = tuple(u)
    shape = tuple(shape) + (0,) * (n - len(shape))
    if len(shape) > n:
        raise ValueError("shape longer than variable count")
    terms = {}
    for perm in set(permutations(shape)):
        terms[perm] = 1
    return MultiPoly(variables, terms)


def even_partition_sum_check(n: int, degree_bound: int):
    """Compare the sum of endpoint-sequence determinants det[u_i^{r_{j-1}}]
    (r_0 >= 0 even, odd gaps) against the closed product form
    prod_{j>i}(u_j-u_i) / prod_{j>=i}(1-u_j u_i), coefficientwise up to
    total degree `degree_bound`."""
    D = degree_bound
    u = [_uvar(i) for i in range(1, n + 1)]
    window = [(0, D)] * n
    lhs = TruncatedSeries(u, window)
    for seq in _even_odd_sequences(n, D):
        for perm in permutations(range(n)):
            sign = _perm_sign(perm)
            exps = tuple(seq[perm[i]] for i in range(n))
            lhs = lhs + TruncatedSeries(u, window, {exps: sign})
    rhs = TruncatedSeries.constant(u, window, 1)
    for i in range(n):
        for j in range(i + 1, n):
            diff = MultiPoly(u, {
                tuple(1 if k == j else 0 for k in range(n)): 1,
                tuple(1 if k == i else 0 for k in range(n)): -1,
            })
            rhs = rhs.mul_poly(diff)
    for i in range(n):
        for j in range(i, n):
            g = MultiPoly(u, {
                tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(n)): 1,
            })
            rhs = geometric_mul(rhs, g, u)
    lt = {e: c for e, c in lhs.terms.items() if sum(e) <= D}
    rt = {e: c for e, c in rhs.terms.items() if sum(e) <= D}
    return {
        "check": "even-partition-sum",
        "n": n,
        "degree_bound": D,
        "expected": f"{len(rt)} terms",
        "got": f"{len(lt)} terms",
        "pass": lt == rt,
    }


def _even_odd_sequences(n: int, bound: int):
    """0 <= r_0 < ... < r_{n-1} <= bound, r_0 even, consecutive gaps odd."""
    seqs = [[r] for r in range(0, bound + 1, 2)]
    for _ in range(n - 1):
        nxt = []
        for s in seqs:
            r = s[-1] + 1
            while r <= bound:
                nxt.append(s + [r])
                r += 2
        seqs = nxt
    return seqs


def _perm_sign(perm):
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def vandermonde_antisym_identity(n: int) -> bool:
    """AS{ prod_i (1+tau u_i)^(i-1) u_i^(2n-2i) } equals
    prod_{i<j} (u_i-u_j)(u_i+u_j+tau u_i u_j), with tau symbolic."""
    u = [_uvar(i) for i in range(1, n + 1)]
    variables = tuple(u) + ("tau",)
    lhs = MultiPoly(variables)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = _mono(variables, {}, sign)
        for i in range(1, n + 1):
            ui = _uvar(perm[i - 1] + 1)
            one_tau = _mono(variables, {}) + _mono(variables, {ui: 1, "tau": 1})
            term = term * one_tau ** (i - 1) * _mono(variables, {ui: 2 * n - 2 * i})
        lhs = lhs + term
    rhs = _mono(variables, {})
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            rhs = rhs * (_mono(variables, {ui: 1}) + _mono(variables, {uj: 1}, -1))
            rhs = rhs * (
                _mono(variables, {ui: 1})
                + _mono(variables, {uj: 1})
                + _mono(variables, {ui: 1, uj: 1, "tau": 1})
            )
    return lhs == rhs


def homogeneous_limit_check(n: int, order=None, hi=None):
    """The two homogeneous-limit integrand forms must give equal iterated
    residues: n! times the ordered form equals the fully antisymmetrized
    form with every denominator power raised to 2n."""
    tau = 1
    u = [_uvar(i) for i in range(1, n + 1)]
    variables = tuple(u) + XY
    phi = phi_bilinear(n)

    pre = IntegrandSpec(tuple(u), {_uvar(i): 2 * i for i in range(1, n + 1)})
    pre.add_poly(phi)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            pre.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
            pre.add_poly(
                _mono(variables, {})
                + _mono(variables, {uj: 1}, tau)
                + _mono(variables, {ui: 1, uj: 1})
            )

    post = IntegrandSpec(tuple(u), {_uvar(i): 2 * n for i in range(1, n + 1)})
    post.add_poly(phi)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            post.add_poly(_mono(variables, {uj: 1}) + _mono(variables, {ui: 1}, -1))
            post.add_poly(_mono(variables, {ui: 1}) + _mono(variables, {uj: 1}, -1))
            post.add_poly(
                _mono(variables, {ui: 1})
                + _mono(variables, {uj: 1})
                + _mono(variables, {ui: 1, uj: 1}, tau)
            )
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            ui, uj = _uvar(i), _uvar(j)
            if i == j:
                post.add_geom(_mono(variables, {ui: 2}))
            else:
                post.add_geom(_mono(variables, {ui: 1, uj: 1}))

    left = iterated_residue(pre, order=order, hi=hi) * math.factorial(n)
    right = iterated_residue(post, order=order, hi=hi)
    return {
        "check": "homogeneous-limit",
        "n": n,
        "expected": str(right),
        "got": str(left),
        "pass": left == right,
    }
