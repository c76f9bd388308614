"""Sparse multivariate polynomials over an exact coefficient ring.

A MultiPoly has an explicit ordered variable tuple and a sparse map from
exponent vectors (tuples of nonnegative ints, one slot per variable) to
coefficients.  Coefficients may be int, Fraction or CycloScalar; zero
coefficients are never stored.  Instances are treated as immutable.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloScalar


class MissingVariableError(KeyError):
    """An evaluation point does not cover every variable of the polynomial."""


def _is_zero(c) -> bool:
    return not c


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__(self, "vars", tuple(variables))
        cleaned = {}
        if terms:
            nv = len(self.vars)
            for exps, coeff in terms.items():
                if len(exps) != nv:
                    raise ValueError(f"exponent tuple {exps} does not match variables {self.vars}")
                if not _is_zero(coeff):
                    cleaned[tuple(exps)] = coeff
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, variables, value) -> "MultiPoly":
        variables = tuple(variables)
        if _is_zero(value):
            return cls(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, name) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    def lift(self, variables) -> "MultiPoly":
        """Reinterpret over a superset of variables (order given by `variables`)."""
        variables = tuple(variables)
        pos = []
        for v in self.vars:
            if v not in variables:
                raise ValueError(f"variable {v} missing from {variables}")
            pos.append(variables.index(v))
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exps):
                new[p] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    def align(self, variables) -> "MultiPoly":
        """Re-express over `variables`: variables of self not listed must be
        unused (exponent 0 everywhere); missing ones are added with 0."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        drop = [i for i, v in enumerate(self.vars) if v not in variables]
        for exps in self.terms:
            for i in drop:
                if exps[i]:
                    raise ValueError(f"variable {self.vars[i]} is in use; cannot drop")
        kept_vars = tuple(v for v in self.vars if v in variables)
        kept_idx = [i for i, v in enumerate(self.vars) if v in variables]
        reduced = MultiPoly(
            kept_vars,
            {tuple(e[i] for i in kept_idx): c for e, c in self.terms.items()},
        )
        return reduced.lift(variables)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, CycloScalar)):
            return MultiPoly.constant(self.vars, other)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, 0) + coeff
            if _is_zero(acc):
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, 0) + c1 * c2
                if _is_zero(acc):
                    terms.pop(exps, None)
                else:
                    terms[exps] = acc
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = MultiPoly.constant(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------

    def degree(self, name) -> int:
        """Maximum exponent of `name`; -1 for the zero polynomial."""
        idx = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def leading_term(self):
        """(exponent, coefficient) maximal in lexicographic order."""
        exps = max(self.terms)
        return exps, self.terms[exps]

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises ValueError if not divisible."""
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = dict(self.terms)
        quotient = {}
        d_exps, d_coeff = divisor.leading_term()
        while remainder:
            r_exps = max(remainder)
            r_coeff = remainder[r_exps]
            q_exps = tuple(a - b for a, b in zip(r_exps, d_exps))
            if any(e < 0 for e in q_exps):
                raise ValueError("inexact polynomial division")
            q_coeff = _coeff_div(r_coeff, d_coeff)
            quotient[q_exps] = q_coeff
            for e2, c2 in divisor.terms.items():
                exps = tuple(a + b for a, b in zip(q_exps, e2))
                acc = remainder.get(exps, 0) - q_coeff * c2
                if _is_zero(acc):
                    remainder.pop(exps, None)
                else:
                    remainder[exps] = acc
        return MultiPoly(self.vars, quotient)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps) if e
            )
            if mono:
                parts.append(f"{coeff}*{mono}" if coeff != 1 else mono)
            else:
                parts.append(str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.vars!r}, {self.terms!r})"


def _coeff_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    if isinstance(a, CycloScalar) or isinstance(b, CycloScalar):
        return CycloScalar.coerce(a) / CycloScalar.coerce(b)
    return Fraction(a) / Fraction(b)


def poly_eval(p: MultiPoly, point: dict):
    """Evaluate exactly at `point` (variable name -> scalar).

    Horner-style: substitute one variable at a time, factoring on its powers.
    Raises MissingVariableError if a variable of p has no value.
    """
    if not p.terms:
        return 0
    used = [False] * len(p.vars)
    for exps in p.terms:
        for i, e in enumerate(exps):
            if e:
                used[i] = True
    for v, u in zip(p.vars, used):
        if u and v not in point:
            raise MissingVariableError(v)
    values = [point.get(v, 0) for v in p.vars]
    return _eval_rec(p.terms, values, 0, len(p.vars))


def _eval_rec(terms, values, axis, nvars):
    if axis == nvars:
        # terms maps the empty exponent () to a single coefficient
        return terms.get((), 0)
    # group by exponent of the current axis, then Horner on descending powers
    groups = {}
    for exps, coeff in terms.items():
        groups.setdefault(exps[0], {})[exps[1:]] = coeff
    value = values[axis]
    result = 0
    prev = None
    for e in sorted(groups, reverse=True):
        if prev is not None:
            for _ in range(prev - e):
                result = result * value
        result = result + _eval_rec(groups[e], values, axis + 1, nvars)
        prev = e
    for _ in range(prev):
        result = result * value
    return result
