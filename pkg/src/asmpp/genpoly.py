"""Bivariate generating polynomials with nonnegative integer coefficients.

Used for the doubly refined counts: the boundary-statistic polynomial of
alternating sign matrices in either index convention, and the vertical-step
polynomials of the lattice-path objects.
"""

from __future__ import annotations

from fractions import Fraction


class GenPoly:
    """Polynomial sum over objects of x**i * y**j.

    `convention` records whether the second index is taken as-is ("tilde")
    or reversed ("reversed"); it is metadata, equality compares coefficients.
    """

    __slots__ = ("n", "convention", "coeffs")

    def __init__(self, n, coeffs=None, convention="tilde"):
        if convention not in ("tilde", "reversed"):
            raise ValueError(f"unknown convention {convention!r}")
        self.n = n
        self.convention = convention
        self.coeffs = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if c:
                    self.add_term(i, j, c)

    def add_term(self, i, j, count=1):
        if i < 0 or j < 0:
            raise ValueError("negative exponent")
        key = (i, j)
        self.coeffs[key] = self.coeffs.get(key, 0) + count
        if not self.coeffs[key]:
            del self.coeffs[key]

    def total(self) -> int:
        """Coefficient sum: the number of objects counted."""
        return sum(self.coeffs.values())

    def max_degree(self) -> tuple:
        if not self.coeffs:
            return (-1, -1)
        return (max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs))

    def evaluate(self, x, y):
        result = 0
        for (i, j), c in self.coeffs.items():
            term = c
            for _ in range(i):
                term = term * x
            for _ in range(j):
                term = term * y
            result = result + term
        return result

    def coefficient_matrix(self):
        """Dense (deg_x+1) x (deg_y+1) matrix of coefficients."""
        dx, dy = self.max_degree()
        mat = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in self.coeffs.items():
            mat[i][j] = c
        return mat

    def __eq__(self, other):
        if not isinstance(other, GenPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GenPoly(n={self.n}, {self.coeffs!r}, convention={self.convention!r})"

    def to_json_dict(self):
        return {f"({i},{j})": c for (i, j), c in sorted(self.coeffs.items())}

    @classmethod
    def from_string_terms(cls, n, terms, convention="tilde"):
        """Build from {(i,j): coeff}; convenience for frozen test values."""
        return cls(n, dict(terms), convention)
