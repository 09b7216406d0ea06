"""Exact ring arithmetic for algebraic integers over a field's integral basis.

An element is an integer coordinate vector; integrality is therefore a
representation invariant, which keeps every residue computation
denominator-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, NotAUnit
from .fields import FieldSpec
from .linalg import charpoly_int, det_int, solve_exact


@dataclass(frozen=True)
class NFElement:
    field: FieldSpec
    coords: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        assert len(self.coords) == 4

    def _check(self, other: "NFElement"):
        if self.field != other.field:
            raise FieldMismatch("elements of different fields")

    def __add__(self, other):
        self._check(other)
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return NFElement(self.field, tuple(other * a for a in self.coords))
        self._check(other)
        table = self.field.mult_table
        out = [0, 0, 0, 0]
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                f = a * b
                cij = table[i][j]
                for k in range(4):
                    out[k] += f * cij[k]
        return NFElement(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent; invert explicitly first")
        result = one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def mult_matrix(self):
        """Matrix of multiplication by self over the integral basis (rows act)."""
        table = self.field.mult_table
        return [
            [sum(self.coords[i] * table[i][j][k] for i in range(4)) for k in range(4)]
            for j in range(4)
        ]

    def __repr__(self):
        return f"NFElement{self.coords} in {self.field.name()}"


def zero(field: FieldSpec) -> NFElement:
    return NFElement(field, (0, 0, 0, 0))


def one(field: FieldSpec) -> NFElement:
    return NFElement(field, (1, 0, 0, 0))


def theta(field: FieldSpec) -> NFElement:
    return NFElement(field, field.theta_coords)


def from_power_coords(field: FieldSpec, power_vec) -> NFElement:
    """Element from rational power-basis coordinates; must be integral."""
    return NFElement(field, field.coords_from_power(list(power_vec)))


def sqrt_radicand(field: FieldSpec, d: int) -> NFElement:
    """The stored square root of an embedded radicand d."""
    return NFElement(field, field.sqrt_map[d])


def trace(x: NFElement) -> int:
    m = x.mult_matrix()
    return sum(m[i][i] for i in range(4))


def norm(x: NFElement) -> int:
    return det_int(x.mult_matrix())


def inverse_unit(x: NFElement) -> NFElement:
    """Inverse of a unit, by solving the 4x4 system x*y = 1 exactly."""
    n = norm(x)
    if n not in (1, -1):
        raise NotAUnit(f"norm {n} is not +-1")
    m = x.mult_matrix()
    # y * M = e0 where row j of M holds coords of x*b_j
    sol = solve_exact([[m[j][k] for j in range(4)] for k in range(4)], [1, 0, 0, 0])
    assert all(Fraction(v).denominator == 1 for v in sol)
    y = NFElement(x.field, tuple(int(v) for v in sol))
    assert (x * y).coords == (1, 0, 0, 0)
    return y


def min_poly(x: NFElement):
    """Minimal polynomial coefficients of x (constant first, monic), exact.

    The characteristic polynomial of the multiplication matrix is deflated to
    the least monic divisor annihilating x.
    """
    char = charpoly_int(x.mult_matrix())
    for deg in (1, 2, 4):
        if deg == 4:
            return char
        pows = [one(x.field)]
        for _ in range(deg):
            pows.append(pows[-1] * x)
        try:
            sol = solve_exact(
                [[pows[j].coords[i] for j in range(deg)] for i in range(4)],
                [-pows[deg].coords[i] for i in range(4)],
            )
        except ValueError:
            continue
        if all(Fraction(v).denominator == 1 for v in sol):
            return [int(v) for v in sol] + [1]
    raise AssertionError("unreachable")
