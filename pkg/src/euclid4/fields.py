"""Construction of the imaginary Galois quartic fields.

Two families are supported: imaginary biquadratic fields Q(sqrt(m), sqrt(n))
and the class-number-one imaginary cyclic quartic fields of conductor
5, 13, 16, 29, 37, 53 or 61.

A field is represented by a monic quartic defining polynomial for a primitive
integral generator theta together with an exact integral basis written over
the power basis 1, theta, theta^2, theta^3.  The basis is produced
constructively: start from an order that is easy to write down (the
compositum of the quadratic subfield orders, or the span of the Gauss
periods), then saturate at the finitely many primes where it is not maximal,
until the module discriminant matches the value forced by the
conductor-discriminant product over the quadratic subfields.  Both the
closure of the basis under multiplication and the discriminant target act as
independent certificates of maximality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, isqrt

from .errors import DegenerateField, NotImaginary, UnknownLabel, UnsupportedConductor
from .intmath import (
    IntPoly,
    count_real_roots,
    factorize,
    is_squarefree,
    legendre,
    poly_discriminant,
    squarefree_part,
)
from .linalg import hnf_rows, invert_fraction_matrix, mat_mul, nullspace_mod_p, solve_exact


def quadratic_discriminant(r: int) -> int:
    """Discriminant of Q(sqrt(r)) for squarefree r."""
    return r if r % 4 == 1 else 4 * r


# ---------------------------------------------------------------------------
# power-basis arithmetic helpers


def _reduction_rows(minpoly: IntPoly):
    """Power-basis coordinates of theta^4, theta^5, theta^6."""
    c = minpoly.coeffs
    assert len(c) == 5 and c[4] == 1
    t4 = [Fraction(-c[k]) for k in range(4)]
    rows = [t4]
    for _ in range(2):
        prev = rows[-1]
        nxt = [Fraction(0)] + prev[:3]
        nxt = [nxt[k] + prev[3] * t4[k] for k in range(4)]
        rows.append(nxt)
    return rows


def _poly_mul_mod(u, v, red):
    """Product of two power-coordinate vectors modulo the defining polynomial."""
    full = [Fraction(0)] * 7
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b != 0:
                full[i + j] += a * b
    out = full[:4]
    for k in range(4, 7):
        if full[k] != 0:
            r = red[k - 4]
            for t in range(4):
                out[t] += full[k] * r[t]
    return out


def _power_sums(minpoly: IntPoly):
    """Traces of theta^k for k = 0..3 by Newton's identities."""
    c = minpoly.coeffs
    e1, e2, e3, e4 = -c[3], c[2], -c[1], c[0]
    s1 = e1
    s2 = e1 * s1 - 2 * e2
    s3 = e1 * s2 - e2 * s1 + 3 * e3
    return (4, s1, s2, s3)


def _module_discriminant(basis, minpoly, red):
    sums = _power_sums(minpoly)
    gram = []
    for i in range(4):
        row = []
        for j in range(4):
            prod = _poly_mul_mod(basis[i], basis[j], red)
            row.append(sum(prod[k] * sums[k] for k in range(4)))
        gram.append(row)
    # exact rational determinant via elimination
    m = [row[:] for row in gram]
    det = Fraction(1)
    for c in range(4):
        piv = next((i for i in range(c, 4) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, 4):
            f = m[i][c] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1 or True
    return det


def _structure_constants(basis, minpoly, red, exact=True):
    """Coordinates of b_i * b_j over the basis; integral for an order."""
    binv = invert_fraction_matrix([list(r) for r in basis])
    table = []
    for i in range(4):
        row = []
        for j in range(4):
            prod = _poly_mul_mod(basis[i], basis[j], red)
            coords = [sum(prod[t] * binv[t][k] for t in range(4)) for k in range(4)]
            if exact:
                assert all(x.denominator == 1 for x in coords), "basis not closed"
                coords = [int(x) for x in coords]
            row.append(coords)
        table.append(row)
    return table


# ---------------------------------------------------------------------------
# p-saturation (one multiplier-ring enlargement step, iterated)


def _p_saturate(basis, minpoly, red, p):
    """Enlarge an order until it is p-maximal.  Returns the new basis rows."""
    basis = [list(r) for r in basis]
    while True:
        ctab = _structure_constants(basis, minpoly, red)

        def amul(x, y):
            out = [0, 0, 0, 0]
            for i in range(4):
                if x[i] == 0:
                    continue
                for j in range(4):
                    if y[j] == 0:
                        continue
                    cij = ctab[i][j]
                    f = x[i] * y[j]
                    for k in range(4):
                        out[k] += f * cij[k]
            return out

        def amul_p(x, y):
            return [v % p for v in amul(x, y)]

        # radical of O/pO = kernel of x -> x^(p^j) with p^j >= 4
        pj = p
        while pj < 4:
            pj *= p
        fro = []
        for i in range(4):
            base = [1 if t == i else 0 for t in range(4)]
            exp = pj
            acc = None
            while exp:
                if exp & 1:
                    acc = base if acc is None else amul_p(acc, base)
                exp >>= 1
                if exp:
                    base = amul_p(base, base)
            fro.append(acc)
        fro_t = [[fro[i][j] for i in range(4)] for j in range(4)]
        rad = nullspace_mod_p(fro_t, p)
        if not rad:
            return basis
        # ideal I = radical preimage + pO, as a sublattice of O
        gens = [[p if t == i else 0 for t in range(4)] for i in range(4)]
        gens += [[v % p for v in vec] for vec in rad]
        w = hnf_rows(gens)
        winv = invert_fraction_matrix([[Fraction(x) for x in row] for row in w])
        # multiplier-ring condition: y * w_r in p*I for all r
        cond_rows = []
        for r in range(4):
            per_e = []
            for i in range(4):
                e = [1 if t == i else 0 for t in range(4)]
                q = amul(e, w[r])
                coords = [sum(q[t] * winv[t][k] for t in range(4)) for k in range(4)]
                assert all(x.denominator == 1 for x in coords), "I is not an ideal"
                per_e.append([int(x) for x in coords])
            for k in range(4):
                cond_rows.append([per_e[i][k] % p for i in range(4)])
        ys = nullspace_mod_p(cond_rows, p)
        if not ys:
            return basis
        rows = [[p if t == i else 0 for t in range(4)] for i in range(4)]
        rows += [[v % p for v in y] for y in ys]
        h = hnf_rows(rows)
        new_over_old = [[Fraction(x, p) for x in row] for row in h]
        basis = mat_mul(new_over_old, basis)


def _canonical_basis(basis):
    """HNF-canonical form: b0 = 1, pivots on ascending powers, positive."""
    dens = [f.denominator for row in basis for f in row]
    d = 1
    for x in dens:
        d = d * x // gcd(d, x)
    mat = [[int(f * d) for f in row] for row in basis]
    h = hnf_rows(mat)
    out = tuple(tuple(Fraction(x, d) for x in row) for row in h)
    assert out[0] == (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    return out


def _maximalize(basis, minpoly, red, target_disc):
    disc = _module_discriminant(basis, minpoly, red)
    assert disc.denominator == 1
    disc = int(disc)
    assert disc % target_disc == 0, (disc, target_disc)
    ratio = disc // target_disc
    root = isqrt(ratio)
    assert root * root == ratio, "discriminant ratio is not a square"
    for p in factorize(root):
        basis = _p_saturate(basis, minpoly, red, p)
    final = _module_discriminant(basis, minpoly, red)
    assert final == target_disc, (final, target_disc)
    return basis


# ---------------------------------------------------------------------------
# the field object


@dataclass(frozen=True)
class FieldSpec:
    """An imaginary Galois quartic field with an exact integral basis.

    integral_basis rows are coordinates over the power basis of theta;
    sqrt_coords maps each embedded squarefree radicand d to the integer
    coordinates (over the integral basis) of an element squaring to d.
    """

    kind: str  # "biquadratic" | "cyclic"
    m: int | None
    n: int | None
    conductor: int | None
    theta_minpoly: IntPoly
    integral_basis: tuple
    discriminant: int
    index: int
    real_subfield_d: int
    sqrt_coords: tuple

    @cached_property
    def _red(self):
        return _reduction_rows(self.theta_minpoly)

    @cached_property
    def basis_inv(self):
        return invert_fraction_matrix([list(r) for r in self.integral_basis])

    @cached_property
    def mult_table(self):
        return _structure_constants(self.integral_basis, self.theta_minpoly, self._red)

    @cached_property
    def theta_coords(self):
        return self.coords_from_power([Fraction(0), Fraction(1), Fraction(0), Fraction(0)])

    @cached_property
    def sqrt_map(self):
        return {d: coords for d, coords in self.sqrt_coords}

    @cached_property
    def norm_form(self):
        """The quartic norm form N(c0 b0 + .. + c3 b3) as a monomial dict.

        Keys are exponent 4-tuples summing to 4, values exact integers.
        Built by expanding the determinant of the generic multiplication
        matrix, whose entries are linear forms in the coordinates.
        """
        from itertools import permutations

        table = self.mult_table
        # entry (j, k) of the multiplication matrix is sum_i c_i table[i][j][k]
        def linear_form(j, k):
            return tuple(table[i][j][k] for i in range(4))

        form: dict[tuple[int, int, int, int], int] = {}
        for perm in permutations(range(4)):
            sign = 1
            seen = list(perm)
            for a in range(4):
                for b in range(a + 1, 4):
                    if seen[a] > seen[b]:
                        sign = -sign
            poly = {(0, 0, 0, 0): sign}
            for j in range(4):
                lf = linear_form(j, perm[j])
                nxt: dict[tuple[int, int, int, int], int] = {}
                for exps, coef in poly.items():
                    for i in range(4):
                        if lf[i] == 0:
                            continue
                        key = tuple(e + (1 if t == i else 0) for t, e in enumerate(exps))
                        nxt[key] = nxt.get(key, 0) + coef * lf[i]
                poly = nxt
            for key, coef in poly.items():
                form[key] = form.get(key, 0) + coef
        return {k: v for k, v in form.items() if v != 0}

    def coords_from_power(self, power_vec):
        """Integral-basis coordinates of an element given in power coordinates.

        Raises ValueError when the element is not integral over the basis.
        """
        coords = [
            sum(Fraction(power_vec[t]) * self.basis_inv[t][k] for t in range(4))
            for k in range(4)
        ]
        if any(x.denominator != 1 for x in coords):
            raise ValueError("element is not integral")
        return tuple(int(x) for x in coords)

    def power_from_coords(self, coords):
        return tuple(
            sum(Fraction(coords[i]) * self.integral_basis[i][t] for i in range(4))
            for t in range(4)
        )

    def name(self) -> str:
        if self.kind == "biquadratic":
            return f"Q(sqrt({self.m}), sqrt({self.n}))"
        return f"cyclic quartic field of conductor {self.conductor}"

    def __repr__(self):
        return f"FieldSpec({self.name()})"


def integral_basis_closure_check(spec: FieldSpec) -> bool:
    """True iff the stored basis spans the claimed maximal order.

    All 16 pairwise products of basis elements must have integer coordinates
    over the basis, 1 must be an integral combination, and the module
    discriminant must equal the field discriminant (so a closed but
    non-maximal order, such as a bare power basis, is rejected).
    """
    red = _reduction_rows(spec.theta_minpoly)
    try:
        _structure_constants(spec.integral_basis, spec.theta_minpoly, red)
        binv = invert_fraction_matrix([list(r) for r in spec.integral_basis])
        one = [sum(Fraction(1 if t == 0 else 0) * binv[t][k] for t in range(4)) for k in range(4)]
        if not all(x.denominator == 1 for x in one):
            return False
        return _module_discriminant(spec.integral_basis, spec.theta_minpoly, red) == spec.discriminant
    except AssertionError:
        return False


def _validate_spec(spec: FieldSpec):
    assert spec.theta_minpoly.degree == 4 and spec.theta_minpoly.coeffs[4] == 1
    assert count_real_roots(spec.theta_minpoly) == 0, "field is not totally imaginary"
    poly_d = poly_discriminant(spec.theta_minpoly)
    assert poly_d == spec.discriminant * spec.index ** 2
    assert integral_basis_closure_check(spec)
    # each stored square root squares to d * 1
    for d, coords in spec.sqrt_coords:
        power = spec.power_from_coords(coords)
        sq = _poly_mul_mod(list(power), list(power), _reduction_rows(spec.theta_minpoly))
        assert sq == [Fraction(d), Fraction(0), Fraction(0), Fraction(0)]


# ---------------------------------------------------------------------------
# biquadratic construction


def _bi_mul(u, v, m, n):
    """Multiplication in the 4-dimensional algebra Q<1, A, B, AB>."""
    u0, u1, u2, u3 = u
    v0, v1, v2, v3 = v
    return [
        u0 * v0 + m * u1 * v1 + n * u2 * v2 + m * n * u3 * v3,
        u0 * v1 + u1 * v0 + n * (u2 * v3 + u3 * v2),
        u0 * v2 + u2 * v0 + m * (u1 * v3 + u3 * v1),
        u0 * v3 + u3 * v0 + u1 * v2 + u2 * v1,
    ]


def build_biquadratic(m: int, n: int) -> FieldSpec:
    """The imaginary biquadratic field Q(sqrt(m), sqrt(n)), theta = sqrt(m)+sqrt(n)."""
    if m in (0, 1) or n in (0, 1) or not (is_squarefree(m) and is_squarefree(n)):
        raise DegenerateField(f"({m}, {n}): radicands must be squarefree and != 0, 1")
    if m == n:
        raise DegenerateField(f"({m}, {n}): equal radicands give a quadratic field")
    if m > 0 and n > 0:
        raise NotImaginary(f"({m}, {n}): all three quadratic subfields are real")

    r3, h = squarefree_part(m * n)
    radicands = (m, n, r3)
    if r3 == 1 or len(set(radicands)) != 3:
        raise DegenerateField(f"({m}, {n}): compositum has degree < 4")

    one = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
    a_vec = [Fraction(0), Fraction(1), Fraction(0), Fraction(0)]
    b_vec = [Fraction(0), Fraction(0), Fraction(1), Fraction(0)]
    theta = [Fraction(0), Fraction(1), Fraction(1), Fraction(0)]

    powers = [one]
    for _ in range(4):
        powers.append([Fraction(x) for x in _bi_mul(powers[-1], theta, m, n)])
    p_mat = powers[:4]
    try:
        rel = solve_exact([[p_mat[j][i] for j in range(4)] for i in range(4)],
                          [powers[4][i] for i in range(4)])
    except ValueError as exc:
        raise DegenerateField(f"({m}, {n}): theta does not have degree 4") from exc
    minpoly = IntPoly((int(-rel[0]), int(-rel[1]), int(-rel[2]), int(-rel[3]), 1))
    assert minpoly.coeffs == ((m - n) ** 2, 0, -2 * (m + n), 0, 1)
    red = _reduction_rows(minpoly)

    p_inv = invert_fraction_matrix([[p_mat[j][i] for j in range(4)] for i in range(4)])

    def to_power(amb):
        return [sum(Fraction(amb[t]) * p_inv[i][t] for t in range(4)) for i in range(4)]

    def omega(r, vec):
        if r % 4 == 1:
            return [(o + x) / 2 for o, x in zip(one, vec)]
        return [Fraction(x) for x in vec]

    w1 = omega(m, a_vec)
    w2 = omega(n, b_vec)
    w12 = [Fraction(x) for x in _bi_mul(w1, w2, m, n)]
    order0 = [to_power(one), to_power(w1), to_power(w2), to_power(w12)]

    d1, d2, d3 = (quadratic_discriminant(r) for r in radicands)
    target = d1 * d2 * d3
    assert target > 0

    basis = _canonical_basis(_maximalize(order0, minpoly, red, target))

    poly_d = poly_discriminant(minpoly)
    index = isqrt(poly_d // target)
    assert index * index * target == poly_d

    real_d = next(r for r in radicands if r > 0)
    ab_scaled = [Fraction(0), Fraction(0), Fraction(0), Fraction(1, h)]
    sqrt_amb = {m: a_vec, n: b_vec, r3: ab_scaled}

    spec = FieldSpec(
        kind="biquadratic",
        m=m,
        n=n,
        conductor=None,
        theta_minpoly=minpoly,
        integral_basis=basis,
        discriminant=target,
        index=index,
        real_subfield_d=real_d,
        sqrt_coords=tuple(sorted(
            (d, _coords_over(basis, to_power(vec))) for d, vec in sqrt_amb.items()
        )),
    )
    _validate_spec(spec)
    return spec


def _coords_over(basis, power_vec):
    binv = invert_fraction_matrix([list(r) for r in basis])
    coords = [sum(Fraction(power_vec[t]) * binv[t][k] for t in range(4)) for k in range(4)]
    assert all(x.denominator == 1 for x in coords)
    return tuple(int(x) for x in coords)


# ---------------------------------------------------------------------------
# cyclic quartic construction

SUPPORTED_CONDUCTORS = (5, 13, 16, 29, 37, 53, 61)


def _primitive_root(f: int) -> int:
    phi = f - 1
    qs = list(factorize(phi))
    for g in range(2, f):
        if all(pow(g, phi // q, f) != 1 for q in qs):
            return g
    raise AssertionError


def _cyclo_reduce(vec, f):
    """Canonical representative modulo the f-th cyclotomic polynomial."""
    v = list(vec)
    if f == 16:
        return [v[j] - v[8 + j] for j in range(8)] + [0] * 8
    c = v[f - 1]
    return [x - c for x in v[: f - 1]] + [0]


def _cyclo_mul(u, v, f):
    out = [0] * f
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b != 0:
                out[(i + j) % f] += a * b
    return _cyclo_reduce(out, f)


def build_cyclic_quartic(f: int) -> FieldSpec:
    """The imaginary cyclic quartic field inside Q(zeta_f).

    theta is the Gauss period over the index-4 subgroup H of (Z/f)* with
    cyclic quotient and -1 not in H; for the supported conductors that
    subgroup is unique.
    """
    if f not in SUPPORTED_CONDUCTORS:
        raise UnsupportedConductor(f"conductor {f} is not in {SUPPORTED_CONDUCTORS}")

    if f == 16:
        subgroup = [1, 7]
        gamma = 3
    else:
        g0 = _primitive_root(f)
        subgroup = sorted(pow(g0, 4 * k, f) for k in range((f - 1) // 4))
        gamma = g0
    assert (f - 1) % f not in subgroup  # -1 gives the imaginary choice

    def period(j):
        vec = [0] * f
        mult = pow(gamma, j, f)
        for h in subgroup:
            vec[(mult * h) % f] += 1
        return _cyclo_reduce(vec, f)

    periods = [period(j) for j in range(4)]
    theta = periods[0]

    one = _cyclo_reduce([1] + [0] * (f - 1), f)
    powers = [one]
    for _ in range(4):
        powers.append(_cyclo_mul(powers[-1], theta, f))

    width = f
    mat = [[powers[j][i] for j in range(4)] for i in range(width)]
    rel = solve_exact(mat, [powers[4][i] for i in range(width)])
    minpoly = IntPoly((int(-rel[0]), int(-rel[1]), int(-rel[2]), int(-rel[3]), 1))
    red = _reduction_rows(minpoly)

    def to_power(vec):
        sol = solve_exact(mat, [vec[i] for i in range(width)])
        return [Fraction(x) for x in sol]

    if f == 16:
        order0 = [[Fraction(1 if t == i else 0) for t in range(4)] for i in range(4)]
        real_d = 2
        sqrt_vec = _cyclo_reduce(
            [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0], 16
        )
    else:
        order0 = [to_power(p) for p in periods]
        real_d = f
        sqrt_vec = _cyclo_reduce([0] + [legendre(a, f) for a in range(1, f)], f)

    dq = quadratic_discriminant(real_d)
    target = f * f * dq

    basis = _canonical_basis(_maximalize(order0, minpoly, red, target))

    poly_d = poly_discriminant(minpoly)
    index = isqrt(poly_d // target)
    assert index * index * target == poly_d

    sqrt_coords = [(real_d, _coords_over(basis, to_power(sqrt_vec)))]
    if f == 5:
        # theta itself is a primitive 5th root of unity (H is trivial)
        assert subgroup == [1]

    spec = FieldSpec(
        kind="cyclic",
        m=None,
        n=None,
        conductor=f,
        theta_minpoly=minpoly,
        integral_basis=basis,
        discriminant=target,
        index=index,
        real_subfield_d=real_d,
        sqrt_coords=tuple(sqrt_coords),
    )
    _validate_spec(spec)
    return spec


# ---------------------------------------------------------------------------
# registry of the forty class-number-one fields


@dataclass(frozen=True)
class FieldRegistryEntry:
    label: str
    spec: FieldSpec
    expected_g: int
    expected_p1_p2: tuple[int, int]


_BIQUADRATIC_TABLE = (
    ("K_1", -1, 13, 29, 17),
    ("K_2", -1, 19, 5, 73),
    ("K_3", -1, 37, 149, 53),
    ("K_4", -1, 43, 13, 17),
    ("K_5", -1, 67, 29, 37),
    ("K_6", -1, 163, 53, 173),
    ("K_7", 2, -11, 23, 31),
    ("K_8", -2, -11, 3, 59),
    ("K_9", -2, -7, 11, 43),
    ("K_10", -2, -19, 11, 17),
    ("K_11", -2, 29, 59, 83),
    ("K_12", -2, -43, 11, 17),
    ("K_13", -2, -67, 19, 17),
    ("K_14", -3, 41, 31, 73),
    ("K_15", -3, -43, 31, 79),
    ("K_16", -3, -67, 439, 19),
    ("K_17", -3, 89, 607, 97),
    ("K_18", -3, -163, 43, 61),
    ("K_19", -7, -11, 23, 37),
    ("K_20", -7, 13, 23, 29),
    ("K_21", -7, -19, 11, 137),
    ("K_22", -7, -43, 11, 53),
    ("K_23", -7, 61, 107, 137),
    ("K_24", -7, -163, 43, 179),
    ("K_25", -11, 17, 47, 59),
    ("K_26", -11, -19, 23, 5),
    ("K_27", -11, -67, 47, 59),
    ("K_28", -11, -163, 199, 53),
    ("K_29", -19, -67, 23, 47),
    ("K_30", -19, -163, 43, 47),
    ("K_31", -43, -67, 23, 17),
    ("K_32", -43, -163, 47, 53),
    ("K_33", -67, -163, 47, 167),
)

_CYCLIC_TABLE = (
    ("5", 5, 11, 31),
    ("13", 13, 79, 29),
    ("16", 16, 23, 17),
    ("29", 29, 7, 53),
    ("37", 37, 7, 53),
    ("53", 53, 107, 89),
    ("61", 61, 47, 73),
)


def _expected_torsion(label: str, conductor: int | None) -> int:
    if conductor is not None:
        return 10 if conductor == 5 else 2
    j = int(label.split("_")[1])
    if j <= 6:
        return 4
    if 14 <= j <= 18:
        return 6
    return 2


@lru_cache(maxsize=1)
def _registry_tuple():
    entries = []
    for label, m, n, p1, p2 in _BIQUADRATIC_TABLE:
        spec = build_biquadratic(m, n)
        entries.append(
            FieldRegistryEntry(label, spec, _expected_torsion(label, None), (p1, p2))
        )
    for label, f, p1, p2 in _CYCLIC_TABLE:
        spec = build_cyclic_quartic(f)
        entries.append(
            FieldRegistryEntry(label, spec, _expected_torsion(label, f), (p1, p2))
        )
    return tuple(entries)


def registry() -> list[FieldRegistryEntry]:
    """All forty class-number-one fields with their reference prime pairs."""
    return list(_registry_tuple())


def registry_entry(label: str) -> FieldRegistryEntry:
    for entry in _registry_tuple():
        if entry.label == label:
            return entry
    raise UnknownLabel(f"no registry entry named {label!r}")


# ---------------------------------------------------------------------------
# serialization


def field_descriptor(spec: FieldSpec) -> dict:
    """JSON-ready descriptor; every integer rendered as a decimal string."""
    desc = {
        "kind": spec.kind,
        "minpoly": [str(c) for c in spec.theta_minpoly.coeffs],
        "basis": [
            [f"{f.numerator}/{f.denominator}" for f in row]
            for row in spec.integral_basis
        ],
        "discriminant": str(spec.discriminant),
        "index": str(spec.index),
        "real_subfield_d": str(spec.real_subfield_d),
    }
    if spec.kind == "biquadratic":
        desc["m"] = str(spec.m)
        desc["n"] = str(spec.n)
    else:
        desc["conductor"] = str(spec.conductor)
    return desc


def build_from_descriptor(desc: dict) -> FieldSpec:
    """Rebuild the field named by a descriptor (construction is recomputed)."""
    if desc["kind"] == "biquadratic":
        return build_biquadratic(int(desc["m"]), int(desc["n"]))
    if desc["kind"] == "cyclic":
        return build_cyclic_quartic(int(desc["conductor"]))
    raise UnknownLabel(f"unknown field kind {desc['kind']!r}")


def descriptor_matches(desc: dict, spec: FieldSpec) -> bool:
    return field_descriptor(spec) == {k: v for k, v in desc.items() if k != "label"}
