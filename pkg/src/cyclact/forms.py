"""Hyperbolic quadratic modules over Z[Z/m].

H^r_eps(Lambda) has basis (e_1..e_r, f_1..f_r). Vectors are coordinate
columns x = sum a_i e_i + b_i f_i. The sesquilinear form is

    lambda(x, y) = sum_i a_i * conj(d_i) + eps * b_i * conj(c_i)

for y = sum c_i e_i + d_i f_i: linear on the left, conjugate-linear on the
right, with lambda(y, x) = eps * conj(lambda(x, y)). The quadratic
refinement mu(x) = [sum a_i * conj(b_i)] lives in Lambda modulo the form
parameter, and mu(x+y) = mu(x) + mu(y) + [lambda(x, y)] requires the
sign/parameter pairings enforced by QuadraticModule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadIndex,
    DimensionMismatch,
    ModulusMismatch,
    NotComplement,
    PreconditionFailed,
    ZeroVector,
)
from .groupring import (
    FormParameterKind,
    GroupRingElement,
    ParameterClass,
    ideal_contains_one,
    is_unit,
    param_reduce,
)


class RingVector:
    """Coordinate vector of GroupRingElements (column convention)."""

    __slots__ = ("m", "coords")

    def __init__(self, coords: Sequence[GroupRingElement]):
        if not coords:
            raise DimensionMismatch("empty vector")
        m = coords[0].m
        for c in coords:
            if c.m != m:
                raise ModulusMismatch("mixed moduli in vector")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coords", tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("RingVector is immutable")

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> GroupRingElement:
        return self.coords[i]

    def __add__(self, other: "RingVector") -> "RingVector":
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths differ")
        return RingVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "RingVector") -> "RingVector":
        if len(self) != len(other):
            raise DimensionMismatch("vector lengths differ")
        return RingVector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "RingVector":
        return RingVector([-a for a in self.coords])

    def scaled(self, c: GroupRingElement) -> "RingVector":
        """c * v with ring scalar c."""
        return RingVector([c * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingVector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "RingVector(" + ", ".join(repr(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]

    @staticmethod
    def from_json(obj: Iterable[dict]) -> "RingVector":
        return RingVector([GroupRingElement.from_json(c) for c in obj])


class RingMatrix:
    """Square matrix of GroupRingElements acting on column RingVectors."""

    __slots__ = ("m", "rows")

    def __init__(self, rows: Sequence[Sequence[GroupRingElement]]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and nonempty")
        m = rows[0][0].m
        for r in rows:
            for x in r:
                if x.m != m:
                    raise ModulusMismatch("mixed moduli in matrix")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int, m: int) -> "RingMatrix":
        one = GroupRingElement.one(m)
        zero = GroupRingElement.zero(m)
        return RingMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_columns(cols: Sequence[RingVector]) -> "RingMatrix":
        n = len(cols)
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("need n columns of length n")
        return RingMatrix([[cols[j][i] for j in range(n)] for i in range(n)])

    def column(self, j: int) -> RingVector:
        return RingVector([self.rows[i][j] for i in range(self.n)])

    def __mul__(self, other):
        if isinstance(other, RingVector):
            if len(other) != self.n:
                raise DimensionMismatch("matrix/vector size mismatch")
            return RingVector(
                [
                    sum(
                        (self.rows[i][j] * other[j] for j in range(self.n)),
                        GroupRingElement.zero(self.m),
                    )
                    for i in range(self.n)
                ]
            )
        if isinstance(other, RingMatrix):
            if other.n != self.n:
                raise DimensionMismatch("matrix size mismatch")
            return RingMatrix(
                [
                    [
                        sum(
                            (self.rows[i][k] * other.rows[k][j] for k in range(self.n)),
                            GroupRingElement.zero(self.m),
                        )
                        for j in range(self.n)
                    ]
                    for i in range(self.n)
                ]
            )
        return NotImplemented

    def conj_transpose(self) -> "RingMatrix":
        return RingMatrix(
            [[self.rows[j][i].conj() for j in range(self.n)] for i in range(self.n)]
        )

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def conj(self) -> "RingMatrix":
        return RingMatrix([[x.conj() for x in r] for r in self.rows])

    def minor(self, drop_row: int, drop_col: int) -> "RingMatrix":
        return RingMatrix(
            [
                [x for j, x in enumerate(r) if j != drop_col]
                for i, r in enumerate(self.rows)
                if i != drop_row
            ]
        )

    def inverse(self) -> "RingMatrix":
        """Adjugate inverse; requires the determinant to be a unit."""
        d = ring_det(self)
        ok, dinv = is_unit(d)
        if not ok:
            raise PreconditionFailed("matrix determinant is not a unit")
        n = self.n
        if n == 1:
            return RingMatrix([[dinv]])
        adj = [
            [
                ring_det(self.minor(j, i)) * ((-1) ** (i + j))
                for j in range(n)
            ]
            for i in range(n)
        ]
        return RingMatrix([[dinv * adj[i][j] for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RingMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "RingMatrix(" + "; ".join(
            ", ".join(repr(x) for x in r) for r in self.rows
        ) + ")"

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    @staticmethod
    def from_json(obj) -> "RingMatrix":
        return RingMatrix(
            [[GroupRingElement.from_json(x) for x in r] for r in obj]
        )


@dataclass(frozen=True)
class QuadraticModule:
    """Based hyperbolic module H^rank_eps over Z[Z/m].

    eps = -1 pairs with the TILDE or PLUS parameter, eps = +1 with MINUS;
    other combinations break the law mu(x+y) = mu(x)+mu(y)+[lambda(x,y)].
    """

    m: int
    rank: int
    eps: int
    kind: FormParameterKind

    def __post_init__(self):
        if self.rank < 1:
            raise PreconditionFailed("rank must be positive")
        if self.eps == -1:
            if self.kind not in (FormParameterKind.TILDE, FormParameterKind.PLUS):
                raise PreconditionFailed("eps=-1 requires TILDE or PLUS parameter")
        elif self.eps == 1:
            if self.kind is not FormParameterKind.MINUS:
                raise PreconditionFailed("eps=+1 requires MINUS parameter")
        else:
            raise PreconditionFailed("eps must be +1 or -1")

    @property
    def dim(self) -> int:
        return 2 * self.rank

    def zero_vector(self) -> RingVector:
        return RingVector([GroupRingElement.zero(self.m)] * self.dim)

    def basis_vector(self, index: int) -> RingVector:
        if not 0 <= index < self.dim:
            raise BadIndex(f"basis index {index} out of range")
        c = [GroupRingElement.zero(self.m)] * self.dim
        c[index] = GroupRingElement.one(self.m)
        return RingVector(c)

    def e(self, i: int) -> RingVector:
        """e_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise BadIndex(f"e_{i} out of range")
        return self.basis_vector(i - 1)

    def f(self, i: int) -> RingVector:
        """f_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise BadIndex(f"f_{i} out of range")
        return self.basis_vector(self.rank + i - 1)

    def vector(self, coeffs: dict) -> RingVector:
        """Build a vector from {"e1": elem, "f2": elem, ...} coefficients."""
        c = [GroupRingElement.zero(self.m)] * self.dim
        for label, val in coeffs.items():
            block, idx = _parse_label(label, self.rank)
            c[idx if block == "e" else self.rank + idx] = val
        return RingVector(c)

    def gram_matrix(self) -> RingMatrix:
        one = GroupRingElement.one(self.m)
        zero = GroupRingElement.zero(self.m)
        r, n = self.rank, self.dim
        rows = [[zero] * n for _ in range(n)]
        for i in range(r):
            rows[i][r + i] = one
            rows[r + i][i] = one * self.eps
        return RingMatrix(rows)

    def _check_vector(self, x: RingVector) -> None:
        if len(x) != self.dim:
            raise DimensionMismatch(f"expected dim {self.dim}, got {len(x)}")
        if x.m != self.m:
            raise ModulusMismatch(f"m={x.m} vs module m={self.m}")


def _parse_label(label: str, rank: int) -> tuple[str, int]:
    if len(label) < 2 or label[0] not in ("e", "f") or not label[1:].isdigit():
        raise BadIndex(f"bad basis label {label!r}")
    idx = int(label[1:])
    if not 1 <= idx <= rank:
        raise BadIndex(f"basis label {label!r} out of range for rank {rank}")
    return label[0], idx - 1


def lambda_eval(Q: QuadraticModule, x: RingVector, y: RingVector) -> GroupRingElement:
    """Sesquilinear value lambda(x, y)."""
    Q._check_vector(x)
    Q._check_vector(y)
    r = Q.rank
    total = GroupRingElement.zero(Q.m)
    for i in range(r):
        total = total + x[i] * y[r + i].conj()
        total = total + Q.eps * (x[r + i] * y[i].conj())
    return total


def mu_eval(Q: QuadraticModule, x: RingVector) -> ParameterClass:
    """Quadratic refinement mu(x) = [sum a_i conj(b_i)] in Lambda/parameter."""
    Q._check_vector(x)
    r = Q.rank
    lift = GroupRingElement.zero(Q.m)
    for i in range(r):
        lift = lift + x[i] * x[r + i].conj()
    return param_reduce(lift, Q.kind)


def is_primitive(Q: QuadraticModule, x: RingVector) -> bool:
    """True iff the coordinates of x generate the unit ideal."""
    Q._check_vector(x)
    if x.is_zero():
        raise ZeroVector("primitivity is undefined for the zero vector")
    return ideal_contains_one(list(x.coords))


def isometry_check(Q: QuadraticModule, M: RingMatrix) -> bool:
    """Gram preservation M^T G conj(M) = G plus mu = 0 on all basis images."""
    if M.n != Q.dim:
        raise DimensionMismatch(f"expected {Q.dim}x{Q.dim} matrix")
    if M.m != Q.m:
        raise ModulusMismatch(f"m={M.m} vs module m={Q.m}")
    G = Q.gram_matrix()
    if M.transpose() * G * M.conj() != G:
        return False
    for i in range(Q.dim):
        if not mu_eval(Q, M.column(i)).is_zero():
            return False
    return True


def transvection(Q: QuadraticModule, base: tuple[str, str], parameter: GroupRingElement) -> RingMatrix:
    """Elementary isometry attached to a pair of basis labels.

    Supported shapes, writing c for the parameter:
      ("ei", "fj"), i < j: entries c at (e_i, e_j) and -conj(c) at (f_j, f_i);
      ("ei", "fj"), i > j: entries c at (e_j, f_i) and -eps*conj(c) at (e_i, f_j);
      ("ei", "fi") / ("fi", "ei"): shear along f_i resp. e_i; the parameter
        must satisfy conj(c) = -eps*c and have vanishing parameter class.
    """
    if parameter.m != Q.m:
        raise ModulusMismatch(f"m={parameter.m} vs module m={Q.m}")
    ub, ui = _parse_label(base[0], Q.rank)
    wb, wi = _parse_label(base[1], Q.rank)
    if ub == wb:
        raise BadIndex("base must pair an e-label with an f-label")
    if ub == "f":
        ub, wb = wb, ub
        ui, wi = wi, ui
        flipped = True
    else:
        flipped = False
    r = Q.rank
    c = parameter
    rows = [list(row) for row in RingMatrix.identity(Q.dim, Q.m).rows]
    if ui == wi:
        if c.conj() != -Q.eps * c:
            raise PreconditionFailed("shear parameter must satisfy conj(c) = -eps*c")
        if not param_reduce(c, Q.kind).is_zero():
            raise PreconditionFailed("shear parameter class must vanish")
        if flipped:
            # base (f_i, e_i): x -> x + lambda(x, f_i)*c*f_i
            rows[r + ui][ui] = rows[r + ui][ui] + c
        else:
            # base (e_i, f_i): x -> x + lambda(x, e_i)*c*e_i
            rows[ui][r + ui] = rows[ui][r + ui] + Q.eps * c
        return RingMatrix(rows)
    if flipped:
        raise BadIndex("cross pair must be given e-label first")
    if ui < wi:
        # R shape: e_j feeds e_i, f_i feeds f_j negatively conjugated
        rows[ui][wi] = rows[ui][wi] + c
        rows[r + wi][r + ui] = rows[r + wi][r + ui] - c.conj()
    else:
        # T shape: f_i feeds e_j, f_j feeds e_i
        rows[wi][r + ui] = rows[wi][r + ui] + c
        rows[ui][r + wi] = rows[ui][r + wi] - Q.eps * c.conj()
    return RingMatrix(rows)


def ring_det(M: RingMatrix) -> GroupRingElement:
    """Determinant over the group ring, division-free.

    Expansion along rows with minors memoized on the column subset; row k
    always expands over the columns remaining in the mask.
    """
    n = M.n
    cache: dict[int, GroupRingElement] = {0: GroupRingElement.one(M.m)}

    def minor_det(mask: int) -> GroupRingElement:
        got = cache.get(mask)
        if got is not None:
            return got
        k = bin(mask).count("1") - 1
        total = GroupRingElement.zero(M.m)
        # expanding along row k of the (k+1)-row submatrix: the cofactor
        # sign for the t-th surviving column is (-1)^(k+t)
        sign = 1 if k % 2 == 0 else -1
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            entry = M.rows[k][j]
            if not entry.is_zero():
                term = entry * minor_det(mask ^ low)
                total = total + (term if sign == 1 else -term)
            sign = -sign
            rest ^= low
        cache[mask] = total
        return total

    return minor_det((1 << n) - 1)


@dataclass(frozen=True)
class ComplementCertificate:
    """Evidence that U is a Lagrangian complement of S."""

    S: tuple[RingVector, ...]
    U: tuple[RingVector, ...]
    gram_evidence: tuple[tuple[GroupRingElement, ...], ...]
    mu_evidence: tuple[ParameterClass, ...]
    det_evidence: tuple[GroupRingElement, GroupRingElement]

    def to_json(self) -> dict:
        return {
            "S": [v.to_json() for v in self.S],
            "U": [v.to_json() for v in self.U],
            "gram": [[x.to_json() for x in row] for row in self.gram_evidence],
            "mu": [c.to_json() for c in self.mu_evidence],
            "det": self.det_evidence[0].to_json(),
            "detInverse": self.det_evidence[1].to_json(),
        }


def verify_lagrangian_complement(
    Q: QuadraticModule, S: Sequence[RingVector], U: Sequence[RingVector]
) -> ComplementCertificate:
    """Certify S + U = H^r with U Lagrangian, or raise NotComplement.

    Checks, in order: lambda vanishes on U x U; mu vanishes on U; the
    2r x 2r matrix with columns S followed by U has unit determinant.
    """
    if len(S) != Q.rank or len(U) != Q.rank:
        raise DimensionMismatch(f"need {Q.rank} vectors in S and in U")
    for v in list(S) + list(U):
        Q._check_vector(v)
    gram = tuple(
        tuple(lambda_eval(Q, u, w) for w in U) for u in U
    )
    for i, row in enumerate(gram):
        for j, val in enumerate(row):
            if not val.is_zero():
                raise NotComplement(
                    "gram", f"lambda(U[{i}], U[{j}]) = {val!r} is nonzero"
                )
    mus = tuple(mu_eval(Q, u) for u in U)
    for i, c in enumerate(mus):
        if not c.is_zero():
            raise NotComplement("mu", f"mu(U[{i}]) = {c.rep!r} is nonzero")
    B = RingMatrix.from_columns(list(S) + list(U))
    d = ring_det(B)
    ok, dinv = is_unit(d)
    if not ok:
        raise NotComplement("determinant", f"det = {d!r} is not a unit")
    return ComplementCertificate(
        S=tuple(S),
        U=tuple(U),
        gram_evidence=gram,
        mu_evidence=mus,
        det_evidence=(d, dinv),
    )
