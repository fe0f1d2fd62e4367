"""Independent reference implementations used to cross-check the library.

Everything here is written naively on purpose: different algorithms,
no shared code with the package, so agreement is meaningful evidence.
"""

from fractions import Fraction
from itertools import permutations


def naive_hnf(rows, n):
    """Canonical row HNF by repeated Euclid steps on each pivot column.

    Quadratic-ish and slow, but each step is an elementary row operation,
    so correctness is immediate. Returns a tuple of tuples: pivots
    positive, entries above each pivot reduced into [0, pivot).
    """
    vecs = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(n):
        work = [v for v in vecs if v[col] != 0]
        vecs = [v for v in vecs if v[col] == 0]
        while len(work) > 1:
            work.sort(key=lambda v: abs(v[col]))
            pivot = work[0]
            rest = []
            for v in work[1:]:
                q = v[col] // pivot[col]
                w = [a - q * b for a, b in zip(v, pivot)]
                (rest if w[col] != 0 else vecs).append(w)
            work = [pivot] + rest
        if work:
            pivot = work[0]
            if pivot[col] < 0:
                pivot = [-a for a in pivot]
            basis.append(pivot)
    # reduce entries above each pivot into the canonical range; ascending
    # order, because reducing by an earlier pivot dirties later columns
    for i in range(1, len(basis)):
        col = next(j for j, a in enumerate(basis[i]) if a != 0)
        for k in range(i):
            q = basis[k][col] // basis[i][col]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return tuple(tuple(v) for v in basis)


def poly_mul_fold(m, a, b):
    """Cyclic convolution via schoolbook product on degree 2m, then fold."""
    long = [0] * (2 * m)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            long[i + j] += x * y
    out = [0] * m
    for k, c in enumerate(long):
        out[k % m] += c
    return tuple(out)


def conj_coeffs(m, a):
    """Involution on coefficient vectors: index i goes to (m - i) mod m."""
    out = [0] * m
    for i, c in enumerate(a):
        out[(m - i) % m] += c
    return tuple(out)


def leibniz_det(entries, zero, one):
    """Permutation-sum determinant over any commutative ring.

    entries[i][j] must support + and *; zero and one are ring constants.
    """
    n = len(entries)
    total = zero
    for perm in permutations(range(n)):
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = one
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total + (term if inv % 2 == 0 else -term)
    return total


def fraction_det(rows):
    """Integer determinant by Gaussian elimination over Fraction."""
    n = len(rows)
    mat = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, n):
            factor = mat[r][col] / mat[col][col]
            if factor:
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    assert det.denominator == 1
    return int(det)


def element_shifts(m, coeffs):
    """Coefficient rows of x, g*x, ..., g^(m-1)*x: the Z-span of the ideal (x)."""
    rows = []
    for k in range(m):
        row = [0] * m
        for i, c in enumerate(coeffs):
            row[(i + k) % m] += c
        rows.append(row)
    return rows


def ideal_hnf(m, gens_coeffs):
    """Canonical basis of the Z-lattice underlying the ideal sum."""
    rows = []
    for coeffs in gens_coeffs:
        rows.extend(element_shifts(m, coeffs))
    return naive_hnf(rows, m)
