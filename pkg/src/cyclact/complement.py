"""Lagrangian complements of standard rank-2 summands in H^2.

Inputs describe S = span(v_1, v_2) inside H^2_eps with v_1 = e_1 and
v_2 = a_1 e_1 + a_2 e_2 + c f_1 + b_2 f_2, where c = s (the norm element)
in the skew branches and c = 1 - g in the symmetric branch. Each solver
normalizes v_2 by recorded isometries, produces an explicit Lagrangian
complement U of S, pulls U back to the input coordinates, and certifies
the result independently via verify_lagrangian_complement.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AugmentationObstruction,
    DimensionMismatch,
    ModulusMismatch,
    NormalizationFailed,
    ParityObstruction,
    PreconditionFailed,
    SearchExhausted,
)
from .forms import (
    ComplementCertificate,
    QuadraticModule,
    RingMatrix,
    RingVector,
    isometry_check,
    lambda_eval,
    mu_eval,
    transvection,
    verify_lagrangian_complement,
)
from .groupring import (
    FormParameterKind,
    GroupRingElement,
    NormData,
    exact_divide,
    ideal_contains_one,
    ideal_normalize,
    param_reduce,
)
from .intlattice import ZLattice


class Branch(enum.Enum):
    ODD_M_SKEW = "odd-m"
    EVEN_M_SKEW = "even-m"
    EVEN_N_SYM = "even-n"

    @staticmethod
    def from_cli(name: str) -> "Branch":
        for b in Branch:
            if b.value == name:
                return b
        raise PreconditionFailed(f"unknown branch {name!r}")


_BRANCH_FORM = {
    Branch.ODD_M_SKEW: (-1, FormParameterKind.TILDE),
    Branch.EVEN_M_SKEW: (-1, FormParameterKind.TILDE),
    Branch.EVEN_N_SYM: (1, FormParameterKind.MINUS),
}


@dataclass(frozen=True)
class EmbeddingSpec:
    """Coefficients of the standard embedded pair (v_1, v_2)."""

    m: int
    branch: Branch
    a1: GroupRingElement
    a2: GroupRingElement
    b2: GroupRingElement

    def __post_init__(self):
        for name in ("a1", "a2", "b2"):
            el = getattr(self, name)
            if el.m != self.m:
                raise ModulusMismatch(f"{name} has m={el.m}, spec has m={self.m}")

    @property
    def f1_coefficient(self) -> GroupRingElement:
        if self.branch is Branch.EVEN_N_SYM:
            return GroupRingElement.one(self.m) - GroupRingElement.gen(self.m)
        return GroupRingElement.norm(self.m)

    def module(self) -> QuadraticModule:
        eps, kind = _BRANCH_FORM[self.branch]
        return QuadraticModule(self.m, 2, eps, kind)

    def vectors(self) -> tuple[RingVector, RingVector]:
        Q = self.module()
        v1 = Q.e(1)
        v2 = Q.vector(
            {"e1": self.a1, "e2": self.a2, "f1": self.f1_coefficient, "f2": self.b2}
        )
        return v1, v2

    def validate(self) -> tuple[QuadraticModule, RingVector, RingVector]:
        """Check the branch invariants; raise PreconditionFailed otherwise."""
        if self.branch is Branch.ODD_M_SKEW and self.m % 2 == 0:
            raise PreconditionFailed("odd-m branch requires odd modulus")
        if self.branch is Branch.EVEN_M_SKEW and self.m % 2 == 1:
            raise PreconditionFailed("even-m branch requires even modulus")
        Q = self.module()
        v1, v2 = self.vectors()
        lam = lambda_eval(Q, v2, v2)
        if self.branch is Branch.EVEN_N_SYM:
            if lam.aug() != 0:
                raise PreconditionFailed(
                    "augmentation of lambda(v2, v2) must vanish"
                )
            if self.a2.aug() == 0 and self.b2.aug() == 0:
                raise AugmentationObstruction(
                    "both coefficient augmentations vanish; no unit normalization"
                )
            ideal = [self.a2, self.b2, self.f1_coefficient]
            if not ideal_contains_one(ideal):
                raise PreconditionFailed(
                    "a2, b2 and 1-g must generate the unit ideal"
                )
        else:
            if not lam.is_zero():
                raise PreconditionFailed("lambda(v2, v2) must vanish")
            s = GroupRingElement.norm(self.m)
            if not ideal_contains_one([self.a2, s, self.b2]):
                raise PreconditionFailed(
                    "a2, b2 and the norm element must generate the unit ideal"
                )
        return Q, v1, v2

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "branch": self.branch.value,
            "a1": self.a1.to_json(),
            "a2": self.a2.to_json(),
            "b2": self.b2.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "EmbeddingSpec":
        m = int(obj["m"])

        def coerce(val) -> GroupRingElement:
            if isinstance(val, dict):
                return GroupRingElement.from_json(val)
            return GroupRingElement(m, list(val))

        return EmbeddingSpec(
            m=m,
            branch=Branch.from_cli(obj["branch"]),
            a1=coerce(obj["a1"]),
            a2=coerce(obj["a2"]),
            b2=coerce(obj["b2"]),
        )


@dataclass(frozen=True)
class TraceStep:
    """One recorded transformation: an ambient isometry or a basis change.

    Ambient steps act on vectors as v -> matrix * v. Basis steps carry a
    2x2 matrix B acting on the pair (v_1, v_2) by column operations:
    new_v_j = sum_i B[i][j] * v_i. Basis steps change the chosen basis of
    S, not the submodule S itself.
    """

    name: str
    kind: str
    matrix: RingMatrix

    def to_json(self) -> dict:
        return {"name": self.name, "kind": self.kind, "matrix": self.matrix.to_json()}


@dataclass(frozen=True)
class SolverTrace:
    branch: Branch
    steps: tuple[TraceStep, ...]
    norm: Optional[NormData]
    h: Optional[int]
    normalized_S: tuple[RingVector, ...]
    U: tuple[RingVector, ...]
    certificate: ComplementCertificate

    def replay(self) -> bool:
        """Re-apply the recorded steps to the input S and compare."""
        vs = list(self.certificate.S)
        for step in self.steps:
            if step.kind == "ambient":
                vs = [step.matrix * v for v in vs]
            else:
                B = step.matrix
                vs = [
                    _vector_sum([vs[i].scaled(B.rows[i][j]) for i in range(len(vs))])
                    for j in range(len(vs))
                ]
        return tuple(vs) == self.normalized_S

    def to_json(self) -> dict:
        return {
            "branch": self.branch.value,
            "steps": [s.to_json() for s in self.steps],
            "normData": self.norm.to_json() if self.norm is not None else None,
            "h": self.h,
            "normalizedS": [v.to_json() for v in self.normalized_S],
            "U": [v.to_json() for v in self.U],
            "certificate": self.certificate.to_json(),
        }


def _vector_sum(vs: Sequence[RingVector]) -> RingVector:
    total = vs[0]
    for v in vs[1:]:
        total = total + v
    return total


def _embed_block(Q: QuadraticModule, M2: RingMatrix, pos: tuple[int, int]) -> RingMatrix:
    """Embed a 2x2 block into the identity at the given coordinate slots."""
    rows = [list(r) for r in RingMatrix.identity(Q.dim, Q.m).rows]
    for bi, pi in enumerate(pos):
        for bj, pj in enumerate(pos):
            rows[pi][pj] = M2.rows[bi][bj]
    return RingMatrix(rows)


def _block_module(Q: QuadraticModule) -> QuadraticModule:
    return QuadraticModule(Q.m, 1, Q.eps, Q.kind)


def _express_over(elems: Sequence[GroupRingElement], target: GroupRingElement):
    """Write target as a ring combination of elems, or return None."""
    m = target.m
    rows = []
    for el in elems:
        for j in range(m):
            rows.append(el.shift(j).coeffs)
    lat = ZLattice(rows, m)
    combo = lat.express(target.coeffs)
    if combo is None:
        return None
    out = []
    for i in range(len(elems)):
        coeffs = [combo[i * m + j] for j in range(m)]
        out.append(GroupRingElement(m, coeffs))
    return out


def _toggle_candidates(Q: QuadraticModule) -> list[GroupRingElement]:
    """Scalars c with conj(c) = -eps*c, used to adjust completions by c*x."""
    m = Q.m
    one = GroupRingElement.one(m)
    cands = [GroupRingElement.zero(m)]
    if Q.eps == -1:
        base = [one, -one]
        if m % 2 == 0:
            gm = GroupRingElement.gen(m, m // 2)
            base += [gm, -gm, one + gm, -(one + gm)]
        for i in range(1, (m - 1) // 2 + 1):
            sym = GroupRingElement.gen(m, i) + GroupRingElement.gen(m, (m - i) % m)
            base += [sym, -sym, one + sym]
        cands += base
    else:
        for i in range(1, m):
            anti = GroupRingElement.gen(m, i) - GroupRingElement.gen(m, (m - i) % m)
            if not anti.is_zero():
                cands += [anti, -anti]
    return cands


def _complete_pair(Q1, x, p, q):
    """Given p*x1 + q*x2 = 1, return x' with (x, x') a standard pair."""
    eps = Q1.eps
    z = RingVector([eps * q.conj(), p.conj()])
    d0 = -(z[0] * z[1].conj())
    return z + x.scaled(d0)


def rank2_vector_isometry(
    Q: QuadraticModule,
    source: RingVector,
    target: RingVector,
    *,
    max_word_len: int = 4,
    max_states: int = 20000,
) -> RingMatrix:
    """Isometry M of a rank-1 hyperbolic block with M * source = target.

    Both vectors must be primitive with equal lambda(x, x) and equal mu
    class. For isotropic vectors the isometry is built directly: each
    vector is completed to a standard hyperbolic pair, the completions'
    mu classes are aligned by shear adjustments, and M is the basis
    transport. A bounded breadth-first word search over elementary
    isometries remains as a fallback; exhausting it raises
    SearchExhausted, which is not a proof that no isometry exists.
    """
    if Q.rank != 1:
        raise DimensionMismatch("vector transport is defined on rank-1 blocks")
    Q._check_vector(source)
    Q._check_vector(target)
    if not ideal_contains_one(list(source.coords)):
        raise PreconditionFailed("source vector is not primitive")
    if not ideal_contains_one(list(target.coords)):
        raise PreconditionFailed("target vector is not primitive")
    if lambda_eval(Q, source, source) != lambda_eval(Q, target, target):
        raise PreconditionFailed("lambda(x, x) differs between source and target")
    if mu_eval(Q, source) != mu_eval(Q, target):
        raise PreconditionFailed("mu classes differ between source and target")
    if source == target:
        return RingMatrix.identity(2, Q.m)

    if lambda_eval(Q, source, source).is_zero():
        M = _constructive_transport(Q, source, target)
        if M is not None:
            return M
    M = _word_search(Q, source, target, max_word_len, max_states)
    if M is not None:
        return M
    raise SearchExhausted(
        "no isometry found within the configured word-search budget"
    )


def _constructive_transport(Q, x, y) -> Optional[RingMatrix]:
    combo_x = _express_over(list(x.coords), GroupRingElement.one(Q.m))
    combo_y = _express_over(list(y.coords), GroupRingElement.one(Q.m))
    if combo_x is None or combo_y is None:
        return None
    xp = _complete_pair(Q, x, combo_x[0], combo_x[1])
    yp = _complete_pair(Q, y, combo_y[0], combo_y[1])
    # Align the completions' mu classes by shear moves x' -> x' + c*x.
    best = None
    for cx in _toggle_candidates(Q):
        mx = mu_eval(Q, xp + x.scaled(cx))
        for cy in _toggle_candidates(Q):
            if mu_eval(Q, yp + y.scaled(cy)) == mx:
                best = (xp + x.scaled(cx), yp + y.scaled(cy))
                break
        if best:
            break
    if best is None:
        return None
    xp, yp = best
    Bx = RingMatrix.from_columns([x, xp])
    By = RingMatrix.from_columns([y, yp])
    try:
        M = By * Bx.inverse()
    except PreconditionFailed:
        return None
    if M * x == y and isometry_check(Q, M):
        return M
    return None


def _shear_generators(Q: QuadraticModule) -> list[RingMatrix]:
    gens = []
    for c in _toggle_candidates(Q):
        if c.is_zero():
            continue
        if not param_reduce(c, Q.kind).is_zero():
            continue
        for base in (("e1", "f1"), ("f1", "e1")):
            try:
                gens.append(transvection(Q, base, c))
            except PreconditionFailed:
                continue
    # unit scalings
    for k in range(Q.m):
        for sign in (1, -1):
            u = sign * GroupRingElement.gen(Q.m, k)
            if u == GroupRingElement.one(Q.m):
                continue
            gens.append(
                RingMatrix(
                    [
                        [u, GroupRingElement.zero(Q.m)],
                        [GroupRingElement.zero(Q.m), u],
                    ]
                )
            )
    return gens


def _word_search(Q, x, y, max_word_len, max_states) -> Optional[RingMatrix]:
    gens = _shear_generators(Q)
    start = (x[0].coeffs, x[1].coeffs)
    goal = (y[0].coeffs, y[1].coeffs)
    frontier = [(x, RingMatrix.identity(2, Q.m))]
    seen = {start}
    for _ in range(max_word_len):
        nxt = []
        for vec, mat in frontier:
            for g in gens:
                w = g * vec
                key = (w[0].coeffs, w[1].coeffs)
                if key in seen:
                    continue
                seen.add(key)
                gm = g * mat
                if key == goal:
                    return gm
                nxt.append((w, gm))
                if len(seen) > max_states:
                    return None
        frontier = nxt
        if not frontier:
            break
    return None


def _pull_back(U_std, inverses) -> tuple[RingVector, ...]:
    out = []
    for w in U_std:
        v = w
        for inv in inverses:
            v = inv * v
        out.append(v)
    return tuple(out)


def _standard_complement(Q, a_int: int) -> tuple[RingVector, RingVector]:
    a_el = GroupRingElement.integer(Q.m, a_int)
    w1 = Q.vector({"e2": -a_el, "f1": GroupRingElement.one(Q.m)})
    w2 = Q.vector({"e1": -a_el, "f2": GroupRingElement.one(Q.m)})
    return w1, w2


def solve_odd_m(spec: EmbeddingSpec) -> SolverTrace:
    """Lagrangian complement for the odd-modulus skew branch."""
    if spec.branch is not Branch.ODD_M_SKEW:
        raise PreconditionFailed("spec branch is not odd-m")
    Q, v1, v2 = spec.validate()
    m = spec.m
    s = GroupRingElement.norm(m)
    try:
        norm = ideal_normalize([spec.a2, spec.b2])
    except PreconditionFailed as exc:
        raise NormalizationFailed(str(exc)) from exc
    alpha = exact_divide(spec.a2, norm.u).quotient
    beta = exact_divide(spec.b2, norm.u).quotient
    v_t, a_t, b_t = norm.positive_variant()
    Q1 = _block_module(Q)
    x = RingVector([alpha, beta])
    y = RingVector([v_t, s])
    M2 = rank2_vector_isometry(Q1, x, y)
    Phi = _embed_block(Q, M2, (1, 3))
    v2n = Phi * v2
    w1, w2 = _standard_complement(Q, a_t)
    Phi_inv = _embed_block(Q, M2.inverse(), (1, 3))
    U = _pull_back([w1, w2], [Phi_inv])
    cert = verify_lagrangian_complement(Q, (v1, v2), U)
    return SolverTrace(
        branch=spec.branch,
        steps=(TraceStep("vector-transport", "ambient", Phi),),
        norm=norm,
        h=None,
        normalized_S=(v1, v2n),
        U=U,
        certificate=cert,
    )


def solve_even_m(spec: EmbeddingSpec) -> SolverTrace:
    """Lagrangian complement for the even-modulus skew branch."""
    if spec.branch is not Branch.EVEN_M_SKEW:
        raise PreconditionFailed("spec branch is not even-m")
    Q, v1, v2 = spec.validate()
    m = spec.m
    half = m // 2
    s = GroupRingElement.norm(m)
    g_half = GroupRingElement.gen(m, half)
    steps = []

    # Ensure the mu class of v2 is [g^half]; a basis change v2 -> v1 + v2
    # shifts the class by [lambda(v1, v2)] = [s] = [g^half].
    target_class = param_reduce(g_half, Q.kind)
    if mu_eval(Q, v2) != target_class:
        one = GroupRingElement.one(m)
        zero = GroupRingElement.zero(m)
        B = RingMatrix([[one, one], [zero, one]])
        steps.append(TraceStep("mix-v1-into-v2", "basis", B))
        v2 = v1 + v2
        if mu_eval(Q, v2) != target_class:
            raise ParityObstruction("mu class of v2 cannot be normalized")

    a1_cur, a2_cur, b2_cur = v2[0], v2[1], v2[3]
    combo = _express_over([a2_cur, s, b2_cur], -a1_cur)
    if combo is None:
        raise NormalizationFailed("coefficient equation has no solution")
    r_el, _k_el, t_el = combo
    T = transvection(Q, ("e2", "f1"), t_el)
    steps.append(TraceStep("shear-T", "ambient", T))
    v2 = T * v2
    R = transvection(Q, ("e1", "f2"), r_el)
    steps.append(TraceStep("shear-R", "ambient", R))
    v2 = R * v2

    head = v2[0]
    if any(c != head.coeffs[0] for c in head.coeffs):
        raise NormalizationFailed("e1 coefficient did not reduce to a norm multiple")
    h = head.coeffs[0]
    a2_cur, b2_cur = v2[1], v2[3]
    try:
        norm = ideal_normalize([a2_cur, b2_cur])
    except PreconditionFailed as exc:
        raise NormalizationFailed(str(exc)) from exc
    alpha = exact_divide(a2_cur, norm.u).quotient
    beta = exact_divide(b2_cur, norm.u).quotient
    if param_reduce(alpha * beta.conj(), Q.kind) != target_class:
        raise ParityObstruction(
            "reduced coefficient product has even middle coefficient"
        )
    v_t, a_t, b_t = norm.positive_variant(parity=1)
    Q1 = _block_module(Q)
    x = RingVector([alpha, beta])
    y = RingVector([v_t, s])
    M2 = rank2_vector_isometry(Q1, x, y)
    Phi = _embed_block(Q, M2, (1, 3))
    steps.append(TraceStep("vector-transport", "ambient", Phi))
    v2n = Phi * v2
    w1, w2 = _standard_complement(Q, a_t)
    inverses = [
        _embed_block(Q, M2.inverse(), (1, 3)),
        transvection(Q, ("e1", "f2"), -r_el),
        transvection(Q, ("e2", "f1"), -t_el),
    ]
    U = _pull_back([w1, w2], inverses)
    v1_in, v2_in = spec.vectors()
    cert = verify_lagrangian_complement(Q, (v1_in, v2_in), U)
    return SolverTrace(
        branch=spec.branch,
        steps=tuple(steps),
        norm=norm,
        h=h,
        normalized_S=(v1, v2n),
        U=U,
        certificate=cert,
    )


def solve_even_n(spec: EmbeddingSpec) -> SolverTrace:
    """Lagrangian complement for the symmetric branch."""
    if spec.branch is not Branch.EVEN_N_SYM:
        raise PreconditionFailed("spec branch is not even-n")
    Q, v1, v2 = spec.validate()
    m = spec.m
    one = GroupRingElement.one(m)
    zero = GroupRingElement.zero(m)
    steps = []
    inverses = []

    if v2[1].aug() == 0:
        swap = RingMatrix(
            [
                [one, zero, zero, zero],
                [zero, zero, zero, one],
                [zero, zero, one, zero],
                [zero, one, zero, zero],
            ]
        )
        steps.append(TraceStep("swap-e2-f2", "ambient", swap))
        inverses.append(swap)
        v2 = swap * v2
    if v2[1].aug() == -1:
        neg = RingMatrix(
            [
                [one, zero, zero, zero],
                [zero, -one, zero, zero],
                [zero, zero, one, zero],
                [zero, zero, zero, -one],
            ]
        )
        steps.append(TraceStep("negate-block-2", "ambient", neg))
        inverses.append(neg)
        v2 = neg * v2
    if v2[1].aug() != 1:
        raise AugmentationObstruction(
            "coefficient augmentation cannot be normalized to 1"
        )

    c = spec.f1_coefficient
    a = exact_divide(v2[1] - one, c).quotient
    w1 = Q.vector({"e2": a, "f1": one})
    w2 = Q.vector({"e1": -a.conj(), "f2": one})
    inverses.reverse()
    U = _pull_back([w1, w2], inverses)
    v1_in, v2_in = spec.vectors()
    cert = verify_lagrangian_complement(Q, (v1_in, v2_in), U)
    return SolverTrace(
        branch=spec.branch,
        steps=tuple(steps),
        norm=None,
        h=None,
        normalized_S=(v1, v2),
        U=U,
        certificate=cert,
    )


_SOLVERS = {
    Branch.ODD_M_SKEW: solve_odd_m,
    Branch.EVEN_M_SKEW: solve_even_m,
    Branch.EVEN_N_SYM: solve_even_n,
}


def solve(spec: EmbeddingSpec) -> SolverTrace:
    return _SOLVERS[spec.branch](spec)


def _random_element(rng: random.Random, m: int, lo: int = -2, hi: int = 2) -> GroupRingElement:
    return GroupRingElement(m, [rng.randint(lo, hi) for _ in range(m)])


def _skew_kernel_sample(rng: random.Random, a2: GroupRingElement) -> GroupRingElement:
    """Random b2 with a2 * conj(b2) symmetric, from the integer kernel."""
    m = a2.m
    rows = []
    for j in range(m):
        gj = GroupRingElement.gen(m, j)
        img = a2 * gj.conj() - a2.conj() * gj
        rows.append(img.coeffs)
    ker = ZLattice(rows, m).kernel()
    if not ker:
        return GroupRingElement.zero(m)
    combo = [rng.randint(-2, 2) for _ in ker]
    coeffs = [0] * m
    for c, row in zip(combo, ker):
        for i in range(m):
            coeffs[i] += c * row[i]
    return GroupRingElement(m, coeffs)


def _random_symmetric(rng: random.Random, m: int) -> GroupRingElement:
    t = _random_element(rng, m, -1, 1)
    k = GroupRingElement.integer(m, rng.randint(-1, 1))
    return t + t.conj() + k


def _skew_pair_sample(
    rng: random.Random, m: int
) -> tuple[GroupRingElement, GroupRingElement]:
    """Unimodular (w1, w2) with w1 * conj(w2) symmetric, built by column ops.

    Starting from (1, c) with c symmetric, each op below preserves both
    unimodularity and the symmetry of w1 * conj(w2): shears by symmetric
    parameters, the swap (w1, w2) -> (w2, -w1), and scaling both entries
    by a trivial unit.
    """
    w1 = GroupRingElement.one(m)
    w2 = _random_symmetric(rng, m)
    for _ in range(rng.randrange(1, 4)):
        op = rng.randrange(4)
        if op == 0:
            w2 = w2 + _random_symmetric(rng, m) * w1
        elif op == 1:
            w1 = w1 + _random_symmetric(rng, m) * w2
        elif op == 2:
            w1, w2 = w2, -w1
        else:
            t = GroupRingElement.gen(m, rng.randrange(m))
            if rng.randrange(2):
                t = -t
            w1, w2 = t * w1, t * w2
    return w1, w2


def sample_spec(branch: Branch, m: int, rng: random.Random) -> EmbeddingSpec:
    """Random valid EmbeddingSpec for the branch.

    Skew branches mix a constructive generator (high acceptance, covers
    nontrivial ideal factors u) with a fully random rejection arm.
    """
    s = GroupRingElement.norm(m)
    one = GroupRingElement.one(m)
    g = GroupRingElement.gen(m)
    for attempt in range(500):
        if branch is Branch.EVEN_N_SYM:
            w1 = _random_element(rng, m)
            w2 = _random_element(rng, m)
            a2 = one + (one - g) * w1
            b2 = (one - g) * w2
            style = rng.randrange(4)
            if style & 1:
                a2 = -a2
            if style & 2:
                a2, b2 = b2, a2
            a1 = _random_element(rng, m)
            spec = EmbeddingSpec(m, branch, a1, a2, b2)
        elif rng.randrange(4) == 0:
            # fully random arm, kept for input diversity
            a2 = _random_element(rng, m)
            if a2.is_zero():
                continue
            b2 = _skew_kernel_sample(rng, a2)
            if not ideal_contains_one([a2, s, b2]):
                continue
            a1 = _random_element(rng, m)
            spec = EmbeddingSpec(m, branch, a1, a2, b2)
        else:
            w1, w2 = _skew_pair_sample(rng, m)
            ls = [l for l in range(1, m) if math.gcd(l, m) == 1]
            u = GroupRingElement.geometric(m, rng.choice(ls))
            a1 = _random_element(rng, m)
            spec = EmbeddingSpec(m, branch, a1, u * w1, u * w2)
        try:
            spec.validate()
        except (PreconditionFailed, AugmentationObstruction):
            continue
        return spec
    raise PreconditionFailed(f"could not sample a valid spec for m={m}")


@dataclass(frozen=True)
class SweepReport:
    branch: Branch
    m: int
    count: int
    seed: int
    solved: int
    exhausted: int
    failures: tuple[str, ...]
    elapsed_s: float

    def to_json(self) -> dict:
        return {
            "branch": self.branch.value,
            "m": self.m,
            "count": self.count,
            "seed": self.seed,
            "solved": self.solved,
            "exhausted": self.exhausted,
            "failures": list(self.failures),
            "elapsedSeconds": round(self.elapsed_s, 3),
        }


def run_sweep(branch: Branch, m: int, count: int, seed: int) -> SweepReport:
    """Solve `count` random specs; certificates are verified inside solve."""
    rng = random.Random(seed)
    solved = 0
    exhausted = 0
    failures = []
    t0 = time.perf_counter()
    for i in range(count):
        spec = sample_spec(branch, m, rng)
        try:
            trace = solve(spec)
        except SearchExhausted:
            exhausted += 1
            continue
        except Exception as exc:  # noqa: BLE001 - report, do not mask
            failures.append(f"{type(exc).__name__}: {exc} on {spec.to_json()}")
            continue
        if not trace.replay():
            failures.append(f"trace replay mismatch on {spec.to_json()}")
            continue
        solved += 1
    return SweepReport(
        branch=branch,
        m=m,
        count=count,
        seed=seed,
        solved=solved,
        exhausted=exhausted,
        failures=tuple(failures),
        elapsed_s=time.perf_counter() - t0,
    )
