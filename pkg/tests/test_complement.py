import random

import pytest

from cyclact.complement import (
    Branch,
    EmbeddingSpec,
    rank2_vector_isometry,
    run_sweep,
    sample_spec,
    solve,
    solve_even_m,
    solve_even_n,
    solve_odd_m,
)
from cyclact.errors import (
    AugmentationObstruction,
    PreconditionFailed,
)
from cyclact.forms import (
    QuadraticModule,
    RingVector,
    isometry_check,
)
from cyclact.groupring import FormParameterKind, GroupRingElement


def el(m, *coeffs):
    c = list(coeffs) + [0] * (m - len(coeffs))
    return GroupRingElement(m, c)


def coords(v):
    return tuple(c.coeffs for c in v.coords)


def spec_of(m, branch, a1, a2, b2):
    return EmbeddingSpec(m, branch, el(m, *a1), el(m, *a2), el(m, *b2))


def test_odd_branch_trivial_spec_gives_the_standard_complement():
    spec = spec_of(5, Branch.ODD_M_SKEW, [0], [1], [0])
    trace = solve_odd_m(spec)
    assert [s.name for s in trace.steps] == ["vector-transport"]
    assert trace.norm.l == 1
    assert trace.norm.a * 5 - trace.norm.b * 1 == 1
    assert coords(trace.U[0]) == (
        (0,) * 5, (0,) * 5, (1, 0, 0, 0, 0), (0,) * 5,
    )
    assert coords(trace.U[1]) == (
        (0,) * 5, (0,) * 5, (0,) * 5, (1, 0, 0, 0, 0),
    )
    assert trace.replay()


def test_odd_branch_nontrivial_spec():
    spec = spec_of(3, Branch.ODD_M_SKEW, [0, 1], [1, 1], [0, 0, 1])
    trace = solve_odd_m(spec)
    assert coords(trace.U[0]) == ((0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0))
    assert coords(trace.U[1]) == ((0, 0, 0), (0, 0, -1), (0, 0, 0), (0, 0, 0))
    assert trace.replay()
    cert = trace.certificate
    assert all(x.is_zero() for row in cert.gram_evidence for x in row)


def test_odd_branch_preconditions():
    with pytest.raises(PreconditionFailed):
        solve_odd_m(spec_of(5, Branch.ODD_M_SKEW, [1], [0], [0])).replay()
    with pytest.raises(PreconditionFailed):
        solve_odd_m(spec_of(4, Branch.ODD_M_SKEW, [0], [1], [0]))


def test_even_m_branch_small_modulus():
    spec = spec_of(2, Branch.EVEN_M_SKEW, [0], [1], [0, 1])
    trace = solve_even_m(spec)
    assert [s.name for s in trace.steps] == [
        "shear-T", "shear-R", "vector-transport",
    ]
    assert trace.h == 0
    assert coords(trace.U[0]) == ((0, 0), (0, 0), (1, 0), (0, 0))
    assert coords(trace.U[1]) == ((0, 0), (0, -1), (0, 0), (0, 0))
    assert trace.replay()


def test_even_m_branch_with_basis_mixing():
    # mu of v2 lands in the nonzero class, so v1 is mixed into v2 first
    spec = EmbeddingSpec(
        4, Branch.EVEN_M_SKEW, GroupRingElement.norm(4), el(4, 1), el(4, 0)
    )
    trace = solve_even_m(spec)
    assert [s.name for s in trace.steps] == [
        "mix-v1-into-v2", "shear-T", "shear-R", "vector-transport",
    ]
    assert trace.steps[0].kind == "basis"
    assert trace.h == 1
    assert coords(trace.U[0]) == (
        (0, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0), (-1, 0, 0, 0),
    )
    assert coords(trace.U[1]) == (
        (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0),
    )
    assert trace.replay()


def test_even_m_branch_rejects_odd_modulus():
    with pytest.raises(PreconditionFailed):
        solve_even_m(spec_of(3, Branch.EVEN_M_SKEW, [0], [1], [0]))


def test_even_n_branch_trivial_spec():
    spec = spec_of(3, Branch.EVEN_N_SYM, [0], [1], [0])
    trace = solve_even_n(spec)
    assert trace.steps == ()
    assert coords(trace.U[0]) == ((0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0))
    assert coords(trace.U[1]) == ((0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0))
    assert trace.replay()


def test_even_n_branch_nontrivial_spec():
    spec = spec_of(3, Branch.EVEN_N_SYM, [1], [2, -1], [1, -1])
    trace = solve_even_n(spec)
    # U completes to a complement; the exact connecting coefficient is a
    # choice modulo the annihilator of 1-g, so only structure is pinned
    assert trace.U[0].coords[2] == el(3, 1)
    assert trace.U[0].coords[3].is_zero()
    assert trace.U[1].coords[2].is_zero()
    assert trace.U[1].coords[3] == el(3, 1)
    assert trace.replay()


def test_even_n_branch_augmentation_obstruction():
    spec = spec_of(4, Branch.EVEN_N_SYM, [0], [1, -1], [0])
    with pytest.raises(AugmentationObstruction):
        solve_even_n(spec)


def test_solve_dispatches_on_branch():
    spec = spec_of(5, Branch.ODD_M_SKEW, [0], [1], [0])
    assert solve(spec).branch is Branch.ODD_M_SKEW
    spec = spec_of(3, Branch.EVEN_N_SYM, [0], [1], [0])
    assert solve(spec).branch is Branch.EVEN_N_SYM


def test_certificates_hold_for_all_branch_examples():
    cases = [
        spec_of(5, Branch.ODD_M_SKEW, [0], [1], [0]),
        spec_of(3, Branch.ODD_M_SKEW, [0, 1], [1, 1], [0, 0, 1]),
        spec_of(2, Branch.EVEN_M_SKEW, [0], [1], [0, 1]),
        spec_of(3, Branch.EVEN_N_SYM, [1], [2, -1], [1, -1]),
    ]
    for spec in cases:
        trace = solve(spec)
        Q = spec.module()
        v1, v2 = spec.vectors()
        assert trace.certificate.S == (v1, v2)
        # the certified determinant witnesses S + U spanning everything
        det, dinv = trace.certificate.det_evidence
        assert det * dinv == GroupRingElement.one(spec.m)


def test_rank2_vector_isometry_identity_and_shear():
    m = 4
    Q = QuadraticModule(m, 1, -1, FormParameterKind.TILDE)
    x = RingVector([el(m, 1), el(m, 0)])
    assert rank2_vector_isometry(Q, x, x).rows[0][0] == el(m, 1)
    y = RingVector([el(m, 1), el(m, 0, 1, 0, 1)])
    M = rank2_vector_isometry(Q, x, y)
    assert M * x == y
    assert isometry_check(Q, M)


def test_rank2_vector_isometry_rejects_invariant_mismatches():
    m = 4
    Q = QuadraticModule(m, 1, -1, FormParameterKind.TILDE)
    x = RingVector([el(m, 1), el(m, 0)])
    with pytest.raises(PreconditionFailed):
        rank2_vector_isometry(Q, x, RingVector([el(m, 1), el(m, 0, 0, 1)]))
    with pytest.raises(PreconditionFailed):
        rank2_vector_isometry(Q, x, RingVector([el(m, 1), el(m, 0, 1)]))
    with pytest.raises(PreconditionFailed):
        rank2_vector_isometry(Q, RingVector([el(m, 2), el(m, 0)]), x)


def test_rank2_vector_isometry_generic_transport():
    rng = random.Random(99)
    m = 5
    Q = QuadraticModule(m, 1, -1, FormParameterKind.TILDE)
    x = RingVector([el(m, 1), el(m, 0)])
    for _ in range(10):
        k = rng.randrange(m)
        u = GroupRingElement.gen(m, k)
        y = RingVector([u, el(m, 0)])
        M = rank2_vector_isometry(Q, x, y)
        assert M * x == y
        assert isometry_check(Q, M)


def test_embedding_spec_json_roundtrip():
    spec = spec_of(3, Branch.ODD_M_SKEW, [0, 1], [1, 1], [0, 0, 1])
    assert EmbeddingSpec.from_json(spec.to_json()) == spec
    bare = {"m": 3, "branch": "odd-m", "a1": [0, 1, 0], "a2": [1, 1, 0], "b2": [0, 0, 1]}
    assert EmbeddingSpec.from_json(bare) == spec


def test_trace_json_has_the_declared_sections():
    spec = spec_of(2, Branch.EVEN_M_SKEW, [0], [1], [0, 1])
    payload = solve(spec).to_json()
    assert set(payload) == {
        "branch", "steps", "normData", "h", "normalizedS", "U", "certificate",
    }
    assert payload["branch"] == "even-m"
    assert all(set(s) == {"name", "kind", "matrix"} for s in payload["steps"])


def test_sampled_specs_always_validate():
    rng = random.Random(7)
    plans = [
        (Branch.ODD_M_SKEW, 5),
        (Branch.ODD_M_SKEW, 9),
        (Branch.EVEN_M_SKEW, 4),
        (Branch.EVEN_N_SYM, 4),
    ]
    for branch, m in plans:
        for _ in range(25):
            spec = sample_spec(branch, m, rng)
            spec.validate()


def test_run_sweep_solves_everything_and_is_deterministic():
    r1 = run_sweep(Branch.ODD_M_SKEW, 5, 25, seed=11)
    assert r1.solved == 25
    assert r1.failures == ()
    assert r1.exhausted == 0
    r2 = run_sweep(Branch.ODD_M_SKEW, 5, 25, seed=11)
    j1, j2 = r1.to_json(), r2.to_json()
    j1.pop("elapsedSeconds"), j2.pop("elapsedSeconds")
    assert j1 == j2
    r3 = run_sweep(Branch.EVEN_M_SKEW, 6, 15, seed=3)
    assert r3.solved == 15 and r3.failures == ()
    r4 = run_sweep(Branch.EVEN_N_SYM, 3, 15, seed=3)
    assert r4.solved == 15 and r4.failures == ()
