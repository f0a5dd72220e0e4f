"""Derivation spaces, named derivations, and the HH1 presentation."""

import itertools

import numpy as np
import pytest

from hh1lie import algebras as alg
from hh1lie import hochschild as hoch
from hh1lie.errors import AlgebraMismatch
from hh1lie.gfp import Subspace


def basis_vec(dim, i):
    v = np.zeros(dim, dtype=np.int64)
    v[i] = 1
    return v


def vecs(ders):
    return np.vstack([f.vec() for f in ders])


# -- derivation spaces ------------------------------------------------------------


def test_der_dimension_truncated_one_variable_by_enumeration():
    # oracle: enumerate all 3^9 linear maps on k[x]/(x^3) and count those
    # satisfying Leibniz on every basis pair; expect 3^3 = 27 maps = dim 3
    a = alg.truncated_polynomial(3, (1,))
    count = 0
    for entries in itertools.product(range(3), repeat=9):
        m = np.array(entries, dtype=np.int64).reshape(3, 3)
        d = hoch.Derivation(a, m)
        if d.is_derivation():
            count += 1
    assert count == 3**3
    assert len(hoch.derivation_space(a)) == 3


def test_der_dimension_split_semisimple_zero():
    for m in (1, 2, 3):
        a = alg.split_semisimple(3, m)
        assert len(hoch.derivation_space(a)) == 0


def test_der_dimension_b2_matches_witt2():
    a = alg.truncated_polynomial(3, (1, 1))
    assert len(hoch.derivation_space(a)) == 2 * 3**2


def test_dense_and_generator_solvers_agree_exactly():
    cases = [
        alg.truncated_polynomial(3, (1,)),
        alg.truncated_polynomial(3, (2,)),
        alg.truncated_polynomial(3, (1, 1)),
        alg.smash_product(3, 1, 1)[0],
        alg.smash_product(3, 2, 1)[0],
        alg.smash_product(3, 1, 2)[0],
        alg.u0_borel(3, 1),
    ]
    for a in cases:
        dense = vecs(hoch.derivation_space(a, method="dense"))
        gen = vecs(hoch.derivation_space(a, method="generator"))
        assert np.array_equal(dense, gen), a.name


def test_every_solved_derivation_satisfies_leibniz():
    for a in (alg.smash_product(3, 2, 1)[0], alg.u0_borel(3, 1)):
        for f in hoch.derivation_space(a):
            assert f.is_derivation()


def test_inner_derivation_dimensions():
    a = alg.truncated_polynomial(3, (1, 1))
    assert len(hoch.inner_derivations(a)) == 0
    sm, _ = alg.smash_product(3, 2, 1)
    assert len(hoch.inner_derivations(sm)) == 27 - 3
    te = alg.trivial_extension(alg.quiver_algebra(alg.kronecker_quiver(), 3))
    assert len(hoch.inner_derivations(te)) == te.dim - alg.center(te).dim


def test_ider_is_ideal_in_der():
    sm, _ = alg.smash_product(3, 1, 1)
    ders = hoch.derivation_space(sm)
    iders = hoch.inner_derivations(sm)
    isub = Subspace.from_vectors(vecs(iders), 3, sm.dim**2)
    for f in ders:
        for g in iders:
            assert isub.contains_vector(hoch.bracket(f, g).vec())


def test_bracket_of_f_with_f_is_zero():
    sm, _ = alg.smash_product(3, 1, 1)
    for f in hoch.derivation_space(sm):
        assert not hoch.bracket(f, f).matrix.any()


def test_bracket_rejects_mixed_algebras():
    a1 = alg.truncated_polynomial(3, (1,))
    a2 = alg.truncated_polynomial(3, (1,))
    f = hoch.derivation_space(a1)[0]
    g = hoch.derivation_space(a2)[0]
    with pytest.raises(AlgebraMismatch):
        hoch.bracket(f, g)


def test_bracket_and_ppower_preserve_leibniz_seeded():
    rng = np.random.default_rng(0)
    sm, _ = alg.smash_product(3, 2, 1)
    ders = hoch.derivation_space(sm)
    dmat = np.stack([f.matrix for f in ders])
    for _ in range(100):
        f = hoch.Derivation(sm, np.tensordot(rng.integers(0, 3, len(ders)), dmat, (0, 0)) % 3)
        g = hoch.Derivation(sm, np.tensordot(rng.integers(0, 3, len(ders)), dmat, (0, 0)) % 3)
        assert hoch.bracket(f, g).is_derivation()
        assert hoch.p_power(f).is_derivation()


def test_bracket_with_inner_is_inner_of_image():
    rng = np.random.default_rng(1)
    sm, _ = alg.smash_product(3, 2, 1)
    ders = hoch.derivation_space(sm)
    dmat = np.stack([f.matrix for f in ders])
    for _ in range(100):
        f = hoch.Derivation(sm, np.tensordot(rng.integers(0, 3, len(ders)), dmat, (0, 0)) % 3)
        a_vec = rng.integers(0, 3, sm.dim)
        ad_a = hoch.Derivation(
            sm, (sm.left_mult_matrix(a_vec) - sm.right_mult_matrix(a_vec)) % 3
        )
        fa = f(a_vec)
        ad_fa = (sm.left_mult_matrix(fa) - sm.right_mult_matrix(fa)) % 3
        assert np.array_equal(hoch.bracket(f, ad_a).matrix, ad_fa)


# -- named derivations ---------------------------------------------------------------


def test_named_inner_matches_ad():
    sm, desc = alg.smash_product(3, 2, 1)
    for lam in range(3):
        for j in range(9):
            d = hoch.named_inner(desc, lam, j, sm)
            v = basis_vec(sm.dim, desc.index(lam, j))
            ad = (sm.left_mult_matrix(v) - sm.right_mult_matrix(v)) % 3
            assert np.array_equal(d.matrix, ad)


def test_named_inner_value_on_x():
    sm, desc = alg.smash_product(3, 1, 1)
    d = hoch.named_inner(desc, 0, 1, sm)
    # d_(0,1)(x) = (u_0 - u_1) x^2
    want = basis_vec(9, desc.index(0, 2)) - basis_vec(9, desc.index(1, 2))
    assert np.array_equal(d(desc.x_vector()), want % 3)
    d_top = hoch.named_inner(desc, 0, 2, sm)
    assert not d_top(desc.x_vector()).any()  # j = p^n - 1


def test_named_inner_kills_idempotents_when_pr_divides_j():
    sm, desc = alg.smash_product(3, 2, 1)
    for lam in range(3):
        for j in (0, 3, 6):
            d = hoch.named_inner(desc, lam, j, sm)
            for mu in range(3):
                assert not d(basis_vec(sm.dim, desc.index(mu, 0))).any()


def test_named_inner_index_errors():
    _, desc = alg.smash_product(3, 1, 1)
    with pytest.raises(IndexError):
        hoch.named_inner(desc, 0, 3)
    with pytest.raises(IndexError):
        hoch.named_outer(desc, 0, 1)  # 1*3 + 1 = 4 > 2


def test_named_outer_values():
    sm, desc = alg.smash_product(3, 2, 1)
    g = hoch.named_outer(desc, 0, 0, sm)
    assert np.array_equal(g(desc.x_vector()), basis_vec(sm.dim, desc.index(0, 1)))
    for mu in range(3):
        assert not g(basis_vec(sm.dim, desc.index(mu, 0))).any()
    g1 = hoch.named_outer(desc, 0, 1, sm)
    assert np.array_equal(g1(desc.x_vector()), basis_vec(sm.dim, desc.index(0, 4)))


def test_named_outer_kills_x_power_pn():
    # applying the derivation along x, x^2, ... the top power maps to zero;
    # equivalent to the telescoping-orthogonality argument
    sm, desc = alg.smash_product(3, 2, 1)
    g = hoch.named_outer(desc, 0, 0, sm)
    x = desc.x_vector()
    # g(x^9) = sum_k x^(k-1) g(x) x^(9-k) computed term by term must vanish
    terms = []
    left = sm.unit.copy()
    for k in range(1, 10):
        right = sm.unit.copy()
        for _ in range(9 - k):
            right = sm.mul_vec(right, x)
        terms.append(sm.mul_vec(sm.mul_vec(left, g(x)), right))
        left = sm.mul_vec(left, x)
    assert not (sum(terms) % 3).any()


def test_named_outer_all_leibniz_at_criterion_params():
    for p, n, r in [(3, 1, 1), (3, 2, 1), (3, 1, 2)]:
        sm, desc = alg.smash_product(p, n, r)
        for lam in range(desc.n_chars):
            for j in desc.outer_exponents():
                g = hoch.named_outer(desc, lam, j, sm)
                assert g.is_derivation()


# -- complement and hh1 -----------------------------------------------------------------


def test_verify_complement_dimensions():
    rep = hoch.verify_complement(alg.smash_product(3, 2, 1)[1])
    assert rep["ok"]
    assert rep["h_size"] == 3
    assert rep["dim_der"] == 24 + 3
    rep = hoch.verify_complement(alg.smash_product(3, 1, 1)[1])
    assert rep["ok"]
    assert rep["h_size"] == 1
    assert rep["dim_der"] == 8 + 1


def test_shifted_outer_differences_are_inner():
    sm, desc = alg.smash_product(3, 2, 1)
    iders = hoch.inner_derivations(sm)
    isub = Subspace.from_vectors(vecs(iders), 3, sm.dim**2)
    for j in desc.outer_exponents():
        g0 = hoch.named_outer(desc, 0, j, sm)
        for i in range(1, desc.n_chars):
            gi = hoch.named_outer(desc, i, j, sm)
            assert isub.contains_vector((g0.vec() - gi.vec()) % 3)


def test_hh1_dimensions():
    assert hoch.hh1(alg.smash_product(3, 2, 1)[0]).dim == 3
    assert hoch.hh1(alg.smash_product(3, 1, 2)[0]).dim == 1
    assert hoch.hh1(alg.split_semisimple(3, 2)).dim == 0
    assert hoch.hh1(alg.split_semisimple(3, 3)).dim == 0


def test_hh1_commutative_has_all_classes_outer():
    a = alg.truncated_polynomial(3, (1, 1))
    h = hoch.hh1(a)
    assert h.dim_ider == 0
    assert h.dim == h.dim_der


def test_hh1_bracket_table_smash_321():
    h = hoch.hh1(alg.smash_product(3, 2, 1)[0])
    # [g_(0,i), g_(0,j)] = (j - i) g_(0,i+j), zero once i+j is out of range
    for i in range(3):
        for j in range(3):
            want = np.zeros(3, dtype=np.int64)
            if i + j < 3:
                want[i + j] = (j - i) % 3
            assert np.array_equal(h.bracket_table[i, j], want)
    assert np.array_equal(h.bracket_table[0, 1], [0, 1, 0])


def test_hh1_pmap_table_smash_321():
    h = hoch.hh1(alg.smash_product(3, 2, 1)[0])
    assert np.array_equal(h.pmap_table[0], [1, 0, 0])
    assert not h.pmap_table[1].any()
    assert not h.pmap_table[2].any()


BRACKET_LAW_GRID = [
    (3, 1, 1),
    (3, 2, 1),
    (3, 3, 1),
    (3, 1, 2),
    (3, 2, 2),
    (3, 3, 2),
    (5, 1, 1),
    (5, 2, 1),
    (5, 1, 2),
]


@pytest.mark.parametrize("p,n,r", BRACKET_LAW_GRID)
def test_bracket_law_as_operator_identity(p, n, r):
    # [g_(0,i), g_(0,j)] and (j-i) g_(0,i+j) agree on every idempotent and
    # on x, and both are derivations, so they are equal as matrices; the
    # product is zero once (i+j) p^r + 1 leaves the exponent range
    sm, desc = alg.smash_product(p, n, r)
    exps = desc.outer_exponents()
    gs = {j: hoch.named_outer(desc, 0, j, sm) for j in exps}
    d = sm.dim
    for i in exps:
        for j in exps:
            br = hoch.bracket(gs[i], gs[j]).matrix
            if i + j in gs:
                want = (j - i) % p * gs[i + j].matrix % p
            else:
                want = np.zeros((d, d), dtype=np.int64)
            assert np.array_equal(br, want), (p, n, r, i, j)


@pytest.mark.parametrize("p,n,r", [(3, 3, 1), (3, 2, 2)])
def test_hh1_tables_on_larger_grid(p, n, r):
    h = hoch.hh1(alg.smash_product(p, n, r)[0])
    hdim = h.dim
    assert hdim == (p ** (n - r) if n >= r else 1)
    for i in range(hdim):
        for j in range(hdim):
            want = np.zeros(hdim, dtype=np.int64)
            if i + j < hdim:
                want[i + j] = (j - i) % p
            assert np.array_equal(h.bracket_table[i, j], want)
    want_p = np.zeros((hdim, hdim), dtype=np.int64)
    want_p[0, 0] = 1
    assert np.array_equal(h.pmap_table, want_p)


def test_ppower_of_named_outer_classes():
    sm, desc = alg.smash_product(3, 2, 1)
    h = hoch.hh1(sm)
    g0 = hoch.named_outer(desc, 0, 0, sm)
    assert np.array_equal(h.project(hoch.p_power(g0)), h.project(g0))
    for j in (1, 2):
        gj = hoch.named_outer(desc, 0, j, sm)
        assert not h.project(hoch.p_power(gj)).any()


def test_ppower_of_inner_is_inner():
    sm, _ = alg.smash_product(3, 1, 1)
    h = hoch.hh1(sm)
    for f in h.ider_basis:
        assert not h.project(hoch.p_power(f)).any()


def test_hh1_representative_independence_seeded():
    rng = np.random.default_rng(42)
    sm, _ = alg.smash_product(3, 2, 1)
    h = hoch.hh1(sm)
    ider_flat = np.vstack([f.vec() for f in h.ider_basis])
    for _ in range(100):
        coeffs = rng.integers(0, 3, size=(h.dim, h.dim_ider))
        shifts = (coeffs @ ider_flat % 3).reshape(h.dim, sm.dim, sm.dim)
        reps = [
            hoch.Derivation(sm, (f.matrix + s) % 3)
            for f, s in zip(h.complement_basis, shifts)
        ]
        btab, ptab = h._tables(reps)
        assert np.array_equal(btab, h.bracket_table)
        assert np.array_equal(ptab, h.pmap_table)


def test_hh1_report_dict_shape():
    h = hoch.hh1(alg.smash_product(3, 2, 1)[0])
    rep = h.to_report_dict()
    assert rep["dim_der"] == 27 and rep["dim_ider"] == 24 and rep["dim_hh1"] == 3
    assert rep["complement_labels"] == ["g[0,0]", "g[0,1]", "g[0,2]"]
    assert len(rep["bracket_table"]) == 3
    assert len(rep["pmap_table"]) == 3


def test_der_closed_under_bracket_and_ppower_on_basis():
    sm, _ = alg.smash_product(3, 1, 1)
    ders = hoch.derivation_space(sm)
    span = Subspace.from_vectors(vecs(ders), 3, sm.dim**2)
    for f in ders:
        assert span.contains_vector(hoch.p_power(f).vec())
        for g in ders:
            assert span.contains_vector(hoch.bracket(f, g).vec())
