from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from frobenius_masa.catalog import build, build_label, gens_B, gens_G, gens_h, y6_to_gprime4
from frobenius_masa.lie import (
    JacobiError,
    LieAlgebra,
    LieError,
    abelian,
    dalpha_matrix,
    derivation_algebra,
    derived_and_central_series,
    derived_series,
    direct_sum,
    dual_basis_form,
    fingerprint,
    frobenius_decide,
    is_frobenius_functional,
    is_two_solvable,
    lower_central_series,
    make_lie_algebra,
    nilradical_split,
    open_orbit_rank,
    pfaffian_of_dalpha,
    semidirect_sum,
    verify_isomorphism,
)
from frobenius_masa.linalg import Matrix, span_matrices
from frobenius_masa.masa import canonical_A_n1
from frobenius_masa.mpoly import MPoly
from frobenius_masa.nonderog import classify_G_phi, circular_permutation

E = Matrix.unit


def aff_R():
    return make_lie_algebra(2, {(1, 2): {2: 1}})


def perm(images):
    d = len(images)
    return Matrix([[1 if images[j] == i else 0 for j in range(d)] for i in range(d)])


def test_construction_examples():
    assert abelian(3).brackets == {}
    assert aff_R().basis_bracket(0, 1) == {1: 1}


def test_jacobi_violation_names_a_triple():
    table = dict(build("D0", {"n": 3}).algebra.brackets)
    table[(0, 4)] = {4: -1}  # [e1, e5] = -e5 clashes with [e2, e4] = e5
    with pytest.raises(JacobiError) as err:
        LieAlgebra(6, table)
    assert "e" in str(err.value)
    assert not oracles.RawLie(6, table).jacobi_ok()


def test_flipping_a_nilpotent_action_keeps_jacobi():
    table = dict(build("D0", {"n": 3}).algebra.brackets)
    table[(1, 4)] = {5: -1}
    assert oracles.RawLie(6, table).jacobi_ok()
    LieAlgebra(6, table)


def test_semidirect_sum_examples():
    d0 = build("D0", {"n": 2}).algebra
    upper = semidirect_sum([Matrix.identity(2), E(2, 1, 2)], 2)
    assert verify_isomorphism(perm([0, 1, 3, 2]), upper, d0)
    assert semidirect_sum([Matrix.identity(2), E(2, 2, 1)], 2).structure_equal(d0)
    d01 = build("D01", {"n": 4}).algebra
    assert d01.basis_bracket(1, 6) == {4: 1, 7: 1}
    assert semidirect_sum([Matrix.identity(1)], 1).structure_equal(aff_R())
    with pytest.raises(LieError):
        semidirect_sum([E(2, 1, 2), E(2, 2, 1)], 2)


def test_series_examples():
    g = build("G", {"n": 4, "p": 2}).algebra
    assert derived_series(g) == [8, 4, 0]
    assert derived_series(abelian(3))[-1] == 0
    N = nilradical_split(gens_G(5, 3), 5)
    lcs = lower_central_series(build("G", {"n": 5, "p": 3}).algebra, N)
    assert lcs[-1] == 0 and len([x for x in lcs if x]) == 4
    dims, lc = derived_and_central_series(g)
    assert dims == [8, 4, 0] and lc[0] == 8


@pytest.mark.parametrize("n,want", [(2, 5), (3, 8), (4, 11), (5, 14), (6, 17)])
def test_derivations_of_D0(n, want):
    g = build("D0", {"n": n}).algebra
    assert derivation_algebra(g).dim == want == 3 * n - 1
    if n <= 3:
        assert oracles.derivation_dim(oracles.RawLie.from_library(g)) == want


def test_nilradical_examples():
    for n in (2, 3, 4):
        e = build("D0", {"n": n})
        assert nilradical_split(e.matrix_generators, n).dim == 2 * n - 1
    e = build("D01", {"n": 6})
    assert nilradical_split(e.matrix_generators, 6).dim == 12 - 2
    A = canonical_A_n1(4)
    assert nilradical_split(A, 4).dim == 7
    with pytest.raises(LieError):
        nilradical_split([E(2, 1, 2), E(2, 2, 1)], 2)


def test_pfaffian_examples():
    pf = pfaffian_of_dalpha(aff_R())
    a2 = MPoly.var(2, 1)
    assert pf in (a2, -a2)
    assert pfaffian_of_dalpha(build("B", {"n": 3}).algebra).is_zero()
    assert pfaffian_of_dalpha(build("L2", {"i": 4}).algebra).is_zero()


def test_frobenius_examples():
    g = build("G", {"n": 4, "p": 2}).algebra
    v = frobenius_decide(g)
    assert v.frobenius and is_frobenius_functional(g, v.certificate)
    assert dalpha_matrix(g, v.certificate).det() == v.pfaffian_at_certificate ** 2
    assert is_frobenius_functional(g, dual_basis_form(8, 5))
    for n in (2, 3, 4):
        d0 = build("D0", {"n": n}).algebra
        assert frobenius_decide(d0).frobenius
        assert is_frobenius_functional(d0, dual_basis_form(2 * n, 2 * n))
    assert not frobenius_decide(build("Y", {"i": 4}).algebra).frobenius
    assert not frobenius_decide(abelian(3)).frobenius


def test_open_orbit_examples():
    e1 = [1, 0, 0, 0]
    assert open_orbit_rank(gens_G(4, 1), e1) == 4
    assert open_orbit_rank(gens_h(4, 3), e1) == 4
    with pytest.raises(LieError):
        open_orbit_rank(gens_G(4, 1), [1, 0])


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_open_orbit_bounded_for_B3(alpha):
    assert open_orbit_rank(gens_B(3), alpha) <= 2


def test_direct_sum_examples():
    s = direct_sum([aff_R(), aff_R()])
    assert str(classify_G_phi(circular_permutation(2))) == "aff(R)+aff(R)"
    assert verify_isomorphism(Matrix.identity(4), s, build_label("aff(R)+aff(R)").algebra)
    g = build("D0", {"n": 3}).algebra
    assert direct_sum([g, abelian(0)]).structure_equal(g)
    assert direct_sum([build("aff_C").algebra, aff_R()]).dim == 6


def test_isomorphism_examples():
    G = build("G", {"n": 4, "p": 2}).algebra
    h = build("h", {"n": 4, "p": 2}).algebra
    assert verify_isomorphism(perm([0, 1, 3, 2, 4, 5, 7, 6]), G, h)
    d = build("D0", {"n": 3}).algebra
    assert verify_isomorphism(Matrix.identity(6), d, d)
    w = y6_to_gprime4()
    assert verify_isomorphism(w.psi, w.source, w.target)
    assert not verify_isomorphism(Matrix.zeros(6), d, d)


def test_fingerprint_examples():
    f2 = fingerprint(build("G", {"n": 5, "p": 2}).algebra)
    f3 = fingerprint(build("G", {"n": 5, "p": 3}).algebra)
    assert (f2.nilradical_derived_dim, f3.nilradical_derived_dim) == (2, 3)
    assert fingerprint(build("D01", {"n": 6}).algebra).nilradical_class == 3
    fa = fingerprint(abelian(4))
    assert fa.derived_dims == [4, 0] and fa.center_dim == 4 and fa.der_dim == 16
    assert fa.nilradical_status == "unavailable"


@lru_cache(maxsize=None)
def _catalog_pfaffians():
    out = []
    for lab in ("D0(2)", "aff(C)+aff(R)", "G(3,1)", "h(4,2)", "D01(4)", "Y(i=4)"):
        g = build("Y", {"i": 4}).algebra if lab == "Y(i=4)" else build_label(lab).algebra
        out.append((g, pfaffian_of_dalpha(g), oracles.RawLie.from_library(g)))
    return out


@given(st.integers(0, 5), st.lists(st.integers(-4, 4), min_size=8, max_size=8))
def test_pfaffian_squared_is_determinant(which, pt):
    g, pf, raw = _catalog_pfaffians()[which]
    alpha = [Fraction(x) for x in pt[:g.dim]]
    S = [[-sum(a * c for a, c in zip(alpha, raw.c[i][j])) for j in range(g.dim)]
         for i in range(g.dim)]
    val = pf.evaluate(alpha)
    assert val * val == oracles.det_gauss(S)
    assert val == oracles.pfaffian_expand(S)


@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_semidirect_sums_are_two_solvable(entries):
    M = Matrix.from_flat(entries, 3)
    B = [Matrix.identity(3), M, M * M]
    B = [b for k, b in enumerate(B) if span_matrices(B[:k + 1]).dim == k + 1]
    g = semidirect_sum(B, 3)
    assert is_two_solvable(g)
    assert oracles.RawLie.from_library(g).jacobi_ok()


@given(st.sampled_from(["aff(R)", "aff(C)", "D0(2)", "G(3,1)", "D0(3)"]),
       st.sampled_from(["aff(R)", "aff(C)", "D0(2)", "B(3)"]))
def test_derived_dims_add_over_sums(a, b):
    ga, gb = build_label(a).algebra, build_label(b).algebra
    da, db = derived_series(ga), derived_series(gb)
    k = max(len(da), len(db))
    da += [0] * (k - len(da))
    db += [0] * (k - len(db))
    got = derived_series(direct_sum([ga, gb]))
    got += [0] * (k - len(got))
    assert got == [x + y for x, y in zip(da, db)]
