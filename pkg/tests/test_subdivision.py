import json
from fractions import Fraction

import pytest

from heawood.chains import Chain, is_chain_map, z_cycle
from heawood.errors import ParameterError
from heawood.simplex import SimplicialComplex, lex_k_faces, skeleton
from heawood.subdivision import (
    GeometricSubdivision,
    Label,
    build_D,
    det,
    euler_characteristic,
    ladder_properties,
    ladder_subdivide,
    orientation,
    parse_off,
    rho,
    rho_face,
    rho_ladder_decomposition,
    stellar_blocks,
    stellar_subdivide,
    to_off,
    unsubdivided,
    validity_problems,
)


def test_det_exact():
    assert det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1], [1, 0]]) == -1


def test_stellar_edge():
    S = stellar_subdivide(SimplicialComplex(((1, 2),)), (1, 2))
    assert S.maximal == ((1, 3), (2, 3))
    assert S.labels[3] == Label("x", 1)
    assert S.points[3] == (Fraction(1, 2), Fraction(1, 2))
    # the apex is last in the order, so both halves keep the direction of the edge
    assert orientation(S, (1, 3), (1, 2)) == 1
    assert orientation(S, (2, 3), (1, 2)) == -1  # (2, a) runs against 1 -> 2


def test_stellar_triangle_and_counts():
    for k in range(1, 5):
        top = tuple(range(1, k + 2))
        S = stellar_subdivide(SimplicialComplex((top,)), top)
        assert len(S.subdividing(top)) == k + 1
        assert not validity_problems(S)
    with pytest.raises(ParameterError):
        stellar_subdivide(SimplicialComplex(((1, 2, 3),)), (1, 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_stellar_orientation_closed_form(k):
    top = tuple(range(1, k + 2))
    S = stellar_subdivide(SimplicialComplex((top,)), top)
    apex = k + 2
    for i in range(1, k + 2):
        eta = tuple(v for v in top if v != i) + (apex,)
        assert orientation(S, eta, top) == (-1) ** (i + k + 1)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_stellar_rho_is_reroute(k, p):
    top = tuple(range(1, k + 2))
    S = stellar_subdivide(SimplicialComplex((top,)), top)
    assert rho_face(S, top, p) == Chain.of(top, p) + z_cycle(top, k + 2, p) * (-1) ** k
    assert is_chain_map(rho(S, p))


def test_same_points_orientation_is_positive():
    D = build_D(3, 2, 1)
    for edge in lex_k_faces(skeleton(3, 1)):
        assert unsubdivided(D, edge)
        assert orientation(D, edge, edge) == 1


def test_orientation_rejects_degenerate():
    S = ladder_subdivide(1, 1)
    with pytest.raises(ParameterError):
        orientation(S, (1,), (1, 2))


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("ell", [1, 3, 5, 7])
def test_ladder_properties(k, ell):
    S = ladder_subdivide(k, ell)
    props = ladder_properties(S, ell=ell)
    assert all(props.values()), props
    assert not validity_problems(S)
    assert is_chain_map(rho(S, 3))


def test_ladder_one_is_stellar():
    for k in (1, 2, 3):
        S = ladder_subdivide(k, 1)
        sigma = max(S.base_faces, key=len)
        assert len(S.subdividing(sigma)) == k + 1
        assert [str(S.labels[v]) for v in S.points if S.labels[v].kind == "x"] == ["x1"]


def test_k1_ladder_three_is_an_edge_path():
    S = ladder_subdivide(1, 3)
    assert len(S.maximal) == 6
    labels = [str(S.labels[v]) for v in sorted(S.points, key=lambda v: S.points[v][1])]
    assert labels == ["w1", "x1", "w2", "x2", "w1", "x3", "w2"]
    d = rho_ladder_decomposition(S, 5)
    assert [sign for _, _, sign in d.blocks] == [1, -1, 1]
    assert d.holds and not d.residual


@pytest.mark.parametrize("k,ell", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 3)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_rho_decomposition(k, ell, p):
    d = rho_ladder_decomposition(ladder_subdivide(k, ell), p)
    assert d.holds and d.signs_alternate
    assert len(d.blocks) == ell


def test_ladder_one_decomposition_has_no_residual():
    d = rho_ladder_decomposition(ladder_subdivide(2, 1), 3)
    assert len(d.blocks) == 1 and not d.residual


def test_k2_ell5_structure():
    S = ladder_subdivide(2, 5)
    assert len(stellar_blocks(S)) == 5
    verts, faces = parse_off(to_off(S))
    assert len(verts) == len(S.points) and len(faces) == len(S.maximal)
    # a subdivided triangle is a disk
    assert euler_characteristic(faces) == 1


@pytest.mark.parametrize("ell", [0, 2, -1])
def test_even_ladders_rejected(ell):
    with pytest.raises(ParameterError):
        ladder_subdivide(2, ell)


def test_build_D_stellar_triangle_boundary():
    D = build_D(2, 1, [1, 1, 1])
    assert len(D.maximal) == 6
    assert euler_characteristic(D.maximal) == 0  # a hexagon
    assert not validity_problems(D)


def test_build_D_mixed_ells():
    ells = [1, 3, 5, 1, 3, 5, 1, 3, 5, 1]
    D = build_D(4, 1, ells)
    assert not validity_problems(D)
    for i, sigma in enumerate(lex_k_faces(skeleton(4, 1))):
        assert all(ladder_properties(D, sigma, ells[i]).values())
        assert rho_ladder_decomposition(D, 3, sigma).holds
    for v in range(1, 6):
        assert unsubdivided(D, (v,))
    assert is_chain_map(rho(D, 3))


def test_build_D_k2():
    D = build_D(5, 2, 3)
    assert not validity_problems(D)
    assert is_chain_map(rho(D, 2))
    for sigma in lex_k_faces(skeleton(5, 2)):
        assert all(ladder_properties(D, sigma, 3).values())


def test_build_D_rejects_even():
    with pytest.raises(ParameterError):
        build_D(4, 1, [1, 2] + [1] * 8)
    with pytest.raises(ParameterError):
        build_D(4, 1, [1, 1])


def test_json_round_trip():
    D = build_D(4, 1, [1, 3, 1, 1, 5, 1, 1, 1, 1, 3])
    back = GeometricSubdivision.from_json(json.loads(json.dumps(D.to_json())))
    assert back.points == D.points and back.labels == D.labels
    assert back.maximal == D.maximal and back.base_faces == D.base_faces
    assert back.base_vertex == D.base_vertex
