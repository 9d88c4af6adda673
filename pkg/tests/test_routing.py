import json
import random
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_boundary
from heawood.chains import Chain, boundary, is_chain_map, simplex_boundary, z_cycle
from heawood.errors import NotFound, ParameterError
from heawood.routing import (
    HomologyOracle,
    Multipoint,
    affine_combination,
    build_phi_strong,
    build_phi_weak,
    dim_v_image,
    find_collisions,
    kills_all_cycles,
    kneser_color,
    phi_support_problems,
    pigeonhole_points,
    random_oracle,
    triviality_classes,
    v_map,
    v_point,
    verify_triviality,
    z_multi,
)
from heawood.simplex import lex_k_faces, skeleton


def random_multipoint(rng, U, p, size):
    support = rng.sample(list(U), size)
    coeffs = [rng.randrange(p) for _ in support[1:]]
    return Multipoint(dict(zip(support, [1 - sum(coeffs)] + coeffs)), p)


def test_multipoint_validation():
    assert Multipoint({7: 1, 8: 1, 9: 1}, 2).support == (7, 8, 9)
    with pytest.raises(ParameterError):
        Multipoint({7: 1, 8: 1}, 2)
    mu = Multipoint({7: 2, 8: 2}, 3)
    assert mu.as_dict() == {7: 2, 8: 2}
    assert Multipoint.from_json(json.loads(json.dumps(mu.to_json()))) == mu


def test_z_multi_examples():
    sigma = (1, 2)
    assert z_multi(sigma, Multipoint.point(6, 3)) == z_cycle(sigma, 6, 3)
    mu = Multipoint({6: 1, 7: 1, 8: 1}, 2)
    assert z_multi(sigma, mu) == z_cycle(sigma, 6, 2) + z_cycle(sigma, 7, 2) + z_cycle(sigma, 8, 2)
    with pytest.raises(ParameterError):
        z_multi(sigma, Multipoint.point(2, 3))


@pytest.mark.parametrize("k,s", [(1, 4), (1, 5), (2, 6)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_tau_identity_for_multipoints(k, s, p):
    rng = random.Random(k * 100 + s * 10 + p)
    U = range(s + 2, s + 12)
    mus = [Multipoint.point(u, p) for u in U] + [random_multipoint(rng, U, p, rng.randint(1, 5)) for _ in range(10)]
    for tau in combinations(range(1, s + 2), k + 2):
        faces = sorted(combinations(tau, k + 1))
        expected = naive_boundary({tau: 1}, p)
        for mu in mus:
            total = Chain.zero(k, p)
            for j, sigma in enumerate(faces, 1):
                total = total + z_multi(sigma, mu) * (-1) ** (j + 1)
            assert total.terms == expected


def test_zero_oracle():
    o = random_oracle(4, 1, 15, 0, 2, seed=3)
    assert o.evaluate(z_cycle((1, 2), 9, 2)) == ()
    assert dim_v_image(o) == 0
    assert pigeonhole_points(o) == list(range(6, 16))


def test_oracle_determinism_and_json():
    a = random_oracle(4, 1, 15, 2, 3, seed=11)
    b = random_oracle(4, 1, 15, 2, 3, seed=11)
    c = random_oracle(4, 1, 15, 2, 3, seed=12)
    us = list(a.unused)
    assert [v_point(a, u) for u in us] == [v_point(b, u) for u in us]
    assert [v_point(a, u) for u in us] != [v_point(c, u) for u in us]
    back = HomologyOracle.from_json(json.loads(json.dumps(a.to_json())))
    assert [v_point(back, u) for u in us] == [v_point(a, u) for u in us]


def test_oracle_consistency_exhaustive():
    s, k, n, p = 4, 1, 15, 3
    o = random_oracle(s, k, n, 2, p, seed=5)
    for tau in combinations(range(1, s + 2), k + 2):
        faces = sorted(combinations(tau, k + 1))
        for u in o.unused:
            acc = np.zeros(o.b, dtype=int)
            for j, sigma in enumerate(faces, 1):
                acc += (-1) ** (j + 1) * np.array(o.generator(sigma, u))
            assert tuple(acc % p) == o.tau_class(tau)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 10**6), st.randoms())
def test_v_map_is_affine(p, seed, r):
    o = random_oracle(4, 1, 15, 2, p, seed)
    mu1 = random_multipoint(r, o.unused, p, r.randint(1, 4))
    mu2 = random_multipoint(r, o.unused, p, r.randint(1, 4))
    lam = r.randrange(p)
    mix = affine_combination([mu1, mu2], [lam, 1 - lam])
    lhs = v_map(o, mix)
    v1, v2 = v_map(o, mu1), v_map(o, mu2)
    rhs = [tuple((lam * a + (1 - lam) * b) % p for a, b in zip(x, y)) for x, y in zip(v1, v2)]
    assert lhs == rhs


def test_v_map_point_matches_flattened_vector():
    o = random_oracle(4, 1, 15, 2, 5, seed=1)
    flat = tuple(x for cls in v_map(o, Multipoint.point(9, 5)) for x in cls)
    assert flat == v_point(o, 9)


def test_pigeonhole_post_check():
    o = random_oracle(4, 1, 400, 1, 2, seed=2)
    pts = pigeonhole_points(o)
    assert len(set(pts)) == 10
    assert len({v_point(o, u) for u in pts}) == 1


def test_pigeonhole_not_found_on_adversarial_oracle():
    p, s, n = 7, 4, 19
    # v(u) for sigma_1 = (1, 2) is -value(1, u); distinct residues cap every bucket at 2
    values = {(1, u): (u % p,) for u in range(s + 2, n + 2)}
    o = HomologyOracle(s, 1, n, 1, p, values=values)
    with pytest.raises(NotFound):
        pigeonhole_points(o)


def _psi_eval(table, mu, p):
    acc = None
    for u, lam in mu.terms:
        v = [lam * x for x in table[u]]
        acc = v if acc is None else [a + b for a, b in zip(acc, v)]
    return tuple(x % p for x in acc)


def _affine_dim(table, U, p):
    from heawood.gfp import rank

    pts = np.array([table[u] for u in U])
    return rank((pts[1:] - pts[0]) % p, p) if len(U) > 1 else 0


def test_single_collision_is_a_point():
    mus = find_collisions({6: (1, 2), 7: (0, 0)}, [6, 7], 1, 3)
    assert len(mus) == 1 and len(mus[0].support) == 1


def test_constant_map_gives_singletons():
    mus = find_collisions(lambda u: (4, 4), range(10, 15), 5, 5)
    assert all(len(mu.support) == 1 for mu in mus)
    assert len({mu.support for mu in mus}) == 5


@pytest.mark.parametrize("p", [2, 3, 5])
def test_random_collisions_at_threshold(p):
    rng = random.Random(p)
    for _ in range(40):
        d_amb, r = rng.randint(1, 4), rng.randint(1, 5)
        base = [rng.randrange(p) for _ in range(d_amb)]
        # low-rank images exercise the dimension-dependent threshold
        gens = [[rng.randrange(p) for _ in range(d_amb)] for _ in range(rng.randint(0, d_amb))]
        size = 30
        table = {}
        for u in range(1, size + 1):
            coeffs = [rng.randrange(p) for _ in gens]
            table[u] = tuple((b + sum(c * g[i] for c, g in zip(coeffs, gens))) % p for i, b in enumerate(base))
        d = _affine_dim(table, list(table), p)
        U = list(range(1, (d + 1) * (r - 1) + 2))
        mus = find_collisions(table, U, r, p)
        assert len(mus) == r
        for a, b in combinations(mus, 2):
            assert not set(a.support) & set(b.support)
        assert all(set(mu.support) <= set(U) for mu in mus)
        assert len({_psi_eval(table, mu, p) for mu in mus}) == 1


def test_collision_precondition():
    table = {u: (u % 3, (u * u) % 3) for u in range(1, 5)}
    with pytest.raises(ParameterError):
        find_collisions(table, list(table), 3, 3)


def test_kneser_examples():
    c = kneser_color(4, 1)
    assert c.color_of((1, 2)) == 1 and c.color_of((3, 4)) == 3 and c.color_of((2, 5)) == 2
    with pytest.raises(ParameterError):
        kneser_color(4, 2)


def test_kneser_exhaustive():
    for k in range(0, 4):
        for s in range(2 * k + 1, 10):
            c = kneser_color(s, k)
            assert set(c.colors.values()) == set(range(1, s - 2 * k + 2))
            for (i, a), (j, b) in combinations(enumerate(c.faces, 1), 2):
                if not set(a) & set(b):
                    assert c.colors[i] != c.colors[j]


@pytest.mark.parametrize("k,s,b,p", [(1, 4, 1, 2), (1, 4, 2, 3), (2, 6, 1, 3)])
def test_dim_v_image_bound(k, s, b, p):
    for seed in range(20):
        o = random_oracle(s, k, s + 60, b, p, seed)
        assert dim_v_image(o) <= b * comb(s, k)


def test_phi_weak_properties():
    o = random_oracle(4, 1, 400, 1, 2, seed=2)
    pts = pigeonhole_points(o)
    phi = build_phi_weak(o, 4, 1, pts)
    assert is_chain_map(phi)
    for sigma, u in zip(lex_k_faces(skeleton(4, 1)), pts):
        assert phi[sigma] == Chain.of(sigma, 2) - z_cycle(sigma, u, 2)
        assert boundary(phi[sigma]) == simplex_boundary(sigma, 2)
    assert verify_triviality(phi, o, 4, 1)
    assert kills_all_cycles(phi, o, 4, 1)
    assert not phi_support_problems(phi, 4, 1)
    with pytest.raises(ParameterError):
        build_phi_weak(o, 4, 1, [pts[0]] * 10)


def test_phi_weak_zero_oracle_any_points():
    o = random_oracle(5, 2, 40, 0, 3, seed=0)
    phi = build_phi_weak(o, 5, 2, list(range(7, 7 + comb(6, 3))))
    assert is_chain_map(phi) and verify_triviality(phi, o, 5, 2)


def test_phi_without_collisions_is_not_trivial():
    p, s, n = 7, 4, 19
    values = {(1, u): (u % p,) for u in range(s + 2, n + 2)}
    o = HomologyOracle(s, 1, n, 1, p, values=values)
    phi = build_phi_weak(o, s, 1, list(range(6, 16)))
    assert is_chain_map(phi)
    assert not verify_triviality(phi, o, s, 1)


@pytest.mark.parametrize("k,s,b,p", [(1, 4, 1, 2), (1, 4, 1, 3), (2, 6, 1, 2)])
def test_phi_strong_pipeline_pieces(k, s, b, p):
    for seed in range(5):
        n = comb(s, k) * b * (s - 2 * k) + 2 * s - 2 * k + 1
        o = random_oracle(s, k, n, b, p, seed)
        col = kneser_color(s, k)
        mus = find_collisions(lambda u: v_point(o, u), o.unused, col.num_colors, p)
        phi = build_phi_strong(o, s, k, mus, col)
        assert is_chain_map(phi)
        assert verify_triviality(phi, o, s, k)
        assert all(c == (0,) * b for c in triviality_classes(phi, o, s, k).values())
        if k == 1:
            assert not phi_support_problems(phi, s, k)


def test_phi_strong_with_points_matches_weak_shape():
    o = random_oracle(4, 1, 15, 0, 2, seed=0)
    col = kneser_color(4, 1)
    mus = [Multipoint.point(u, 2) for u in (6, 7, 8)]
    phi = build_phi_strong(o, 4, 1, mus, col)
    for i, sigma in enumerate(col.faces, 1):
        u = 5 + col.colors[i]
        assert phi[sigma] == Chain.of(sigma, 2) - z_cycle(sigma, u, 2)


def test_phi_strong_rejects_overlap():
    o = random_oracle(4, 1, 15, 1, 3, seed=0)
    mus = [Multipoint({6: 2, 7: 2}, 3), Multipoint.point(7, 3), Multipoint.point(8, 3)]
    with pytest.raises(ParameterError):
        build_phi_strong(o, 4, 1, mus, kneser_color(4, 1))
