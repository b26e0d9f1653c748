import pytest

from niljordan.atlas import (
    PUBLISHED_TABLES,
    associative_registry,
    canonical_tensor,
    complex_labels,
    load_atlas,
    squaring_map,
)
from niljordan.classify import classify
from niljordan.errors import NotAssociativeError
from niljordan.graphs import (
    FamilySpec,
    build_graph,
    parse_dot_edges,
    rigidity_screen,
    to_dot,
)
from niljordan.invariants import profile
from niljordan.paperchecks import FAMILY_FIXTURES, load_family_fixture
from niljordan.scalars import Scalar
from niljordan.tensors import StructureTensor, is_associative, is_jordan, transform
from util import random_invertible, rng, tensor_from


def test_atlas_loads_and_profiles_match():
    atlas = load_atlas()
    assert len(atlas) == 26
    for label, entry in atlas.items():
        assert profile(entry.tensor) == entry.expected_profile, label


def test_fifteen_complex_entries_match_computed_table():
    atlas = load_atlas()
    fifteen = [l for l in PUBLISHED_TABLES]
    assert len(fifteen) == 15
    for label in fifteen:
        computed = atlas[label].expected_profile.table_row()
        published = PUBLISHED_TABLES[label]
        if label in ("J3_1", "J3_2"):
            # known misprints in the dimension-3 orbit column
            assert computed[1] == published[1] - 1
        else:
            assert computed == published


def test_squaring_map_examples():
    reg = associative_registry()
    assert squaring_map(reg["A3_b4"]) == StructureTensor.abelian(3)
    b5 = reg["A3_b5"]
    assert squaring_map(b5) == tensor_from(3, {(1, 1): {2: 1}})
    img = squaring_map(reg["A3_b2_mu1"])
    assert img == tensor_from(
        3, {(1, 1): {2: 1}, (1, 3): {2: Scalar(1) / Scalar(2)}, (3, 3): {2: 1}}
    )
    assert classify(img) == "J3_2"
    assert classify(squaring_map(reg["A3_b1"])) == "J3_1"
    assert classify(squaring_map(reg["A3_b2_mu_quarter"])) == "J3_3"


def test_squaring_requires_associativity():
    lie_like = StructureTensor.from_products(
        3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {2: -1}}, bilinear=True
    )
    with pytest.raises(NotAssociativeError):
        squaring_map(lie_like)


def _random_associative(r, dim):
    seeds = {
        2: tensor_from(2, {(1, 1): {2: 1}}),
        3: canonical_tensor("J3_1"),
        4: canonical_tensor("J4_1"),
    }
    return transform(seeds[dim], random_invertible(r, dim))


def test_squaring_images_are_jordan_for_random_associative():
    r = rng(211)
    for k in range(100):
        dim = (2, 3, 4)[k % 3]
        beta = _random_associative(r, dim)
        assert is_associative(beta)
        img = squaring_map(beta)
        assert img.symmetric and is_jordan(img)


def _specs(dim):
    out = []
    for name, group, src, tgt, _, _ in FAMILY_FIXTURES:
        if src.startswith(f"J{dim}"):
            out.append(FamilySpec(f"{name}__{group}", src, tgt,
                                  load_family_fixture(name, group), group))
    return out


def test_build_graph_j3():
    g = build_graph(complex_labels(3), _specs(3))
    assert g.reachable_from("J3_1") == {"J3_1", "J3_2", "J3_3", "J3_ab"}
    assert g.sources() == ["J3_1"]
    assert g.is_strict_order()


def test_build_graph_j4_closure_and_errata():
    g = build_graph(complex_labels(4), _specs(4))
    from_1 = g.reachable_from("J4_1")
    from_2 = g.reachable_from("J4_2")
    assert from_1 == {"J4_1", "J4_7", "J4_9", "J4_10", "J4_11", "J4_12", "J4_ab"}
    assert from_2 == set(complex_labels(4)) - {"J4_1"}
    assert set(complex_labels(4)) <= from_1 | from_2
    assert g.sources() == ["J4_1", "J4_2"]
    assert g.is_strict_order()
    failing = {spec.name for spec, _ in g.errata}
    assert failing == {
        "j4_9_to_11__listed", "j4_10_to_11__listed", "j4_3_to_6__listed",
        "j4_4_to_8__listed", "j4_4_to_10__listed",
    }


def test_empty_family_list_gives_scaling_only_graph():
    g = build_graph(complex_labels(3), [])
    assert all(e.target_class == "J3_ab" for e in g.edges)
    assert len(g.edges) == 3


def test_dot_round_trip():
    g = build_graph(complex_labels(4), _specs(4))
    dot = to_dot(g, name="contractions_J4")
    assert parse_dot_edges(dot) == sorted(g.reduction)


def test_rigidity_screen():
    g4 = build_graph(complex_labels(4), _specs(4))
    screen = rigidity_screen(g4)
    assert {l for l, info in screen.items() if info["no_incoming_edge"]} == {"J4_1", "J4_2"}
    assert screen["J4_2"]["max_orbit"] and not screen["J4_1"]["max_orbit"]
    assert screen["J4_1"]["unique_max_char_seq"]
    g3 = build_graph(complex_labels(3), _specs(3))
    screen3 = rigidity_screen(g3)
    assert {l for l, info in screen3.items() if info["no_incoming_edge"]} == {"J3_1"}
    single = build_graph(["J4_12", "J4_ab"], [])
    assert single.sources() == ["J4_12"]
