"""Canonical keys and the equivalence decision."""

import random

import pytest

from ribbonforge import (
    EMPTY,
    SizeBoundExceeded,
    canonical_key,
    equivalent,
    from_words,
    random_ribbon_graph,
    surface_summary,
)


def test_rotation_reversal_and_relabeling_are_invisible():
    base = from_words([["a", "b", "c", "a", "b", "c"]])
    rotated = from_words([["b", "c", "a", "b", "c", "a"]])
    relabeled = from_words([["x", "y", "z", "x", "y", "z"]])
    reversed_flipped = from_words([["c'", "b'", "a'", "c'", "b'", "a'"]])
    for other in (rotated, relabeled, reversed_flipped):
        assert canonical_key(base) == canonical_key(other)


def test_reorienting_one_edge_disc_is_invisible():
    # flipping BOTH arrows of one label is a re-orientation of that edge disc
    assert equivalent(
        from_words([["a", "b", "a", "b"]]),
        from_words([["a'", "b", "a'", "b"]]),
    )
    assert equivalent(
        from_words([["a", "a'"]]),
        from_words([["a'", "a"]]),
    )


def test_flipping_a_single_arrow_changes_the_class():
    assert not equivalent(
        from_words([["a", "a"]]),
        from_words([["a", "a'"]]),
    )


def test_curve_permutation_is_invisible():
    a = from_words([["x", "x"], ["y"], ["y"]])
    b = from_words([["y"], ["x", "x"], ["y"]])
    assert canonical_key(a) == canonical_key(b)


def test_distinct_small_classes_are_separated():
    words = [
        [["a", "a"]],
        [["a", "a'"]],
        [["a"], ["a"]],
        [["a", "b", "a", "b"]],
        [["a", "a", "b", "b"]],
        [["a", "b", "a", "b'"]],
        [["a", "a"], []],
    ]
    keys = {canonical_key(from_words(w)) for w in words}
    assert len(keys) == len(words)


def test_empty_and_isolated_vertices():
    assert canonical_key(EMPTY) == b""
    assert canonical_key(from_words([[]])) == b"()"
    assert not equivalent(EMPTY, from_words([[]]))
    assert not equivalent(from_words([[]]), from_words([[], []]))


def test_equivalence_is_invariant_under_random_re_presentation():
    rng = random.Random("canon")
    for i in range(150):
        g = random_ribbon_graph(rng.randint(1, 5), f"cn-{i}")
        # re-present: rotate each curve, shuffle curve order, rename labels
        names = {l: f"r{j}" for j, l in enumerate(rng.sample(g.labels(), len(g.labels())))}
        curves = []
        for curve in g.words():
            k = rng.randrange(len(curve)) if curve else 0
            rotated = curve[k:] + curve[:k]
            curves.append(
                [
                    names[t.rstrip("'")] + ("'" if t.endswith("'") else "")
                    for t in rotated
                ]
            )
        rng.shuffle(curves)
        h = from_words(curves)
        assert equivalent(g, h), (g.words(), h.words())


def test_equivalent_graphs_share_surface_summary():
    rng = random.Random("canon-surface")
    pool = [random_ribbon_graph(rng.randint(0, 4), f"cs-{i}") for i in range(120)]
    by_key = {}
    for g in pool:
        by_key.setdefault(canonical_key(g), []).append(g)
    for group in by_key.values():
        first = surface_summary(group[0]).as_dict()
        for other in group[1:]:
            assert surface_summary(other).as_dict() == first


def test_size_bound_is_enforced_and_overridable():
    big = from_words([[f"e{i}" for i in range(9)] + [f"e{i}" for i in range(9)]])
    with pytest.raises(SizeBoundExceeded):
        canonical_key(big)
    assert canonical_key(big, max_edges=9)  # explicit override succeeds
