"""Shared fixtures: the test corpus and independent oracles.

The oracles here deliberately avoid the stabilizer-chain engine: closure is
plain breadth-first multiplication of image tuples, so order/membership
results can be checked against an implementation with nothing in common.
"""

from __future__ import annotations

import pytest

from nilbound.constructions import (
    abelian_class2_group,
    affine_unitriangular,
    dihedral_times_abelian,
    iterated_wreath_sylow,
    product_action,
    wreath_polynomial_group,
)
from nilbound.perm import PermGroup, Permutation

NAIVE_CLOSURE_LIMIT = 10_000


def naive_closure(degree: int, gens, limit: int = NAIVE_CLOSURE_LIMIT) -> set[tuple[int, ...]]:
    """All products of the generators, as image tuples (oracle for order and
    membership, independent of the stabilizer chain)."""
    gen_images = [g.images for g in gens]
    identity = tuple(range(degree))
    closed = {identity}
    frontier = [identity]
    while frontier:
        a = frontier.pop()
        for b in gen_images:
            c = tuple(b[x] for x in a)
            if c not in closed:
                if len(closed) >= limit:
                    raise RuntimeError(f"naive closure exceeded {limit} elements")
                closed.add(c)
                frontier.append(c)
    return closed


def cyclic(n: int) -> PermGroup:
    return PermGroup(n, [Permutation.from_cycles(n, tuple(range(n)))])


def klein_four() -> PermGroup:
    return PermGroup(
        4,
        [Permutation.from_cycles(4, (0, 1), (2, 3)), Permutation.from_cycles(4, (0, 2), (1, 3))],
    )


def sym3() -> PermGroup:
    return PermGroup(3, [Permutation.from_cycles(3, (0, 1, 2)), Permutation.from_cycles(3, (0, 1))])


def build_corpus() -> list[tuple[str, PermGroup]]:
    """Groups of order <= 10^4 exercising every construction family."""
    corpus: list[tuple[str, PermGroup]] = [
        ("trivial4", PermGroup(4)),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C5", cyclic(5)),
        ("V4", klein_four()),
        ("S3", sym3()),
        ("D4", iterated_wreath_sylow(2, 2)),
        ("W(2,3)", iterated_wreath_sylow(2, 3)),
        ("W(3,2)", iterated_wreath_sylow(3, 2)),
        ("affine(2,2,1)", affine_unitriangular(2, 2, 1)),
        ("affine(2,3,1)", affine_unitriangular(2, 3, 1)),
        ("affine(2,4,2)", affine_unitriangular(2, 4, 2)),
        ("affine(3,2,1)", affine_unitriangular(3, 2, 1)),
        ("affine(5,2,1)", affine_unitriangular(5, 2, 1)),
        ("abelian2(2,2,1,0)", abelian_class2_group(2, 2, 1, 0)),
        ("abelian2(2,2,1,1)", abelian_class2_group(2, 2, 1, 1)),
        ("abelian2(2,3,1,1)", abelian_class2_group(2, 3, 1, 1)),
        ("abelian2(3,3,1,1)", abelian_class2_group(3, 3, 1, 1)),
        ("wpoly(2,1,1,2)", wreath_polynomial_group(2, 1, 1, 2)),
        ("wpoly(2,2,2,2)", wreath_polynomial_group(2, 2, 2, 2)),
        ("wpoly(2,1,3,2)", wreath_polynomial_group(2, 1, 3, 2)),
        ("wpoly(3,1,1,3)", wreath_polynomial_group(3, 1, 1, 3)),
        ("dihedral(3,2)", dihedral_times_abelian(3, 2)),
        ("dihedral(4,2)", dihedral_times_abelian(4, 2)),
        ("dihedral(4,3)", dihedral_times_abelian(4, 3)),
        ("dihedral(5,4)", dihedral_times_abelian(5, 4)),
        ("D4xC3", product_action(iterated_wreath_sylow(2, 2), cyclic(3))),
        ("stab(W(2,3),0)", iterated_wreath_sylow(2, 3).point_stabilizer(0)),
    ]
    return corpus


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, PermGroup]]:
    return build_corpus()
