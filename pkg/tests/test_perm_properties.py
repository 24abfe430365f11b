"""Property-based checks of the group engine on random generator sets."""

from hypothesis import given, settings
from hypothesis import strategies as st

from nilbound.perm import PermGroup, Permutation

from conftest import naive_closure


def permutations_of(degree: int):
    return st.permutations(range(degree)).map(Permutation)


@st.composite
def small_groups(draw):
    degree = draw(st.integers(min_value=1, max_value=6))
    gens = draw(st.lists(permutations_of(degree), max_size=3))
    return PermGroup(degree, gens)


@given(permutations_of(6), permutations_of(6), permutations_of(6))
def test_composition_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(permutations_of(7))
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity()
    assert p.inverse().inverse() == p


@given(permutations_of(5), permutations_of(5))
def test_inverse_antihomomorphism(a, b):
    assert (a * b).inverse() == b.inverse() * a.inverse()


@settings(max_examples=60, deadline=None)
@given(small_groups())
def test_order_matches_naive_closure(G):
    closure = naive_closure(G.degree, G.generators, limit=1000)
    assert G.order() == len(closure)
    for images in closure:
        assert Permutation(images) in G


@settings(max_examples=40, deadline=None)
@given(small_groups())
def test_orbit_stabilizer_identity(G):
    for point in range(G.degree):
        assert G.order() == len(G.orbit(point)) * G.point_stabilizer(point).order()


@settings(max_examples=40, deadline=None)
@given(small_groups(), st.data())
def test_membership_rejects_outsiders(G, data):
    candidate = data.draw(permutations_of(G.degree))
    closure = naive_closure(G.degree, G.generators, limit=1000)
    assert (candidate in G) == (candidate.images in closure)
