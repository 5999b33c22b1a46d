"""
Fast tests for exact linear algebra and bound quiver algebras.

Small inline algebra files plus the fixture files; no enumeration.
"""

import pytest

from algebra import linalg as la
from algebra.parser import format_algebra, load_algebra, parse_algebra
from tools.errors import AdmissibilityError, AlgebraParseError

from tests.conftest import fixture_path

COMMUTATIVE_SQUARE = """
algebra Square
vertices: 1 2 3 4
arrows: a: 1 -> 2, b: 2 -> 4, c: 1 -> 3, d: 3 -> 4
relations: a*b = c*d
"""


def test_qq_and_fmt_q_canonical():
    """Test canonical rational strings."""
    assert la.fmt_q(la.qq("2/4")) == "1/2"
    assert la.fmt_q(la.qq("-6/4")) == "-3/2"
    assert la.fmt_q(la.qq(7)) == "7"


def test_qq_rejects_garbage():
    """Test that non-rational literals raise ValueError."""
    with pytest.raises(ValueError, match="Not a rational literal"):
        la.qq("1/0")
    with pytest.raises(ValueError):
        la.qq(0.5)


def test_rank_and_nullspace():
    """Test rank-nullity on a small matrix."""
    a = la.mat([[1, 2, 3], [2, 4, 6]])
    assert la.rank(a) == 1
    kernel = la.nullspace(a)
    assert kernel.shape == (3, 2)
    assert la.is_zero(la.matmul(a, kernel))


def test_solve_consistent_and_inconsistent():
    """Test solve returns a solution or None."""
    a = la.mat([[1, 1], [0, 1]])
    x = la.solve(a, la.mat([[3], [1]]))
    assert la.rows_of(x) == [[la.qq(2)], [la.qq(1)]]
    singular = la.mat([[1, 1], [1, 1]])
    assert la.solve(singular, la.mat([[1], [2]])) is None


def test_zero_sized_shapes():
    """Test that empty shapes pass through stacking and products."""
    assert la.matmul(la.zeros(2, 0), la.zeros(0, 3)).shape == (2, 3)
    assert la.hstack([la.zeros(2, 0), la.eye(2)]).shape == (2, 2)
    assert la.rank(la.zeros(0, 4)) == 0


def test_fixture_dimensions():
    """Test dimensions of the fixture algebras."""
    assert load_algebra(fixture_path("B1a")).dim == 5
    assert load_algebra(fixture_path("B1b")).dim == 5
    assert load_algebra(fixture_path("A1b")).dim == 8
    assert load_algebra(fixture_path("K2")).dim == 3


def test_zero_relation_kills_path(B1a):
    """Test that b*a reduces to zero over B1a and a*b does not."""
    q = B1a.quiver
    assert B1a.normal_form(q.path(["b", "a"])) == {}
    assert B1a.normal_form(q.path(["a", "b"])) != {}
    assert [str(p) for p in B1a.basis_paths("2", "2")] == ["e2", "a*b"]


def test_commutativity_relation():
    """Test a commutative square: a*b and c*d agree and the algebra has dimension 9."""
    alg = parse_algebra(COMMUTATIVE_SQUARE)
    assert alg.dim == 9
    q = alg.quiver
    assert alg.normal_form(q.path(["a", "b"])) == alg.normal_form(q.path(["c", "d"]))
    assert len(alg.basis_paths("1", "4")) == 1


def test_non_composable_relation_raises():
    """Test that a relation on arrows that do not compose is rejected."""
    with pytest.raises(AlgebraParseError, match="not composable"):
        load_algebra(fixture_path("broken"))


def test_unknown_key_raises():
    """Test unknown keys in algebra files."""
    with pytest.raises(AlgebraParseError, match="unknown key"):
        parse_algebra("algebra X\nvertices: 1\ncolour: red\n")


def test_loop_without_relation_not_admissible():
    """Test that a free loop hits the length cap."""
    with pytest.raises(AdmissibilityError):
        parse_algebra("algebra L\nvertices: 1\narrows: x: 1 -> 1\ncap: 6\n")


def test_format_algebra_reparses(B1b):
    """Test that the written form parses back to the same basis."""
    again = parse_algebra(format_algebra(B1b))
    assert again.name == B1b.name
    assert [str(p) for p in again.basis()] == [str(p) for p in B1b.basis()]


def test_opposite_is_involutive(B1a):
    """Test the opposite algebra."""
    op = B1a.opposite
    assert op.dim == B1a.dim
    assert op.opposite is B1a
    assert op.quiver.arrow("b").source == "2"


def test_walk_ambiguous_and_missing(B1a):
    """Test vertex walks."""
    assert B1a.quiver.walk(["2", "1", "2"]).arrows == ("a", "b")
    with pytest.raises(AlgebraParseError, match="No arrow"):
        B1a.quiver.walk(["1", "1"])
