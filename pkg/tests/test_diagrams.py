import pytest

from quiltops.rings import QQ, GF2
from quiltops.diagrams import (NonAssociative, NotFunctorial, NotHomomorphism,
                               BadShape, parse_diagram, category_two_diagram)

DIAGRAM_TEXT = """
ring Q
object x 2
object y 2
morphism gamma x y
mult x 1 1 1 1
mult x 2 2 2 1
mult y 1 1 1 1
mult y 2 2 2 1
matrix gamma 1 0 0 1
"""


def test_parse_and_validate():
    d = parse_diagram(DIAGRAM_TEXT)
    assert d.dims == {"x": 2, "y": 2}
    assert d.category.compose("gamma", "id_x") == "gamma"
    assert d.category.compose("id_y", "gamma") == "gamma"


def test_one_object_trivial():
    d = parse_diagram("ring Q\nobject x 1\nmult x 1 1 1 1\n")
    assert d.dims["x"] == 1


def test_non_homomorphism_detected():
    bad = DIAGRAM_TEXT.replace("matrix gamma 1 0 0 1", "matrix gamma 1 1 0 1")
    with pytest.raises(NotHomomorphism):
        parse_diagram(bad)


def test_non_associative_detected():
    bad = DIAGRAM_TEXT + "mult x 1 2 2 1\n"
    with pytest.raises(NonAssociative):
        parse_diagram(bad)


def test_not_functorial_detected():
    text = """
ring Q
object x 1
object y 1
object z 1
morphism f x y
morphism g y z
morphism h x z
compose g f h
mult x 1 1 1 1
mult y 1 1 1 1
mult z 1 1 1 1
matrix f 1
matrix g 1
matrix h 0
"""
    with pytest.raises((NotFunctorial, NotHomomorphism)):
        parse_diagram(text)


def test_bad_shape_detected():
    bad = DIAGRAM_TEXT.replace("matrix gamma 1 0 0 1", "matrix gamma 1 0 0")
    with pytest.raises(BadShape):
        parse_diagram(bad)


MATRIX_ALGEBRA = """
ring Q
object a 4
object b 4
morphism gamma a b
# basis E11, E12, E21, E22 of the 2x2 matrix algebra, Eij Ekl = d_jk Eil
mult a 1 1 1 1
mult a 1 2 2 1
mult a 2 3 1 1
mult a 2 4 2 1
mult a 3 1 3 1
mult a 3 2 4 1
mult a 4 3 3 1
mult a 4 4 4 1
mult b 1 1 1 1
mult b 1 2 2 1
mult b 2 3 1 1
mult b 2 4 2 1
mult b 3 1 3 1
mult b 3 2 4 1
mult b 4 3 3 1
mult b 4 4 4 1
matrix gamma 1 0 0 0  0 1 0 0  0 0 1 0  0 0 0 1
"""


def test_two_by_two_matrix_algebras():
    d = parse_diagram(MATRIX_ALGEBRA)
    assert d.dims == {"a": 4, "b": 4}
    # transposition is linear but not multiplicative
    swapped = MATRIX_ALGEBRA.replace(
        "matrix gamma 1 0 0 0  0 1 0 0  0 0 1 0  0 0 0 1",
        "matrix gamma 1 0 0 0  0 0 1 0  0 1 0 0  0 0 0 1")
    with pytest.raises(NotHomomorphism):
        parse_diagram(swapped)


def test_ring_f2():
    d = parse_diagram(DIAGRAM_TEXT.replace("ring Q", "ring F2"))
    assert d.ring == GF2


def test_nerve():
    d = category_two_diagram(QQ, 2)
    cat = d.category
    assert sorted(cat.nerve(0)) == [("x",), ("y",)]
    assert len(cat.nerve(1)) == 3
    assert len(cat.nerve(2)) == 4
    # paths compose correctly
    tup = ("id_y", "gamma")
    assert cat.path(tup, 0, 2) == "gamma"
    assert cat.path(tup, 1, 1) == "id_y"
    assert cat.path(tup, 2, 2) == "id_x"


def test_composition_table_three_objects():
    d = parse_diagram("""
ring Q
object a 1
object b 1
object c 1
morphism f a b
morphism g b c
morphism h a c
compose g f h
mult a 1 1 1 1
mult b 1 1 1 1
mult c 1 1 1 1
matrix f 1
matrix g 1
matrix h 1
""")
    assert d.category.compose("g", "f") == "h"
    assert len(d.category.nerve(2)) > 0
