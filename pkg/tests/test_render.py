from quiltops.quilts import parse_quilt, enumerate_quilts
from quiltops.render import QuiltGrid, render_ascii, render_svg, read_diagram


def test_reading_sequences_from_displays():
    # reading orders of diagrams the source text actually displays
    cases = [
        ("143234;1(2,3,4)", 0, ["1", "2", "3", "4"]),
        ("1252343;1(5,2(4,3))", 0, ["1", "5", "2", "#", "4", "3"]),
        ("1235343;1(5,2(4,3))", 0, ["1", "#", "2", "5", "#", "3", "#", "4"]),
        ("1234353;1(5,2(4,3))", 0, ["1", "#", "2", "#", "4", "3", "5", "#"]),
        ("13234;1(2,3,4)", 0, ["1", "2", "3", "#", "#", "#", "4"]),
        ("14234;1(2,3,4)", 0, ["1", "2", "#", "4", "#", "3"]),
        ("14324;1(2,3,4)", 0, ["1", "#", "3", "4", "2", "#"]),
        ("312;3(1,2)", 1, ["m", "1", "#", "#", "2"]),
        ("3121;3(2,1)", 1, ["m", "2", "1"]),
        ("41232;4(1(3),2)", 1, ["m", "1", "#", "3", "2"]),
        ("421232;4(1(3),2)", 1, ["m", "1", "2", "3"]),
        ("412131;4(2(3),1)", 1, ["m", "2", "1", "3"]),
        ("41213;4(2,1(3))", 1, ["m", "2", "1", "#", "3"]),
        ("4512131;4(5(2,3),1)", 2, ["m", "m", "#", "2", "#", "1", "#", "3"]),
    ]
    for text, marks, expect in cases:
        got = QuiltGrid(parse_quilt(text), marks).reading_sequence()
        assert got == expect, (text, got)


def test_single_vertex():
    g = QuiltGrid(parse_quilt("1;1"))
    assert g.n_rows() == g.n_cols() == 1
    assert g.reading_sequence() == ["1"]


def test_golden_diagram_shape():
    # Q of the composition example: 2x2 grid, 1 across the top
    g = QuiltGrid(parse_quilt("1232;1(3,2)"))
    assert g.n_rows() == 2 and g.n_cols() == 2
    reg1 = g.regions[1]
    assert (reg1.top, reg1.bottom, reg1.left, reg1.right) == (0, 0, 0, 1)
    assert g.segments == [(1, 1, 1)]  # double line left of vertex 2, row 2


def test_ascii_and_svg_render():
    q = parse_quilt("1232;1(3,2)")
    text = render_ascii(q)
    assert "1" in text and "║" in text
    svg = render_svg(q)
    assert svg.startswith("<svg") and "</svg>" in svg
    assert svg.count("<text") == 3


def test_round_trip_exhaustive():
    for n in (1, 2, 3):
        for q in enumerate_quilts(n):
            assert read_diagram(QuiltGrid(q)) == q, q


def test_round_trip_arity4_full():
    for q in enumerate_quilts(4):
        assert read_diagram(QuiltGrid(q)) == q, q


def test_round_trip_arity5_sample():
    import random
    random.seed(8)
    qs = enumerate_quilts(5)
    for q in random.sample(qs, 400):
        assert read_diagram(QuiltGrid(q)) == q, q
