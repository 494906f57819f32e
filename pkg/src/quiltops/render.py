"""Grid diagrams for quilts: rendering and the inverse reading.

The diagram of a quilt has one column per leaf (left-to-right order) and
one row per once-occurring vertex (word order).  The rectangle of a
vertex u spans the columns of the leaves below u and the rows of the
once-occurring vertices appearing between two occurrences of u (its own
row if u occurs once).  Uncovered cells are shaded.  For each pair of
consecutive occurrences of u, a double segment is drawn on the left edge
of u's rectangle along the rows of the letters between them.

Reading a diagram back: edges go to rectangles adjacent below (shading
is transparent); the word starts at the top rectangle and repeatedly
moves to the uppermost unread rectangle on the left, else through a
double segment or the right edge to the highest unread rectangle beside
it, else across to the right neighbour, stopping at the bottom right.
"""

from .trees import Tree
from .words import Word
from .quilts import Quilt

SHADED = "#"


class Region:
    __slots__ = ("label", "top", "bottom", "left", "right")

    def __init__(self, label, top, bottom, left, right):
        self.label = label
        self.top = top
        self.bottom = bottom
        self.left = left
        self.right = right

    def __repr__(self):
        return "Region(%r, rows %d-%d, cols %d-%d)" % (
            self.label, self.top, self.bottom, self.left, self.right)


class QuiltGrid:
    def __init__(self, quilt, marks=0):
        word, tree = quilt.word, quilt.tree
        self.quilt = quilt
        self.marks = marks
        rows = [v for v in word.down_order() if word.count(v) == 1]
        cols = tree.leaves()
        self.rows, self.cols = rows, cols
        row_of = {v: i for i, v in enumerate(rows)}
        col_of = {v: i for i, v in enumerate(cols)}
        self.regions = {}
        for u in range(1, quilt.n + 1):
            rs = ([row_of[u]] if word.count(u) == 1 else
                  sorted(row_of[w] for w in word.between(u) if w in row_of))
            cs = sorted(col_of[l] for l in cols if tree.le(u, l))
            assert rs and cs, (quilt, u)
            assert rs == list(range(rs[0], rs[-1] + 1)), (quilt, u)
            assert cs == list(range(cs[0], cs[-1] + 1)), (quilt, u)
            self.regions[u] = Region(u, rs[0], rs[-1], cs[0], cs[-1])
        self.owner = [[None] * len(cols) for _ in rows]
        for u, reg in self.regions.items():
            for r in range(reg.top, reg.bottom + 1):
                for c in range(reg.left, reg.right + 1):
                    assert self.owner[r][c] is None, (quilt, u)
                    self.owner[r][c] = u
        # double segments: one per consecutive occurrence pair
        self.segments = []
        letters = word.letters
        for u in range(1, quilt.n + 1):
            occ = word.occurrences(u)
            for k in range(len(occ) - 1):
                between = letters[occ[k] + 1:occ[k + 1]]
                rs = sorted(row_of[w] for w in between if w in row_of)
                if rs:
                    self.segments.append((self.regions[u].left, rs[0], rs[-1]))

    def n_rows(self):
        return len(self.rows)

    def n_cols(self):
        return len(self.cols)

    def label_text(self, u):
        n_unmarked = self.quilt.n - self.marks
        return "m" if u > n_unmarked else str(u)

    def reading_sequence(self):
        """Region labels and shaded cells in row-major reading order."""
        out = []
        seen = set()
        for r in range(self.n_rows()):
            for c in range(self.n_cols()):
                u = self.owner[r][c]
                if u is None:
                    out.append(SHADED)
                elif u not in seen and self.regions[u].top == r and self.regions[u].left == c:
                    seen.add(u)
                    out.append(self.label_text(u))
        return out


def render_ascii(quilt, marks=0):
    """Box drawing with doubled left edges and shaded cells."""
    g = QuiltGrid(quilt, marks)
    W = max(2, max(len(g.label_text(u)) for u in g.regions)) + 2
    nr, nc = g.n_rows(), g.n_cols()
    doubles = set()
    for col, top, bottom in g.segments:
        for r in range(top, bottom + 1):
            doubles.add((r, col))

    def hborder(r):
        # border between row r-1 and r (0 = top)
        bits = ["+"]
        for c in range(nc):
            above = g.owner[r - 1][c] if r > 0 else None
            below = g.owner[r][c] if r < nr else None
            same = above is not None and above == below
            bits.append((" " if same else "-") * W)
            bits.append("+")
        return "".join(bits)

    lines = []
    for r in range(nr):
        lines.append(hborder(r))
        bits = []
        for c in range(nc):
            u = g.owner[r][c]
            left_owner = g.owner[r][c - 1] if c > 0 else None
            if u is not None and left_owner == u:
                edge = " "
            elif (r, c) in doubles:
                edge = "║"
            else:
                edge = "|"
            if u is None:
                cell = SHADED * W
            elif g.regions[u].top == r and g.regions[u].left == c:
                cell = g.label_text(u).center(W)
            else:
                cell = " " * W
            bits.append(edge + cell)
        bits.append("|")
        lines.append("".join(bits))
    lines.append(hborder(nr))
    return "\n".join(lines)


def render_svg(quilt, marks=0, cell=36):
    g = QuiltGrid(quilt, marks)
    w, h = g.n_cols() * cell, g.n_rows() * cell
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="-2 -2 %d %d">' % (w + 8, h + 8, w + 8, h + 8)]
    for r in range(g.n_rows()):
        for c in range(g.n_cols()):
            if g.owner[r][c] is None:
                parts.append('<rect x="%d" y="%d" width="%d" height="%d" '
                             'fill="#cccccc"/>' % (c * cell, r * cell, cell, cell))
    for u, reg in sorted(g.regions.items()):
        x, y = reg.left * cell, reg.top * cell
        rw = (reg.right - reg.left + 1) * cell
        rh = (reg.bottom - reg.top + 1) * cell
        parts.append('<rect x="%d" y="%d" width="%d" height="%d" fill="none" '
                     'stroke="black"/>' % (x, y, rw, rh))
        parts.append('<text x="%d" y="%d" text-anchor="middle" '
                     'dominant-baseline="middle" font-size="%d">%s</text>'
                     % (x + rw // 2, y + rh // 2, cell // 2, g.label_text(u)))
    for col, top, bottom in g.segments:
        x = col * cell + 3
        parts.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black"/>'
                     % (x, top * cell, x, (bottom + 1) * cell))
    parts.append('<rect x="0" y="0" width="%d" height="%d" fill="none" '
                 'stroke="black"/>' % (w, h))
    parts.append("</svg>")
    return "\n".join(parts)


def read_diagram(grid):
    """Recover the quilt from a QuiltGrid by the reading procedure."""
    g = grid
    nr, nc = g.n_rows(), g.n_cols()

    def first_rect_left(r, c):
        c -= 1
        while c >= 0 and g.owner[r][c] is None:
            c -= 1
        return g.owner[r][c] if c >= 0 else None

    def first_rect_right(r, c):
        c += 1
        while c < nc and g.owner[r][c] is None:
            c += 1
        return (g.owner[r][c], c) if c < nc else (None, nc)

    # edges: v adjacent below u through shading in some shared column
    edges = []
    for u, ru in g.regions.items():
        for v, rv in g.regions.items():
            if rv.top <= ru.bottom:
                continue
            lo, hi = max(ru.left, rv.left), min(ru.right, rv.right)
            ok = False
            for c in range(lo, hi + 1):
                if all(g.owner[r][c] is None
                       for r in range(ru.bottom + 1, rv.top)):
                    ok = True
                    break
            if ok:
                edges.append((u, v))
    parent = {}
    children = {u: [] for u in g.regions}
    for u, v in edges:
        assert v not in parent, "double parent while reading diagram"
        parent[v] = u
        children[u].append(v)
    for u in children:
        children[u].sort(key=lambda v: g.regions[v].left)

    # the word
    top = g.owner[0][0]
    word = [top]
    used = {top}
    while True:
        u = word[-1]
        reg = g.regions[u]
        # 1. uppermost unread rectangle to the left
        cand = None
        for r in range(reg.top, reg.bottom + 1):
            v = first_rect_left(r, reg.left)
            if v is not None and v not in used:
                rv = g.regions[v]
                if cand is None or rv.top < g.regions[cand].top:
                    cand = v
        if cand is not None:
            word.append(cand)
            used.add(cand)
            continue
        # look right from the top row of u
        r = reg.top
        v, vc = first_rect_right(r, reg.right)
        if v is None:
            if reg.bottom == nr - 1:
                # bottom right corner: the word is complete
                return _finish(g, word, parent, children)
            # through the right edge: highest unread rectangle beside it
            best = None
            for x, rx in g.regions.items():
                if x in used:
                    continue
                c = rx.right + 1
                while c < nc and g.owner[rx.top][c] is None:
                    c += 1
                if c == nc:
                    if best is None or rx.top < g.regions[best].top:
                        best = x
            if best is None:
                return _finish(g, word, parent, children)
            word.append(best)
            used.add(best)
            continue
        # a double segment between u and its right neighbour, with u not
        # at the segment's bottom, reroutes to the highest unread beside it
        seg = None
        for col, t, b in g.segments:
            if col == vc and t <= r <= b and g.regions[v].left == col:
                seg = (col, t, b)
                break
        if seg is not None and r < seg[2]:
            best = None
            for rr in range(seg[1], seg[2] + 1):
                for x in (first_rect_left(rr, seg[0]), g.owner[rr][seg[0]]):
                    if x is not None and x not in used:
                        if best is None or g.regions[x].top < g.regions[best].top:
                            best = x
            if best is not None:
                word.append(best)
                used.add(best)
                continue
        # otherwise step straight across
        word.append(v)
        used.add(v)


def _finish(g, word, parent, children):
    n = len(g.regions)
    par = [0] * (n + 1)
    kid = [()] * (n + 1)
    for v in g.regions:
        par[v] = parent.get(v, 0)
        kid[v] = tuple(children[v])
    return Quilt(Word(tuple(word), n), Tree(tuple(par), tuple(kid)))
