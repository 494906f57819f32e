"""Finite categories and diagrams of algebras with exact entries.

A diagram assigns to each object a finite-dimensional associative
algebra (structure constants over the chosen ring) and to each morphism
a matrix that must be an algebra homomorphism, functorially in the
category.  The text format mirrors this: a ring line, objects with
dimensions, morphisms with source and target, a total composition table
for the non-identity composable pairs, structure constants as
(i, j, k, value) quadruples, and row-major matrices.
"""

from fractions import Fraction

from .rings import QQ, parse_ring


class DiagramError(ValueError):
    pass


class NonAssociative(DiagramError):
    pass


class NotFunctorial(DiagramError):
    pass


class NotHomomorphism(DiagramError):
    pass


class BadShape(DiagramError):
    pass


class FiniteCategory:
    def __init__(self, objects, morphisms, compose_table):
        """objects: list of names; morphisms: {name: (src, tgt)} without
        identities; compose_table: {(g, f): h} for non-identity pairs."""
        self.objects = list(objects)
        self.identity = {x: "id_%s" % x for x in objects}
        self.morphisms = {}
        for x in objects:
            self.morphisms[self.identity[x]] = (x, x)
        self.morphisms.update(morphisms)
        self._table = dict(compose_table)
        self._validate()

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def is_identity(self, f):
        return f.startswith("id_")

    def compose(self, g, f):
        """g after f; f: x -> y, g: y -> z."""
        if self.tgt(f) != self.src(g):
            raise DiagramError("not composable: %s after %s" % (g, f))
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        try:
            return self._table[(g, f)]
        except KeyError:
            raise DiagramError("composition table missing (%s, %s)" % (g, f))

    def _validate(self):
        for f, (x, y) in self.morphisms.items():
            for g, (y2, z) in self.morphisms.items():
                if y != y2:
                    continue
                h = self.compose(g, f)
                if self.morphisms[h] != (x, z):
                    raise DiagramError("compose table ill-typed at (%s, %s)" % (g, f))
        for f in self.morphisms:
            for g in self.morphisms:
                if self.tgt(f) != self.src(g):
                    continue
                for h in self.morphisms:
                    if self.tgt(g) != self.src(h):
                        continue
                    if self.compose(self.compose(h, g), f) != \
                            self.compose(h, self.compose(g, f)):
                        raise DiagramError("composition not associative at "
                                           "(%s, %s, %s)" % (h, g, f))

    def nerve(self, p):
        """Tuples (f_1, ..., f_p) with f_k: x_k -> x_{k-1}."""
        if p == 0:
            return [(x,) for x in self.objects]
        out = [()]
        for _ in range(p):
            new = []
            for tup in out:
                for f in self.morphisms:
                    if not tup or self.src(tup[-1]) == self.tgt(f):
                        new.append(tup + (f,))
            out = new
        return out

    def path(self, tup, k, l):
        """The composition f_{k+1} o ... o f_l (identity when k == l)."""
        if k == l:
            x = self.tgt(tup[k]) if k < len(tup) else self.src(tup[-1])
            return self.identity[x]
        f = tup[l - 1]
        for i in range(l - 1, k, -1):
            f = self.compose(tup[i - 1], f)
        return f

    def tuple_objects(self, tup):
        """x_0, ..., x_p for a nerve tuple."""
        if len(tup) == 1 and tup[0] in self.objects:
            return [tup[0]]
        xs = [self.tgt(tup[0])]
        for f in tup:
            xs.append(self.src(f))
        return xs


class DiagramOfAlgebras:
    def __init__(self, category, dims, mult, matrices, ring=QQ, validate=True):
        """dims: {object: dimension}; mult: {object: {(i, j, k): value}} with
        0-based indices; matrices: {morphism: {(r, c): value}}."""
        self.category = category
        self.dims = dict(dims)
        self.ring = ring
        self.mult = {x: {k: ring.coerce(v) for k, v in m.items() if not ring.is_zero(ring.coerce(v))}
                     for x, m in mult.items()}
        for x in category.objects:
            self.mult.setdefault(x, {})
        self.matrices = {}
        for f, m in matrices.items():
            self.matrices[f] = {k: ring.coerce(v) for k, v in m.items()
                                if not ring.is_zero(ring.coerce(v))}
        for x in category.objects:
            ident = {}
            for i in range(self.dims[x]):
                ident[(i, i)] = ring.one
            self.matrices[category.identity[x]] = ident
        if validate:
            self.validate()

    def matrix(self, f):
        try:
            return self.matrices[f]
        except KeyError:
            raise DiagramError("missing matrix for %s" % f)

    def multiply_basis(self, x, i, j):
        """e_i * e_j in A(x) as {k: coeff}."""
        out = {}
        for (a, b, k), v in self.mult[x].items():
            if a == i and b == j:
                out[k] = v
        return out

    def apply_matrix(self, f, vec):
        ring = self.ring
        out = {}
        for (r, c), v in self.matrices[f].items():
            if c in vec:
                w = ring.add(out.get(r, ring.zero), ring.mul(v, vec[c]))
                if ring.is_zero(w):
                    out.pop(r, None)
                else:
                    out[r] = w
        return out

    def validate(self):
        ring = self.ring
        cat = self.category
        for x in cat.objects:
            if self.dims[x] < 0:
                raise BadShape("object %s has negative dimension" % x)
            for (i, j, k) in self.mult[x]:
                d = self.dims[x]
                if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
                    raise BadShape("structure constant out of range on %s" % x)
        for f, m in self.matrices.items():
            x, y = cat.src(f), cat.tgt(f)
            for (r, c) in m:
                if not (0 <= r < self.dims[y] and 0 <= c < self.dims[x]):
                    raise BadShape("matrix entry out of range on %s" % f)
        # associativity on basis triples
        for x in cat.objects:
            d = self.dims[x]
            for i in range(d):
                for j in range(d):
                    ij = self.multiply_basis(x, i, j)
                    for k in range(d):
                        jk = self.multiply_basis(x, j, k)
                        left = {}
                        for t, v in ij.items():
                            for (a, b, c), w in self.mult[x].items():
                                if a == t and b == k:
                                    u = ring.add(left.get(c, ring.zero), ring.mul(v, w))
                                    left[c] = u
                        right = {}
                        for t, v in jk.items():
                            for (a, b, c), w in self.mult[x].items():
                                if a == i and b == t:
                                    u = ring.add(right.get(c, ring.zero), ring.mul(v, w))
                                    right[c] = u
                        left = {c: v for c, v in left.items() if not ring.is_zero(v)}
                        right = {c: v for c, v in right.items() if not ring.is_zero(v)}
                        if left != right:
                            raise NonAssociative("algebra at %s: (e%d e%d)e%d != e%d(e%d e%d)"
                                                 % (x, i, j, k, i, j, k))
        # functoriality
        for f in cat.morphisms:
            for g in cat.morphisms:
                if cat.tgt(f) != cat.src(g):
                    continue
                h = cat.compose(g, f)
                d = self.dims[cat.src(f)]
                for c in range(d):
                    vec = {c: ring.one}
                    lhs = self.apply_matrix(g, self.apply_matrix(f, vec))
                    rhs = self.apply_matrix(h, vec)
                    if lhs != rhs:
                        raise NotFunctorial("A[%s]A[%s] != A[%s]" % (g, f, h))
        # homomorphism property
        for f in cat.morphisms:
            x, y = cat.src(f), cat.tgt(f)
            d = self.dims[x]
            for i in range(d):
                for j in range(d):
                    lhs = self.apply_matrix(f, self.multiply_basis(x, i, j))
                    fi = self.apply_matrix(f, {i: ring.one})
                    fj = self.apply_matrix(f, {j: ring.one})
                    rhs = {}
                    for a, v in fi.items():
                        for b, w in fj.items():
                            for (p, q, k), u in self.mult[y].items():
                                if p == a and q == b:
                                    t = ring.add(rhs.get(k, ring.zero),
                                                 ring.mul(ring.mul(v, w), u))
                                    rhs[k] = t
                    rhs = {k: v for k, v in rhs.items() if not ring.is_zero(v)}
                    if lhs != rhs:
                        raise NotHomomorphism("A[%s] does not respect products"
                                              % f)
        return self


def _parse_value(s):
    return Fraction(s)


def parse_diagram(text, validate=True):
    """Parse the diagram file format; see the module docstring."""
    ring = QQ
    objects = []
    dims = {}
    morphisms = {}
    table = {}
    mult = {}
    matrix_rows = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "ring":
            ring = parse_ring(parts[1])
        elif kw == "object":
            objects.append(parts[1])
            dims[parts[1]] = int(parts[2])
            mult[parts[1]] = {}
        elif kw == "morphism":
            morphisms[parts[1]] = (parts[2], parts[3])
        elif kw == "compose":
            table[(parts[1], parts[2])] = parts[3]
        elif kw == "mult":
            x, i, j, k = parts[1], int(parts[2]), int(parts[3]), int(parts[4])
            mult[x][(i - 1, j - 1, k - 1)] = _parse_value(parts[5])
        elif kw == "matrix":
            matrix_rows[parts[1]] = [_parse_value(v) for v in parts[2:]]
        else:
            raise DiagramError("unknown keyword %r" % kw)
    cat = FiniteCategory(objects, morphisms, table)
    matrices = {}
    for f, vals in matrix_rows.items():
        x, y = cat.src(f), cat.tgt(f)
        dr, dc = dims[y], dims[x]
        if len(vals) != dr * dc:
            raise BadShape("matrix %s needs %d entries, got %d"
                           % (f, dr * dc, len(vals)))
        matrices[f] = {(r, c): vals[r * dc + c]
                       for r in range(dr) for c in range(dc)}
    return DiagramOfAlgebras(cat, dims, mult, matrices, ring, validate=validate)


def load_diagram(path, validate=True):
    with open(path) as fh:
        return parse_diagram(fh.read(), validate=validate)


def category_two_diagram(ring=QQ, dim=2):
    """Objects 1, 2 with one arrow; both algebras are dim x dim matrices
    worth of upper-triangular... by default the 2x2 diagonal algebra with
    the identity map, a small exact workhorse for the test suite."""
    objects = ["x", "y"]
    dims = {"x": dim, "y": dim}
    mult = {}
    for obj in objects:
        m = {}
        for i in range(dim):
            m[(i, i, i)] = 1  # diagonal algebra: e_i e_j = delta_ij e_i
        mult[obj] = m
    matrices = {"gamma": {(i, i): 1 for i in range(dim)}}
    cat = FiniteCategory(objects, {"gamma": ("x", "y")}, {})
    return DiagramOfAlgebras(cat, dims, mult, matrices, ring)
