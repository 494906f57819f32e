"""The mQuilt operad: quilts with odd arity-0 marks subject to relations.

A basis element is a quilt of arity n+k whose top k labels are marked;
it stands for the composition of the quilt with k copies of the odd
arity-0 generator, one at each marked slot (in ascending label order).
The stored representative is a normal form modulo the relations:

  R2  a marked vertex with more than two children is zero;
  R3  a marked vertex repeated in the word is zero;
  R4  a marked letter wedged between two equal letters is zero;
  R5  moving the (unique) letter of a marked vertex anywhere else that
      still yields a quilt does not change the element;
  R1  for a marked edge (u, v) that can be made word-adjacent, the sum
      over all redistributions of the combined children of u and v
      (u keeping v plus a prefix and suffix, v a middle block) is zero.

R4, R5 and R1 are properties of the whole reposition class, so they are
checked against every placement of the marked letters.  Sums are reduced
against the R1 relations by echelonizing the redistribution families on
the component of each key (cached); a key's normal form is its reduction
against the leaders of that echelon.  Relabelling the marks costs the
sign of the permutation, the generator being odd.

The rewriting rules are the ones the computations in low arity actually
use; they are not proven confluent, so a nonzero residual may mean "not
reducible by the implemented rules" rather than "nonzero in the operad".
"""

from functools import lru_cache

from .formal import FormalSum, combine
from .rings import ZZ
from .trees import Tree
from .words import Word
from .quilts import Quilt, check_axioms, QuiltAxiomViolated, identity_quilt
from .extensions import compose, face, face_sign


class MQuilt:
    """Normal-form representative: quilt of arity n+k with marks n+1..n+k."""

    __slots__ = ("quilt", "marks", "_key")

    def __init__(self, quilt, marks):
        self.quilt = quilt
        self.marks = marks
        self._key = (quilt.key(), marks)

    @property
    def arity(self):
        return self.quilt.n - self.marks

    @property
    def degree(self):
        return self.quilt.degree - self.marks

    def marked(self):
        return set(range(self.quilt.n - self.marks + 1, self.quilt.n + 1))

    def key(self):
        return self._key

    def sort_key(self):
        return (self.arity, self.marks, self.quilt.sort_key())

    def __eq__(self, other):
        return isinstance(other, MQuilt) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        if not self.marks:
            return str(self.quilt)
        ms = ",".join("m%d" % v for v in sorted(self.marked()))
        return "%s[%s]" % (self.quilt, ms)

    __repr__ = __str__


M_ELEMENT_KEY = MQuilt(identity_quilt(), 1)


def from_quilt(q):
    return MQuilt(q, 0)


def _perm_sign(perm):
    sgn = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sgn = -sgn
    return sgn


def _insertions(base, letters_to_place):
    if not letters_to_place:
        yield tuple(base)
        return
    x = letters_to_place[0]
    for i in range(len(base) + 1):
        yield from _insertions(base[:i] + [x] + base[i:], letters_to_place[1:])


def _class_words(tree, word, mset):
    """All valid words in the reposition class of the marked letters."""
    base = [x for x in word.letters if x not in mset]
    out = []
    seen = set()
    for cand in _insertions(base, sorted(mset)):
        if cand in seen:
            continue
        seen.add(cand)
        try:
            w = Word(cand, tree.n)
            check_axioms(w, tree)
        except (ValueError, QuiltAxiomViolated):
            continue
        out.append(w)
    return out


def _prenormal(quilt, mset):
    """Kills plus the orbit-canonical representative.

    Returns None when the element is zero by R2, R3 or R4, otherwise
    (key, sign): the class member whose marked letters sit at the
    earliest positions (relabelled so the marks are the top labels in
    first-occurrence order), and the sign of the mark permutation.
    """
    word, tree = quilt.word, quilt.tree
    for v in mset:
        if word.count(v) > 1:
            return None          # R3
        if len(tree.children[v]) > 2:
            return None          # R2
    words = _class_words(tree, word, mset)
    for w in words:
        ls = w.letters
        for i in range(1, len(ls) - 1):
            if ls[i] in mset and ls[i - 1] == ls[i + 1]:
                return None      # R4
    n = quilt.n - len(mset)
    sorted_marks = sorted(mset)
    best = None
    for w in words:
        pos = {x: i for i, x in enumerate(w.letters)}
        down = [x for x in w.down_order() if x in mset]
        poskey = tuple(sorted(pos[v] for v in mset))
        relabel = {}
        for i, v in enumerate(sorted(set(range(1, quilt.n + 1)) - mset)):
            relabel[v] = i + 1
        for i, v in enumerate(down):
            relabel[v] = n + 1 + i
        q2 = Quilt(w, tree).permute({new: old for old, new in relabel.items()})
        sgn = _perm_sign([down.index(v) for v in sorted_marks])
        cand = (poskey, q2.sort_key())
        if best is None or cand < best[0]:
            best = (cand, MQuilt(q2, len(mset)), sgn)
    return best[1], best[2]


def prenormalize(quilt, mset, coeff=1, ring=ZZ):
    res = _prenormal(quilt, frozenset(mset))
    if res is None:
        return FormalSum(ring)
    key, sgn = res
    return FormalSum(ring, [(key, ring.mul(ring.coerce(coeff), ring.coerce(sgn)))])


@lru_cache(maxsize=None)
def _families(key):
    """All redistribution relations led by elements of key's orbit.

    For each marked edge (u, v) of key that can be made word-adjacent,
    the family collapses u, v to one vertex and re-expands: u keeps a
    prefix and suffix of the combined children around v, v keeps the
    middle block.  Each family is returned as a tuple of (member, sign)
    prenormal pairs whose sum is zero in the operad.
    """
    quilt = key.quilt
    tree, word = quilt.tree, quilt.word
    mset = frozenset(key.marked())
    out = []
    for u in sorted(mset):
        for v in tree.children[u]:
            if v not in mset:
                continue
            adjacent = None
            for w in _class_words(tree, word, mset):
                ls = w.letters
                iu = ls.index(u)
                if iu + 1 < len(ls) and ls[iu + 1] == v:
                    adjacent = w
                    break
            if adjacent is None:
                continue
            kids_u = list(tree.children[u])
            iv = kids_u.index(v)
            combined = kids_u[:iv] + list(tree.children[v]) + kids_u[iv + 1:]
            r = len(combined)
            members = []
            for i in range(r + 1):
                for j in range(i, r + 1):
                    new_u = combined[:i] + [v] + combined[j:]
                    new_v = combined[i:j]
                    parent = list(tree.parent)
                    children = [list(c) for c in tree.children]
                    children[u] = new_u
                    children[v] = new_v
                    for c in new_u:
                        parent[c] = u
                    for c in new_v:
                        parent[c] = v
                    t2 = Tree(tuple(parent), tuple(tuple(c) for c in children))
                    q2 = Quilt(adjacent, t2)
                    pre = _prenormal(q2, mset)
                    if pre is not None:
                        members.append(pre)
            out.append(tuple(members))
    return tuple(out)


_ECHELONS = {}
_NORMAL_FORMS = {}


def _component_echelon(start):
    """Echelonized redistribution relations on the component of a key.

    The component is the closure of the key under family membership; the
    echelon maps each leader (the largest key of a reduced relation) to
    a relation vector with leader coefficient one.  Every member of the
    component shares the echelon, so it is computed once.
    """
    if start in _ECHELONS:
        return _ECHELONS[start]
    from fractions import Fraction
    seen = {start}
    frontier = [start]
    raw = []
    rel_seen = set()
    while frontier:
        k = frontier.pop()
        for fam in _families(k):
            vec = {}
            for mem, s in fam:
                vec[mem] = vec.get(mem, 0) + s
            vec = {m: c for m, c in vec.items() if c}
            if not vec:
                continue
            sig = tuple(sorted((m.key(), c) for m, c in vec.items()))
            if sig not in rel_seen:
                rel_seen.add(sig)
                raw.append(vec)
            for m in vec:
                if m not in seen:
                    seen.add(m)
                    frontier.append(m)
    basis = {}
    for vec in raw:
        vec = {m: Fraction(c) for m, c in vec.items()}
        while vec:
            lead = max(vec, key=MQuilt.sort_key)
            if lead not in basis:
                lc = vec[lead]
                basis[lead] = {m: c / lc for m, c in vec.items()}
                break
            coeff = vec[lead]
            for m, c in basis[lead].items():
                w = vec.get(m, Fraction(0)) - coeff * c
                if w:
                    vec[m] = w
                else:
                    vec.pop(m, None)
    echelon = basis
    for m in seen:
        _ECHELONS[m] = echelon
    return echelon


def _normal_form_of_key(key):
    """The reduced form of a single basis key against its component."""
    if key in _NORMAL_FORMS:
        return _NORMAL_FORMS[key]
    from fractions import Fraction
    echelon = _component_echelon(key)
    vec = {key: Fraction(1)}
    while True:
        lead = None
        for m in sorted(vec, key=MQuilt.sort_key, reverse=True):
            if m in echelon:
                lead = m
                break
        if lead is None:
            break
        coeff = vec.pop(lead)
        for m, c in echelon[lead].items():
            if m == lead:
                continue
            w = vec.get(m, Fraction(0)) - coeff * c
            if w:
                vec[m] = w
            else:
                vec.pop(m, None)
    _NORMAL_FORMS[key] = vec
    return vec


def _reduce(sum_):
    """Reduce every key of a sum to its relation normal form."""
    ring = sum_.ring
    out = FormalSum(ring)
    for key, c in sum_.terms.items():
        nf = _normal_form_of_key(key)
        out = combine(out, FormalSum(ring, [(m, ring.coerce(f)) for m, f in nf.items()]),
                      1, c)
    return out


def normalize(quilt, mset, coeff=1, ring=ZZ):
    """Full normal form of a raw marked quilt as a FormalSum."""
    return _reduce(prenormalize(quilt, mset, coeff, ring))


def reduce_sum(sum_):
    return _reduce(sum_)


def mq_compose_basis(x, a, y, ring=ZZ):
    """Partial composition of basis elements, normalized.

    The sign (-1)^{kx * deg(word of y)} accounts for the outer odd marks
    passing the inserted element and for restoring ascending slot order
    of the marks.
    """
    assert 1 <= a <= x.arity
    kx = x.marks
    nx, ny = x.arity, y.arity
    Ny = y.quilt.n
    sign = -1 if (kx * y.quilt.degree) % 2 else 1
    marks = ([v + a - 1 for v in range(ny + 1, Ny + 1)] +
             [u + Ny - 1 for u in range(nx + 1, nx + kx + 1)])
    out = FormalSum(ring)
    for q, c in compose(x.quilt, a, y.quilt).terms.items():
        out = combine(out, prenormalize(q, marks, ring.mul(ring.coerce(sign), ring.coerce(c)), ring))
    return _reduce(out)


def mq_compose(xs, a, ys):
    """Bilinear extension of mq_compose_basis to formal sums."""
    ring = xs.ring
    out = FormalSum(ring)
    for kx, cx in xs.terms.items():
        for ky, cy in ys.terms.items():
            out = combine(out, mq_compose_basis(kx, a, ky, ring), 1,
                          ring.mul(cx, cy))
    return _reduce(out)


def m_element(ring=ZZ):
    return FormalSum(ring, [(M_ELEMENT_KEY, 1)])


def delta_element(ring=ZZ):
    """The arity-1 element whose adjoint action extends the boundary."""
    col = from_quilt(Quilt(Word((1, 2), 2), Tree((0, 0, 1), ((), (2,), ()))))
    one = FormalSum(ring, [(col, 1)])
    return combine(mq_compose(one, 1, m_element(ring)),
                   mq_compose(one, 2, m_element(ring)), 1, -1)


def mq_boundary(xs):
    """The word boundary, extended by zero on the marks."""
    ring = xs.ring
    out = FormalSum(ring)
    for x, c in xs.terms.items():
        word = x.quilt.word
        marks = x.marked()
        for i in range(len(word.letters)):
            f = face(x.quilt, i)
            if f is None:
                continue
            out = combine(out, prenormalize(
                f, marks, ring.mul(c, ring.coerce(face_sign(word, i))), ring))
    return _reduce(out)


def mq_permute(xs, sigma):
    """Right action of a permutation of the unmarked slots."""
    ring = xs.ring
    out = FormalSum(ring)
    for x, c in xs.terms.items():
        full = dict(sigma) if isinstance(sigma, dict) else {
            i + 1: v for i, v in enumerate(sigma)}
        for v in range(1, x.arity + 1):
            full.setdefault(v, v)
        for v in x.marked():
            full[v] = v
        q = x.quilt.permute(full)
        out = combine(out, prenormalize(q, x.marked(), c, ring))
    return _reduce(out)


def ad_delta(xs):
    """ad_Delta x = Delta o_1 x - (-1)^{deg x} sum_a x o_a Delta."""
    ring = xs.ring
    delta = delta_element(ring)
    out = FormalSum(ring)
    for x, c in xs.terms.items():
        one = FormalSum(ring, [(x, c)])
        out = combine(out, mq_compose(delta, 1, one))
        sgn = -1 if x.degree % 2 else 1
        for a in range(1, x.arity + 1):
            out = combine(out, mq_compose(one, a, delta), 1, ring.neg(ring.coerce(sgn)))
    return _reduce(out)


def boundary_prime(xs):
    return _reduce(combine(mq_boundary(xs), ad_delta(xs)))


def to_quilt_sum(xs):
    """The dg-operad map sending the mark generator to zero."""
    return FormalSum(xs.ring, [(x.quilt, c) for x, c in xs.terms.items()
                               if x.marks == 0])


# ----------------------------------------------- Gerstenhaber homotopies

def gerstenhaber_element(name, ring=ZZ):
    """The named homotopy elements: the shifted product and bracket with
    the explicit homotopies for their relations.

    The combined derivation identity needs C3 - D3^(123): the permuted
    second-argument lemma is subtracted from the first-argument one.
    """
    from .quilts import parse_quilt

    def one(text, marks, coeff=1):
        return FormalSum(ring, [(MQuilt(parse_quilt(text), marks), coeff)])

    if name == "M2":
        return one("312;3(1,2)", 1)
    if name == "P2":
        return combine(one("12;1(2)", 0), one("3121;3(2,1)", 1))
    if name == "L2":
        p2 = gerstenhaber_element("P2", ring)
        return combine(p2, mq_permute(p2, {1: 2, 2: 1}), 1, -1)
    if name in ("P3'", "P3prime"):
        return combine(one("1232;1(3,2)", 0), one("421232;4(1(3),2)", 1))
    if name == "L3":
        from itertools import permutations
        p3 = gerstenhaber_element("P3'", ring)
        out = FormalSum(ring)
        for perm in permutations((1, 2, 3)):
            inv = sum(1 for i in range(3) for j in range(i + 1, 3)
                      if perm[i] > perm[j])
            sigma = {i + 1: perm[i] for i in range(3)}
            out = combine(out, mq_permute(p3, sigma), 1, -1 if inv % 2 else 1)
        return out
    if name == "C3":
        return one("41232;4(1(3),2)", 1)
    if name == "D3":
        return combine(combine(one("123;1(2,3)", 0), one("41213;4(2,1(3))", 1)),
                       one("4512131;4(5(2,3),1)", 2, -1))
    raise ValueError("unknown element %r" % name)


IDENTITY_NAMES = ("associative", "commutative", "jacobi",
                  "derivation1", "derivation2", "gerstenhaber")


def verify_identity(name, ring=ZZ):
    """Residual (expected zero) of the named homotopy identity."""
    g = lambda nm: gerstenhaber_element(nm, ring)
    t12 = {1: 2, 2: 1}
    t23 = {1: 1, 2: 3, 3: 2}
    c123 = {1: 2, 2: 3, 3: 1}
    c321 = {1: 3, 3: 2, 2: 1}
    if name == "associative":
        M2 = g("M2")
        return combine(mq_compose(M2, 1, M2), mq_compose(M2, 2, M2))
    if name == "commutative":
        M2 = g("M2")
        return combine(combine(M2, mq_permute(M2, t12)),
                       boundary_prime(g("P2")))
    if name == "jacobi":
        L2 = g("L2")
        LL = mq_compose(L2, 1, L2)
        jac = combine(combine(LL, mq_permute(LL, c123)), mq_permute(LL, c321))
        return combine(jac, boundary_prime(g("L3")), 1, -1)
    if name == "derivation1":
        M2, P2 = g("M2"), g("P2")
        lhs = combine(combine(mq_compose(P2, 1, M2),
                              mq_permute(mq_compose(M2, 1, P2), t23), 1, -1),
                      mq_compose(M2, 2, P2), 1, -1)
        return combine(lhs, boundary_prime(g("C3")), 1, -1)
    if name == "derivation2":
        M2, P2 = g("M2"), g("P2")
        lhs = combine(combine(mq_compose(P2, 2, M2),
                              mq_compose(M2, 1, P2), 1, -1),
                      mq_permute(mq_compose(M2, 2, P2), t12), 1, -1)
        return combine(lhs, boundary_prime(g("D3")), 1, -1)
    if name == "gerstenhaber":
        M2, L2 = g("M2"), g("L2")
        lhs = combine(combine(mq_compose(L2, 1, M2),
                              mq_permute(mq_compose(M2, 1, L2), t23), 1, -1),
                      mq_compose(M2, 2, L2), 1, -1)
        homotopy = combine(g("C3"), mq_permute(g("D3"), c123), 1, -1)
        return combine(lhs, boundary_prime(homotopy), 1, -1)
    raise ValueError("unknown identity %r" % name)


# ------------------------------------------------- modification formula

def _insert_before_first(word, u, new):
    i = word.letters.index(u)
    return Word(word.letters[:i] + (new,) + word.letters[i:], word.n + 1)


def _insert_after_last(word, u, new):
    i = max(word.occurrences(u))
    return Word(word.letters[:i + 1] + (new,) + word.letters[i + 1:], word.n + 1)


def _grow(tree):
    parent = list(tree.parent) + [0]
    children = [list(c) for c in tree.children] + [[]]
    return parent, children


def modification(q, kind, u, pair=None):
    """The five ways of inserting vertex n+1 into a quilt.

    kind 1: n+1 becomes the parent of u (word: before the first u);
    kind 2: n+1 becomes a child of u at a given corner (after the last u);
    kind 3: n+1 takes u's place, over u's first child v and u, in order (v, u);
    kind 4: like 3 with the last child w, but n+1 has children (u, w);
    kind 5: n+1 replaces the consecutive children pair (v, w) of u.
    """
    n = q.n
    new = n + 1
    tree, word = q.tree, q.word
    parent, children = _grow(tree)
    if kind == 1:
        p = tree.parent[u]
        if p:
            children[p][children[p].index(u)] = new
        parent[new] = p
        parent[u] = new
        children[new] = [u]
        w2 = _insert_before_first(word, u, new)
    elif kind == 2:
        slot = pair  # insertion index among u's children
        children[u].insert(slot, new)
        parent[new] = u
        w2 = _insert_after_last(word, u, new)
    elif kind in (3, 4):
        v = tree.children[u][0] if kind == 3 else tree.children[u][-1]
        p = tree.parent[u]
        if p:
            children[p][children[p].index(u)] = new
        parent[new] = p
        children[u].remove(v)
        parent[u] = new
        parent[v] = new
        children[new] = [v, u] if kind == 3 else [u, v]
        w2 = _insert_before_first(word, u, new)
    elif kind == 5:
        v, w = pair
        i = tree.children[u].index(v)
        assert tree.children[u][i + 1] == w
        children[u][i:i + 2] = [new]
        parent[new] = u
        parent[v] = new
        parent[w] = new
        children[new] = [v, w]
        w2 = _insert_after_last(word, u, new)
    else:
        raise ValueError("unknown modification kind %r" % kind)
    t2 = Tree(tuple(parent), tuple(tuple(c) for c in children))
    return Quilt(w2, t2)


def ad_delta_via_modifications(q, ring=ZZ):
    """ad_Delta of a plain quilt through the modification formula:
    -(-1)^{deg} (Q3_u + Q4_u) o m over vertices u with children, plus
    (-1)^{deg} Q5_{u,v,w} o m over consecutive children pairs."""
    n = q.n
    sgn = -1 if q.degree % 2 else 1
    out = FormalSum(ring)
    for u in range(1, n + 1):
        if not q.tree.children[u]:
            continue
        for kind in (3, 4):
            out = combine(out, prenormalize(modification(q, kind, u), [n + 1],
                                            ring.coerce(-sgn), ring))
    for u in range(1, n + 1):
        cs = q.tree.children[u]
        for i in range(len(cs) - 1):
            out = combine(out, prenormalize(
                modification(q, 5, u, (cs[i], cs[i + 1])), [n + 1],
                ring.coerce(sgn), ring))
    return _reduce(out)
