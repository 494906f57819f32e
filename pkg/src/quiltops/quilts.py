"""Quilts: compatible (word, planar tree) pairs on the same vertex set.

The two axioms:
  (1) if u occurs before v anywhere in the word, u is not a strict
      descendant of v;
  (2) any vertex occurring between two occurrences of u is strictly to
      the left of u in the tree.

The degree of a quilt is the degree of its word.
"""

from .trees import Tree, parse_tree
from .words import Word, enumerate_words, parse_word


class QuiltAxiomViolated(ValueError):
    def __init__(self, axiom, u, v, message=None):
        self.axiom = axiom
        self.witness = (u, v)
        super().__init__(message or
                         "quilt axiom (%d) fails on vertices (%d, %d)" % (axiom, u, v))


class Quilt:
    __slots__ = ("word", "tree", "_key")

    def __init__(self, word, tree):
        if word.n != tree.n:
            raise QuiltAxiomViolated(0, word.n, tree.n, "arity mismatch")
        check_axioms(word, tree)
        self.word = word
        self.tree = tree
        self._key = (word.key(), tree.key())

    @property
    def n(self):
        return self.word.n

    @property
    def degree(self):
        return self.word.degree

    def key(self):
        return self._key

    def sort_key(self):
        return (self.n, self.degree, self.word.letters, self.tree.sort_key())

    def __eq__(self, other):
        return isinstance(other, Quilt) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def permute(self, sigma):
        return Quilt(self.word.permute(sigma), self.tree.permute(sigma))

    def __str__(self):
        return "%s;%s" % (self.word, self.tree)

    __repr__ = __str__


def check_axioms(word, tree):
    """Raise QuiltAxiomViolated with a witness if (word, tree) is no quilt."""
    letters = word.letters
    first, last = {}, {}
    for i, x in enumerate(letters):
        first.setdefault(x, i)
        last[x] = i
    for u in range(1, word.n + 1):
        if first[u] != last[u]:
            for v in set(letters[first[u] + 1:last[u]]):
                if v != u and not tree.left_of(v, u):
                    raise QuiltAxiomViolated(
                        2, u, v, "quilt axiom (2) fails: %d is not left of %d"
                        % (v, u))
    for u in range(1, word.n + 1):
        for v in range(1, word.n + 1):
            if u == v:
                continue
            # axiom (1): some u before some v means u is not below v
            if first[u] < last[v] and tree.lt(v, u):
                raise QuiltAxiomViolated(1, u, v)


def validate_quilt(word, tree):
    """Build a quilt from raw data: a letter sequence and tree data.

    word may be a Word, a string ("1232"), or an iterable of ints;
    tree may be a Tree, a string ("1(3,2)"), or a (parent, children) pair.
    """
    if isinstance(word, str):
        word = parse_word(word)
    elif not isinstance(word, Word):
        word = Word(tuple(word))
    if isinstance(tree, str):
        tree = parse_tree(tree)
    elif not isinstance(tree, Tree):
        parent, children = tree
        tree = Tree(parent, children)
    return Quilt(word, tree)


def parse_quilt(text):
    """Parse the "word;tree" text form, e.g. "1232;1(3,2)"."""
    ws, ts = text.split(";")
    return Quilt(parse_word(ws), parse_tree(ts))


def compatible_trees(word):
    """All trees making the word into a quilt, built constructively.

    Vertices are inserted as leaves in down-order (ancestors always occur
    wholly before descendants, so this reaches every compatible tree).
    At each insertion the two quilt axioms are checked against the
    vertices already placed; relations between placed vertices never
    change later, so the pruning is exact.
    """
    n = word.n
    letters = word.letters
    first, last = {}, {}
    for i, x in enumerate(letters):
        first.setdefault(x, i)
        last[x] = i
    order = word.down_order()
    # axiom (2) obligations: w must end up strictly left of u
    left_pairs = []
    for u in order:
        for w in word.between(u):
            left_pairs.append((w, u))
    obligations = {}
    for w, u in left_pairs:
        obligations.setdefault(w, []).append(u)
        obligations.setdefault(u, []).append(w)

    parent = {order[0]: 0}
    children = {order[0]: []}
    out = []

    def ancestors(v):
        chain = []
        while v:
            chain.append(v)
            v = parent[v]
        return chain

    def left_of(u, v):
        au = ancestors(u)[::-1]
        av = ancestors(v)[::-1]
        i = 0
        while i < len(au) and i < len(av) and au[i] == av[i]:
            i += 1
        if i >= len(au) or i >= len(av):
            return False  # comparable
        cs = children[au[i - 1]]
        return cs.index(au[i]) < cs.index(av[i])

    def ok(u):
        for w, v in left_pairs:
            if u in (w, v) and w in parent and v in parent:
                if not left_of(w, v):
                    return False
        return True

    def place(k):
        if k == n:
            par = [0] * (n + 1)
            kid = [()] * (n + 1)
            for v, p in parent.items():
                par[v] = p
                kid[v] = tuple(children[v])
            out.append(Tree(tuple(par), tuple(kid)))
            return
        u = order[k]
        for p in order[:k]:
            if last[p] >= first[u]:
                continue
            for slot in range(len(children[p]) + 1):
                children[p].insert(slot, u)
                parent[u] = p
                children[u] = []
                if ok(u):
                    place(k + 1)
                children[p].pop(slot)
                del parent[u]
                del children[u]

    if order[0] == letters[0]:
        place(1)
    out.sort(key=Tree.sort_key)
    return out


def enumerate_quilts(n, degree=None):
    """All quilts of arity n (optionally one degree), canonically ordered."""
    out = []
    for word in enumerate_words(n, degree):
        for tree in compatible_trees(word):
            out.append(Quilt(word, tree))
    out.sort(key=Quilt.sort_key)
    return out


def identity_quilt():
    return Quilt(Word((1,), 1), Tree((0, 0), ((), ())))
