"""Faces, boundaries, extensions and partial composition.

An extension realizes the splice of an inner structure into an outer one
at a vertex a, mediated by the canonical maps

    alpha(j) = j + a - 1            (inject the inner labels)
    beta(k)  = k, a, or k + 1 - n   (collapse the inner block to a)

Word extensions are generated constructively from weakly increasing maps
kappa sending the non-final occurrences of a in the outer word to cut
positions in the inner word; tree extensions from weakly increasing maps
sending the children of a to corners of the inner tree.  The exponential
filter over all candidates survives only in the test oracles.
"""

from itertools import combinations_with_replacement

from .formal import FormalSum
from .rings import ZZ
from .trees import Tree
from .words import Word
from .quilts import Quilt


def alpha_map(n, m, a):
    return lambda j: j + a - 1


def beta_map(n, m, a):
    def beta(k):
        if k < a:
            return k
        if k < a + n:
            return a
        return k + 1 - n
    return beta


class Extension:
    """One extension: the result plus the maps identifying inner and outer."""

    __slots__ = ("result", "inner_arity", "outer_arity", "a")

    def __init__(self, result, inner_arity, outer_arity, a):
        self.result = result
        self.inner_arity = inner_arity
        self.outer_arity = outer_arity
        self.a = a

    def alpha(self, j):
        return j + self.a - 1

    def beta(self, k):
        return beta_map(self.inner_arity, self.outer_arity, self.a)(k)

    def __repr__(self):
        return "Ext(%r)" % (self.result,)


# ---------------------------------------------------------------- faces

def face(x, i):
    """Delete occurrence i if its vertex is repeated, else None (zero)."""
    if isinstance(x, Quilt):
        w = face(x.word, i)
        return None if w is None else Quilt(w, x.tree)
    letters = x.letters
    if not (0 <= i < len(letters)):
        raise IndexError("occurrence %d out of range" % i)
    if letters.count(letters[i]) < 2:
        return None
    return Word(letters[:i] + letters[i + 1:], x.n)


def face_sign(word, i):
    """Sign of the face at occurrence i.

    Caesurae are numbered 1, 2, ... left to right; the k'th caesura has
    sign (-1)^k.  A last occurrence whose previous occurrence is the k'th
    caesura is numbered k+1.
    """
    letters = word.letters
    a = letters[i]
    if word.is_caesura(i):
        return -1 if word.caesura_number(i) % 2 else 1
    prev = max(j for j in word.occurrences(a) if j < i)
    k = word.caesura_number(prev)
    return -1 if (k + 1) % 2 else 1


def boundary(x):
    """Signed sum of faces; lowers degree by one."""
    word = x.word if isinstance(x, Quilt) else x
    out = FormalSum(ZZ)
    for i in range(len(word.letters)):
        f = face(x, i)
        if f is not None:
            out = out + FormalSum.single(f, face_sign(word, i))
    return out


# ----------------------------------------------------------- extensions

def tree_extensions(outer, inner, a):
    """All extensions of the tree `outer` by `inner` at vertex a.

    The children of a reattach at corners of the inner tree; a corner is
    an occurrence in the corner word.  Count: C(2*#inner + r - 2, r) for
    r children of a.
    """
    m, n = outer.n, inner.n
    assert 1 <= a <= m
    N = n + m - 1
    beta_inv = lambda u: u if u < a else u + n - 1
    inner_root = inner.root + a - 1
    corners = inner.corner_word()
    kids_a = outer.children[a]
    r = len(kids_a)
    # which corner of its vertex each corner-word position is
    occ_index = []
    seen = {}
    for u in corners:
        occ_index.append(seen.get(u, 0))
        seen[u] = seen.get(u, 0) + 1

    out = []
    for kappa in combinations_with_replacement(range(len(corners)), r):
        children = [[] for _ in range(N + 1)]
        # inner tree relabelled by alpha
        for v in range(1, n + 1):
            children[v + a - 1] = [c + a - 1 for c in inner.children[v]]
        # outer tree away from a; the inner root takes a's place
        for v in range(1, m + 1):
            if v == a:
                continue
            children[beta_inv(v)] = [
                inner_root if c == a else beta_inv(c)
                for c in outer.children[v]
            ]
        # a's children reattach at the chosen corners of the inner tree
        inserted = {}
        for child, k in zip(kids_a, kappa):
            key = (corners[k] + a - 1, occ_index[k])
            inserted.setdefault(key, []).append(beta_inv(child))
        if inserted:
            for u in range(1, N + 1):
                base = children[u]
                if not any((u, j) in inserted for j in range(len(base) + 1)):
                    continue
                rebuilt = []
                for j in range(len(base) + 1):
                    rebuilt.extend(inserted.get((u, j), []))
                    if j < len(base):
                        rebuilt.append(base[j])
                children[u] = rebuilt
        parent = [0] * (N + 1)
        for u in range(1, N + 1):
            for c in children[u]:
                parent[c] = u
        out.append(Tree(tuple(parent), tuple(tuple(c) for c in children)))
    return out


def word_extensions(outer, inner, a):
    """All extensions of the word `outer` by `inner` at vertex a.

    kappa assigns to each non-final occurrence of a a cut position in the
    inner word; the inner word is sliced into overlapping pieces (the cut
    letter is duplicated) which replace the occurrences of a in order.
    Count: C(len(inner) + r - 1, r) for r+1 occurrences of a.
    """
    m, n = outer.n, inner.n
    assert 1 <= a <= m
    beta_inv = lambda u: u if u < a else u + n - 1
    occ = outer.occurrences(a)
    r = len(occ) - 1
    L = len(inner.letters)
    out = []
    for kappa in combinations_with_replacement(range(L), r):
        pieces = []
        for i in range(r + 1):
            start = 0 if i == 0 else kappa[i - 1]
            end = kappa[i] if i < r else L - 1
            pieces.append([x + a - 1 for x in inner.letters[start:end + 1]])
        letters = []
        count_a = 0
        for x in outer.letters:
            if x == a:
                letters.extend(pieces[count_a])
                count_a += 1
            else:
                letters.append(beta_inv(x))
        out.append(Word(tuple(letters), n + m - 1))
    return out


def extension_sign(outer, inner, a, ext_word):
    """Sign of a word extension: the shuffle relating the interposed
    vertices of the factors (identified with vertices of the extension)
    to the interposed vertices of the extension in down-order."""
    m, n = outer.n, inner.n
    beta_inv = lambda u: u if u < a else u + n - 1
    alpha = lambda j: j + a - 1
    source = []
    for v in outer.interposed():
        if v == a:
            source.append(alpha(inner.letters[0]))
        else:
            source.append(beta_inv(v))
    for w in inner.interposed():
        source.append(alpha(w))
    target = ext_word.interposed()
    assert sorted(source) == sorted(target), (outer, inner, a, ext_word)
    pos = {v: i for i, v in enumerate(target)}
    seq = [pos[v] for v in source]
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
              if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def quilt_extensions(outer, inner, a):
    """Pairs of word and tree extensions; every pair is a valid quilt."""
    out = []
    for w in word_extensions(outer.word, inner.word, a):
        s = extension_sign(outer.word, inner.word, a, w)
        for t in tree_extensions(outer.tree, inner.tree, a):
            out.append((Quilt(w, t), s))
    return out


def compose(x, a, y):
    """Partial composition x o_a y as a FormalSum over Z.

    Trees compose as the unsigned sum of tree extensions (the Brace
    operad); words as the signed sum of word extensions; quilts as the
    product set with the word-side signs.
    """
    if isinstance(x, Tree):
        return FormalSum(ZZ, [(t, 1) for t in tree_extensions(x, y, a)])
    if isinstance(x, Word):
        return FormalSum(ZZ, [(w, extension_sign(x, y, a, w))
                              for w in word_extensions(x, y, a)])
    if isinstance(x, Quilt):
        return FormalSum(ZZ, quilt_extensions(x, y, a))
    raise TypeError("cannot compose %r" % (x,))


def boundary_sum(xs):
    """Linear extension of boundary to formal sums."""
    from .formal import ring_map, combine
    ring = xs.ring
    out = FormalSum(ring)
    for k, c in xs.terms.items():
        out = combine(out, ring_map(boundary(k), ring), 1, c)
    return out


def compose_sums(xs, a, ys):
    """Bilinear extension of compose to formal sums."""
    ring = xs.ring
    out = FormalSum(ring)
    for kx, cx in xs.terms.items():
        for ky, cy in ys.terms.items():
            from .formal import ring_map, combine
            out = combine(out, ring_map(compose(kx, a, ky), ring),
                          1, ring.mul(cx, cy))
    return out
