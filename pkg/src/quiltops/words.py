"""Words over {1..n}: surjective, no consecutive repeats, no interlacing.

These span the arity-n part of the Gerstenhaber-Voronov operad.  The
degree of a word is length - n; caesurae (non-final occurrences) pair
off with interposed vertices, giving |W| = 2n - s - 1 where s counts
last-first pairs.
"""


class WordInvalid(ValueError):
    pass


class Word:
    __slots__ = ("n", "letters", "_key")

    def __init__(self, letters, n=None):
        letters = tuple(letters)
        if n is None:
            n = max(letters) if letters else 0
        seen = set(letters)
        if seen != set(range(1, n + 1)):
            raise WordInvalid("word %r is not surjective onto 1..%d" % (letters, n))
        for i in range(len(letters) - 1):
            if letters[i] == letters[i + 1]:
                raise WordInvalid("consecutive repetition at %d in %r" % (i, letters))
        _check_interlacing(letters)
        self.n = n
        self.letters = letters
        self._key = (n, letters)

    @property
    def degree(self):
        return len(self.letters) - self.n

    def __len__(self):
        return len(self.letters)

    def key(self):
        return self._key

    def sort_key(self):
        return (self.n, self.degree, self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def occurrences(self, a):
        return [i for i, x in enumerate(self.letters) if x == a]

    def count(self, a):
        return self.letters.count(a)

    def is_caesura(self, i):
        """Occurrence i has a later occurrence of the same vertex."""
        return self.letters[i] in self.letters[i + 1:]

    def caesura_positions(self):
        return [i for i in range(len(self.letters)) if self.is_caesura(i)]

    def caesura_number(self, i):
        """1-based position of caesura i in the left-to-right numbering."""
        assert self.is_caesura(i)
        return sum(1 for j in self.caesura_positions() if j <= i)

    def interposed(self):
        """The interposed vertices, in down-order.

        A vertex is interposed when it directly follows a caesura; such a
        letter is always a first occurrence, and this pairs interposed
        vertices bijectively with caesurae (so there are degree many).
        """
        inter = {self.letters[i + 1] for i in self.caesura_positions()}
        return [v for v in self.down_order() if v in inter]

    def is_interposed(self, v):
        return any(self.letters[i + 1] == v for i in self.caesura_positions())

    def between(self, u):
        """Vertices occurring strictly between two occurrences of u; this
        looser pattern is the one quilt axiom (2) and the grid diagrams
        use, not the caesura pairing."""
        occ = self.occurrences(u)
        if len(occ) < 2:
            return set()
        return {x for x in self.letters[occ[0] + 1:occ[-1]] if x != u}

    def down_order(self):
        """Vertices in order of first occurrence."""
        seen, out = set(), []
        for x in self.letters:
            if x not in seen:
                seen.add(x)
                out.append(x)
        return out

    def last_first_pairs(self):
        """Positions i such that letter i is a last occurrence and letter
        i+1 is a first occurrence."""
        out = []
        for i in range(len(self.letters) - 1):
            u, v = self.letters[i], self.letters[i + 1]
            if u not in self.letters[i + 1:] and v not in self.letters[:i + 1]:
                out.append(i)
        return out

    def permute(self, sigma):
        """Replace u by sigma^{-1}(u) (right group action)."""
        from .trees import _invert
        inv = _invert(sigma, self.n)
        return Word(tuple(inv[x] for x in self.letters), self.n)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)

    __repr__ = __str__


def _check_interlacing(letters):
    """Reject u...v...u...v.  Once we return to u, every vertex strictly
    between the two u's is closed and may not occur again."""
    closed = set()
    last_pos = {}
    for i, x in enumerate(letters):
        if x in closed:
            raise WordInvalid("interlacing at position %d in %r" % (i, letters))
        if x in last_pos:
            for y in set(letters[last_pos[x] + 1:i]):
                closed.add(y)
        last_pos[x] = i


def parse_word(text):
    """Parse "1232" or "1,2,3,2"."""
    text = text.strip()
    if "," in text:
        letters = tuple(int(t) for t in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    return Word(letters)


def word_statistics(w):
    """Degree, caesurae, interposed vertices, last-first count, down order.

    The caesurae pair with interposed vertices: the vertex right after a
    caesura is interposed, and this is a bijection.
    """
    caesurae = w.caesura_positions()
    pairs = [(i, w.letters[i + 1]) for i in caesurae]
    stats = {
        "degree": w.degree,
        "caesurae": caesurae,
        "interposed": w.interposed(),
        "caesura_pairs": pairs,
        "lastFirstPairs": len(w.last_first_pairs()),
        "downOrder": w.down_order(),
    }
    assert len(w) == 2 * w.n - stats["lastFirstPairs"] - 1
    assert len(caesurae) == len(stats["interposed"]) == w.degree
    return stats


def enumerate_words(n, degree=None):
    """All words of arity n (optionally of one degree), canonically ordered.

    Constructive: grow letter by letter; a letter is appendable unless it
    repeats the previous letter or has been closed by a return to an
    earlier letter (which is exactly the no-interlacing condition).
    """
    assert n >= 1
    max_len = 2 * n - 1 if degree is None else n + degree
    out = []

    def grow(letters, closed, last_pos):
        if len(letters) >= n and len(set(letters)) == n:
            if degree is None or len(letters) - n == degree:
                out.append(Word(tuple(letters), n))
        if len(letters) >= max_len:
            return
        for x in range(1, n + 1):
            if letters and letters[-1] == x:
                continue
            if x in closed:
                continue
            newly = set()
            if x in last_pos:
                newly = set(letters[last_pos[x] + 1:]) - closed
            old = last_pos.get(x)
            letters.append(x)
            closed |= newly
            last_pos[x] = len(letters) - 1
            grow(letters, closed, last_pos)
            letters.pop()
            closed -= newly
            if old is None:
                del last_pos[x]
            else:
                last_pos[x] = old

    grow([], set(), {})
    out.sort(key=Word.sort_key)
    return out
