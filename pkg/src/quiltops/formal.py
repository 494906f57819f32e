"""Finitely supported linear combinations over canonical basis keys.

A FormalSum stores only nonzero coefficients, keyed by hashable basis
elements (trees, words, quilts, m-quilts, cochain keys).  Keys must
expose a total order through sort_key() or be plain sortable values;
iteration and rendering always use that order, so reports are
deterministic.
"""

from .rings import ZZ, Ring, RingError


def _sort_key(k):
    sk = getattr(k, "sort_key", None)
    return sk() if callable(sk) else k


class FormalSum:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        assert isinstance(ring, Ring)
        self.ring = ring
        data = {}
        if terms:
            for key, coeff in (terms.items() if isinstance(terms, dict) else terms):
                c = ring.coerce(coeff)
                if key in data:
                    c = ring.add(data[key], c)
                if ring.is_zero(c):
                    data.pop(key, None)
                else:
                    data[key] = c
        self.terms = data

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def single(cls, key, coeff=1, ring=ZZ):
        return cls(ring, [(key, coeff)])

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, key):
        return self.terms.get(key, self.ring.zero)

    def __eq__(self, other):
        return (isinstance(other, FormalSum) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(self.items())))

    def __add__(self, other):
        return combine(self, other, 1, 1)

    def __sub__(self, other):
        return combine(self, other, 1, -1)

    def __neg__(self):
        return self.scale(-1)

    def __rmul__(self, c):
        return self.scale(c)

    def scale(self, c):
        ring = self.ring
        c = ring.coerce(c)
        if ring.is_zero(c):
            return FormalSum(ring)
        return FormalSum(ring, [(k, ring.mul(c, v)) for k, v in self.terms.items()])

    def map_keys(self, fn):
        """Apply fn to every key; collisions are summed."""
        return FormalSum(self.ring, [(fn(k), v) for k, v in self.terms.items()])

    def bind(self, fn):
        """Substitute each key by a FormalSum: sum of coeff * fn(key)."""
        out = FormalSum(self.ring)
        for k, v in self.terms.items():
            out = combine(out, fn(k), 1, v)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k, v in self.items():
            ks = str(k)
            if v == 1:
                s = ks
            elif v == -1:
                s = "-" + ks
            else:
                s = "%s*%s" % (v, ks)
            if bits and not s.startswith("-"):
                bits.append("+ " + s)
            elif bits:
                bits.append("- " + s[1:])
            else:
                bits.append(s)
        return " ".join(bits)

    __repr__ = __str__


def combine(a, b, ca=1, cb=1):
    """Exact linear combination ca*a + cb*b with zero pruning."""
    if a.ring != b.ring:
        raise RingError("ring mismatch: %s vs %s" % (a.ring, b.ring))
    ring = a.ring
    ca = ring.coerce(ca)
    cb = ring.coerce(cb)
    data = {}
    for src, c in ((a, ca), (b, cb)):
        if ring.is_zero(c):
            continue
        for k, v in src.terms.items():
            w = ring.add(data.get(k, ring.zero), ring.mul(c, v))
            if ring.is_zero(w):
                data.pop(k, None)
            else:
                data[k] = w
    out = FormalSum(ring)
    out.terms = data
    return out


def ring_map(s, target):
    """Coefficientwise image of a sum in another ring, zero pruned."""
    return FormalSum(target, [(k, v) for k, v in s.terms.items()])


def parse_formal(text, key_parser, ring=ZZ):
    """Inverse of str() for sums whose keys are parsed by key_parser.

    Accepts strings like "-n1 + 2*n2 - n3"; whitespace is flexible.
    """
    from fractions import Fraction
    s = text.strip()
    if s == "0":
        return FormalSum(ring)
    s = s.replace("-", "+-")
    terms = []
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        if "*" in chunk:
            cs, ks = chunk.split("*", 1)
            coeff = Fraction(cs.strip())
            if ring == ZZ:
                coeff = int(coeff)
        else:
            ks = chunk
            coeff = 1
        terms.append((key_parser(ks.strip()), sign * coeff))
    return FormalSum(ring, terms)
