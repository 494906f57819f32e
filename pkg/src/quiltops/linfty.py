"""Strong homotopy Lie structure: maximal quilts and the L-infinity
relations in the quilt and marked-quilt operads.

A quilt of arity n is maximal when its degree is n-2; the alternating
sum of all maximal quilts (signed by the permutation from labelled order
to first-occurrence order) satisfies the L-infinity relations with the
word boundary.  Composing with the odd generator gives the marked
version, and passing to coinvariants gives the unsymmetrized version.
"""

from itertools import combinations

from .formal import FormalSum, combine
from .rings import ZZ
from .quilts import enumerate_quilts
from .extensions import boundary_sum, compose_sums
from .mquilt import (MQuilt, from_quilt, m_element, mq_compose, mq_permute,
                     boundary_prime, reduce_sum)


def maximal_quilts(n):
    """All quilts of arity n and degree n-2 (empty below arity 2).

    Their words all have the shape a b ... b with a the root and b a
    repeated leaf.
    """
    if n < 2:
        return []
    out = enumerate_quilts(n, n - 2)
    for q in out:
        w = q.word.letters
        assert w[0] == q.tree.root and w[-1] == w[1]
        assert not q.tree.children[w[1]]
    return out


def sgn_K(q):
    """(-1)^{1 + n(n-1)/2} times the sign of the permutation from labelled
    order to first-occurrence order."""
    n = q.n
    down = q.word.down_order()
    inv = sum(1 for i in range(n) for j in range(i + 1, n)
              if down[i] > down[j])
    base = -1 if inv % 2 else 1
    lead = -1 if (1 + n * (n - 1) // 2) % 2 else 1
    return lead * base


def L0(n, ring=ZZ):
    """Alternating sum of all maximal quilts of arity n."""
    return FormalSum(ring, [(q, sgn_K(q)) for q in maximal_quilts(n)])


def L0_m(n, ring=ZZ):
    """L0 as a sum of unmarked basis elements of the marked operad."""
    return FormalSum(ring, [(from_quilt(q), sgn_K(q)) for q in maximal_quilts(n)])


def L1(n, ring=ZZ):
    """L0 of arity n+1 composed with the odd generator at the first slot."""
    return mq_compose(L0_m(n + 1, ring), 1, m_element(ring))


def L_full(n, ring=ZZ):
    """L_n = L0_n + L1_n in the marked operad (L0_1 is the Delta element)."""
    if n == 1:
        from .mquilt import delta_element
        return delta_element(ring)
    return combine(L0_m(n, ring), L1(n, ring))


def P0(n, ring=ZZ):
    """(-1)^{1+n(n-1)/2} times the sum of maximal quilts labelled in
    first-occurrence order."""
    lead = -1 if (1 + n * (n - 1) // 2) % 2 else 1
    terms = [(q, lead) for q in maximal_quilts(n)
             if q.word.down_order() == list(range(1, n + 1))]
    return FormalSum(ring, terms)


def P0_m(n, ring=ZZ):
    lead = -1 if (1 + n * (n - 1) // 2) % 2 else 1
    return FormalSum(ring, [(from_quilt(q), lead) for q in maximal_quilts(n)
                            if q.word.down_order() == list(range(1, n + 1))])


def P_full(n, ring=ZZ):
    """P_n = P0_n + P0_{n+1} o_1 m, the unsymmetrized L_n."""
    return combine(P0_m(n, ring), mq_compose(P0_m(n + 1, ring), 1, m_element(ring)))


def shuffles(p, q):
    """All (p, q)-shuffles of p+q letters, as permutation dicts with signs.

    sigma is increasing on 1..p and on p+1..p+q; the sign is the parity
    of the number of inversions.
    """
    n = p + q
    out = []
    for first_block in combinations(range(1, n + 1), p):
        rest = [x for x in range(1, n + 1) if x not in first_block]
        sigma = {}
        for i, v in enumerate(first_block):
            sigma[i + 1] = v
        for i, v in enumerate(rest):
            sigma[p + i + 1] = v
        image = [sigma[i] for i in range(1, n + 1)]
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if image[i] > image[j])
        out.append((sigma, -1 if inv % 2 else 1))
    return out


def _perm_inverse(sigma):
    return {v: k for k, v in sigma.items()}


def linfty_residual_quilt(n, ring=ZZ):
    """d L0_n + sum over p+q=n+1 and shuffles of the signed compositions,
    relabelled by the inverse shuffle; zero by the structure theorem."""
    res = boundary_sum(L0(n, ring)) if n >= 2 else FormalSum(ring)
    for p in range(2, n):
        q = n + 1 - p
        if q < 2:
            continue
        base = compose_sums(L0(p, ring), p, L0(q, ring))
        sgn_pq = -1 if ((p - 1) * q) % 2 else 1
        for sigma, sg in shuffles(p - 1, q):
            inv = _perm_inverse(sigma)
            term = base.map_keys(lambda x: x.permute(inv))
            res = combine(res, term, 1, ring.mul(ring.coerce(sgn_pq), ring.coerce(sg)))
    return res


def linfty_residual_mquilt(n, ring=ZZ):
    """Same with L_n and the extended boundary in the marked operad."""
    res = boundary_prime(L_full(n, ring))
    for p in range(2, n):
        q = n + 1 - p
        if q < 2:
            continue
        base = mq_compose(L_full(p, ring), p, L_full(q, ring))
        sgn_pq = -1 if ((p - 1) * q) % 2 else 1
        for sigma, sg in shuffles(p - 1, q):
            inv = _perm_inverse(sigma)
            term = mq_permute(base, inv)
            res = combine(res, term, 1, ring.mul(ring.coerce(sgn_pq), ring.coerce(sg)))
    return reduce_sum(res)


def linfty_residual_integer_route(n, ring=ZZ):
    """The characteristic-free cross-check: the marked-marked compositions
    sum to zero on the nose, without dividing by two.  Unlike the main
    relation, arity-one factors (where L1_1 is the Delta element)
    participate here."""
    res = FormalSum(ring)
    for p in range(1, n + 1):
        q = n + 1 - p
        if q < 1:
            continue
        base = mq_compose(L1(p, ring), p, L1(q, ring))
        sgn_pq = -1 if ((p - 1) * q) % 2 else 1
        for sigma, sg in shuffles(p - 1, q):
            inv = _perm_inverse(sigma)
            term = mq_permute(base, inv)
            res = combine(res, term, 1, ring.mul(ring.coerce(sgn_pq), ring.coerce(sg)))
    return reduce_sum(res)


def coinvariant_reduce(s):
    """Image in the coinvariants twisted by sign: each quilt is sent to
    its first-occurrence-labelled representative times the sign of the
    relabelling; orbits with odd stabilizer sign die."""
    ring = s.ring
    out = FormalSum(ring)
    for x, c in s.terms.items():
        q = x.quilt if isinstance(x, MQuilt) else x
        down = q.word.down_order()
        sigma = {down[i]: i + 1 for i in range(q.n)}
        image = [sigma[i] for i in range(1, q.n + 1)]
        inv = sum(1 for i in range(len(image)) for j in range(i + 1, len(image))
                  if image[i] > image[j])
        sg = -1 if inv % 2 else 1
        rep = q.permute(_perm_inverse(sigma))
        out = combine(out, FormalSum(ring, [(rep, ring.mul(c, ring.coerce(sg)))]))
    return out


def linfty_residual_coinvariant(n, ring=ZZ):
    """d P0_n + sum over p+q=n+1 and slots j of the signed compositions
    P0_p o_j P0_q, reduced into the sign-twisted coinvariants."""
    res = boundary_sum(P0(n, ring))
    for p in range(2, n):
        q = n + 1 - p
        if q < 2:
            continue
        for j in range(1, p + 1):
            e = ((p - 1) * q + (p - j) * (q - 1)) % 2
            sgn = -1 if e else 1
            res = combine(res, compose_sums(P0(p, ring), j, P0(q, ring)), 1, sgn)
    return coinvariant_reduce(res)
