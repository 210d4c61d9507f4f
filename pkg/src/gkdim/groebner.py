"""Buchberger's algorithm over an exact field.

Polynomials are dicts mapping exponent tuples to nonzero coefficients.  A
monomial order is given as a sort key on exponent tuples.  The pair queue is
processed by increasing total degree of the lcm, and a hard degree cap turns
runaway computations into :class:`ResourceLimit` instead of silent hangs.
"""

from __future__ import annotations

import heapq
import itertools

from .errors import ResourceLimit

DEFAULT_DEGREE_CAP = 20


def grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def block_order(nvars, eliminate):
    """Product order: the ``eliminate`` block beats the rest, grevlex inside blocks.

    Any polynomial whose leading monomial avoids the first block lies
    entirely in the remaining variables, which makes this an elimination order.
    """
    first = tuple(sorted(eliminate))
    rest = tuple(i for i in range(nvars) if i not in set(first))

    def key(e):
        return (
            grevlex_key(tuple(e[i] for i in first)),
            grevlex_key(tuple(e[i] for i in rest)),
        )

    return key


def total_degree(f):
    return max((sum(e) for e in f), default=0)


def leading(f, key):
    e = max(f, key=key)
    return e, f[e]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub_scaled(p, coeff, shift, g):
    # p -= coeff * x^shift * g
    for e, c in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        v = p.get(m, 0) - coeff * c
        if v:
            p[m] = v
        else:
            p.pop(m, None)


def monic(f, key):
    _, c = leading(f, key)
    inv = 1 / c
    return {e: v * inv for e, v in f.items()}


def reduce(f, G, key):
    """Full remainder of f on division by the list G (leading coefficients 1 not required)."""
    p = dict(f)
    r = {}
    leads = [leading(g, key) for g in G]
    while p:
        e, c = leading(p, key)
        for (lm, lc), g in zip(leads, G):
            if _divides(lm, e):
                shift = tuple(x - y for x, y in zip(e, lm))
                _sub_scaled(p, c / lc, shift, g)
                break
        else:
            r[e] = p.pop(e)
    return r


def s_polynomial(f, g, key):
    (ef, cf), (eg, cg) = leading(f, key), leading(g, key)
    m = _lcm(ef, eg)
    out = {}
    _sub_scaled(out, -1 / cf, tuple(x - y for x, y in zip(m, ef)), f)
    _sub_scaled(out, 1 / cg, tuple(x - y for x, y in zip(m, eg)), g)
    return out


def groebner(F, key, degree_cap=DEFAULT_DEGREE_CAP):
    """Reduced Groebner basis of the ideal generated by F, sorted by leading monomial."""
    G = []
    for f in F:
        f = {e: c for e, c in f.items() if c}
        if f:
            if total_degree(f) > degree_cap:
                raise ResourceLimit(f"input of degree {total_degree(f)} exceeds cap {degree_cap}")
            G.append(monic(f, key))
    if not G:
        return []
    leads = [leading(g, key)[0] for g in G]
    counter = itertools.count()
    queue = []
    pending = set()

    def push(i, j):
        m = _lcm(leads[i], leads[j])
        heapq.heappush(queue, (sum(m), key(m), next(counter), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    while queue:
        deg, _, _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        if G[i] is None or G[j] is None:
            continue
        li, lj = leads[i], leads[j]
        if _coprime(li, lj):
            continue
        m = _lcm(li, lj)
        if _chain_skip(i, j, m, leads, G, pending):
            continue
        if deg > degree_cap:
            raise ResourceLimit(f"S-pair of degree {deg} exceeds Groebner degree cap {degree_cap}")
        h = reduce(s_polynomial(G[i], G[j], key), [g for g in G if g is not None], key)
        if not h:
            continue
        if total_degree(h) > degree_cap:
            raise ResourceLimit(f"basis element of degree {total_degree(h)} exceeds cap {degree_cap}")
        h = monic(h, key)
        G.append(h)
        leads.append(leading(h, key)[0])
        new = len(G) - 1
        for t in range(new):
            if G[t] is not None:
                push(t, new)
    return _interreduce([g for g in G if g is not None], key)


def _chain_skip(i, j, m, leads, G, pending):
    for t in range(len(G)):
        if t in (i, j) or G[t] is None:
            continue
        if not _divides(leads[t], m):
            continue
        a, b = (min(i, t), max(i, t)), (min(j, t), max(j, t))
        if a not in pending and b not in pending:
            return True
    return False


def _interreduce(G, key):
    # drop elements whose leading monomial is divisible by another's
    G = sorted(G, key=lambda g: key(leading(g, key)[0]))
    minimal = []
    for g in G:
        lm = leading(g, key)[0]
        if not any(_divides(leading(h, key)[0], lm) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(monic(reduce(g, others, key), key))
    return sorted(out, key=lambda g: key(leading(g, key)[0]))


def is_member(f, G, key):
    """Ideal membership given a Groebner basis G."""
    return not reduce(f, G, key)
