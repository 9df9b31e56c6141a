"""Independent reference computations used as test oracles.

Nothing here reuses the package's algorithms: chains are embedded in
``[0, 1]`` and computed with the closed forms ``min(r+s, 1)``, ``1-r``;
endomorphisms, filters and congruences are found by unpruned brute force.
"""

import itertools
from fractions import Fraction

import numpy as np


# closed forms on [0,1]
def u_oplus(r, s):
    return min(r + s, Fraction(1))


def u_neg(r):
    return 1 - r


def u_odot(r, s):
    return max(r + s - 1, Fraction(0))


def u_imp(r, s):
    return min(1 - r + s, Fraction(1))


def u_ominus(r, s):
    return max(r - s, Fraction(0))


def u_iff(r, s):
    return 1 - abs(r - s)


# Chang-style chain Gamma(Z x_lex Z, (n, 0)) straight from the definition
def lex_le(p, q):
    return p[0] < q[0] or (p[0] == q[0] and p[1] <= q[1])


def chang_oplus(n, x, y):
    s = (x[0] + y[0], x[1] + y[1])
    return s if lex_le(s, (n, 0)) else (n, 0)


def chang_neg(n, x):
    return (n - x[0], -x[1])


# finite algebras as index tables built from [0,1] closed forms
class Table:
    """A finite product of chains ``S_n``, elements as tuples of fractions."""

    def __init__(self, dims):
        self.dims = tuple(dims)
        self.els = list(itertools.product(*[[Fraction(k, n) for k in range(n + 1)] for n in dims]))
        self.idx = {e: i for i, e in enumerate(self.els)}
        self.n = len(self.els)
        self.add = np.array(
            [[self.idx[tuple(u_oplus(a, b) for a, b in zip(x, y))] for y in self.els] for x in self.els]
        )
        self.neg = np.array([self.idx[tuple(u_neg(a) for a in x)] for x in self.els])
        self.zero = self.idx[tuple(Fraction(0) for _ in dims)]
        self.one = self.idx[tuple(Fraction(1) for _ in dims)]

    def imp(self, i, j):
        return int(self.add[self.neg[i], j])

    def to_package(self, i):
        """The index as the package's element: tuple of ints (or int for a chain)."""
        e = tuple(int(v * n) for v, n in zip(self.els[i], self.dims))
        return e[0] if len(self.dims) == 1 else e


def brute_force_endos(T):
    """All idempotent endomorphisms by checking every map (numpy-vectorized)."""
    n = T.n
    out = []
    chunk = 200000
    total = n**n
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk))
        H = np.zeros((len(codes), n), dtype=np.int64)
        c = codes.copy()
        for i in range(n):
            H[:, i] = c % n
            c //= n
        ok = H[:, T.zero] == T.zero
        ok &= (H[:, T.neg] == T.neg[H]).all(axis=1)
        ok &= (H[:, T.add] == T.add[H[:, :, None], H[:, None, :]]).all(axis=(1, 2))
        ok &= (np.take_along_axis(H, H, axis=1) == H).all(axis=1)
        out.extend(tuple(int(v) for v in row) for row in H[ok])
    return out


def brute_force_filters(T):
    """All subsets F with 1 in F and (a in F, a->b in F implies b in F)."""
    out = []
    for mask in range(1 << T.n):
        F = {i for i in range(T.n) if mask >> i & 1}
        if T.one not in F:
            continue
        if all(b in F for a in F for b in range(T.n) if T.imp(a, b) in F):
            out.append(frozenset(F))
    return out


def _partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in _partitions(rest):
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1 :]
        yield [[first]] + p


def congruences(T, tau):
    """All equivalences compatible with oplus, neg and ``tau`` (an index list)."""
    out = []
    for p in _partitions(list(range(T.n))):
        block = [0] * T.n
        for k, b in enumerate(p):
            for i in b:
                block[i] = k
        ok = True
        for b in p:
            for i, j in itertools.combinations(b, 2):
                if block[T.neg[i]] != block[T.neg[j]] or block[tau[i]] != block[tau[j]]:
                    ok = False
                    break
                if any(block[T.add[i, z]] != block[T.add[j, z]] for z in range(T.n)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(block))
    return out


def is_si_by_congruences(T, tau):
    """Subdirectly irreducible: the nontrivial congruences have a least element."""
    cons = [c for c in congruences(T, tau) if len(set(c)) < T.n]
    if not cons:
        return False

    def pairs(c):
        return {(i, j) for i in range(T.n) for j in range(T.n) if c[i] == c[j]}

    sets = [pairs(c) for c in cons]
    meet = set.intersection(*sets)
    return any(s == meet for s in sets)
