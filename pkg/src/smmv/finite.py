"""Index tables for finite algebras, shared by the exhaustive checkers."""

from __future__ import annotations

from functools import lru_cache

from .errors import TooLarge, Unsupported


class FiniteView:
    """Elements numbered in carrier order, with ``oplus``/``neg`` as tables."""

    def __init__(self, A):
        if not A.finite:
            raise Unsupported(f"{A} is not finite")
        self.A = A
        self.els = list(A.elements())
        self.idx = {x: i for i, x in enumerate(self.els)}
        self.n = len(self.els)
        idx = self.idx
        self.add = [[idx[A.oplus(x, y)] for y in self.els] for x in self.els]
        self.neg = [idx[A.neg(x)] for x in self.els]
        self.zero = idx[A.zero]
        self.one = idx[A.one]
        self._leq = None

    def odot(self, i, j):
        return self.neg[self.add[self.neg[i]][self.neg[j]]]

    def imp(self, i, j):
        return self.add[self.neg[i]][j]

    def join(self, i, j):
        return self.imp(self.imp(i, j), j)

    def meet(self, i, j):
        return self.odot(i, self.imp(i, j))

    def iff(self, i, j):
        return self.odot(self.imp(i, j), self.imp(j, i))

    def leq(self, i, j):
        if self._leq is None:
            self._leq = [[self.join(a, b) == b for b in range(self.n)] for a in range(self.n)]
        return self._leq[i][j]

    def tau_table(self, S):
        return [self.idx[S.tau.apply(S.algebra, x)] for x in self.els]

    def powers_limit(self, g):
        """Lowest power ``g^k``; in a finite algebra the sequence stabilises."""
        p = g
        while True:
            q = self.odot(p, g)
            if q == p:
                return p
            p = q

    def filter_of(self, seed):
        """Smallest filter containing the index set ``seed`` (as a frozenset)."""
        g = self.one
        for s in seed:
            g = self.odot(g, s)
        g = self.powers_limit(g)
        return frozenset(j for j in range(self.n) if self.leq(g, j))

    def all_filters(self):
        return sorted({self.filter_of([i]) for i in range(self.n)}, key=lambda F: (len(F), sorted(F)))

    def is_filter(self, F):
        if self.one not in F:
            return False
        for a in F:
            for b in range(self.n):
                if self.imp(a, b) in F and b not in F:
                    return False
        return True


@lru_cache(maxsize=256)
def view(A, limit=4096) -> FiniteView:
    if A.finite and A.size() > limit:
        raise TooLarge(f"{A} has {A.size()} elements (limit {limit})")
    return FiniteView(A)
