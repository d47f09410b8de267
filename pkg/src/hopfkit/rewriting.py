"""Word rewriting for finitely presented algebras.

Words are tuples of generator names.  A rule maps a left-hand word to a
linear combination of words (a dict word -> FieldElement).  Normal forms
are computed by repeatedly rewriting the leftmost redex; results are
memoised per word.  Confluence is not checked here: it is certified later
by the associativity test on the resulting structure constants.
"""
from __future__ import annotations

from collections import deque

from .scalar import ONE, fe
from .sparse import add_into


class NonTerminating(RuntimeError):
    pass


class NotClosed(RuntimeError):
    pass


def w(s) -> tuple:
    """'ba' -> ('b', 'a'); tuples pass through."""
    if isinstance(s, tuple):
        return s
    return tuple(s)


def combo(*terms) -> dict:
    """combo((c, 'ab'), (c2, 'ba')) -> {('a','b'): c, ('b','a'): c2}."""
    out = {}
    for c, word in terms:
        add_into(out, {w(word): fe(c)})
    return out


class RewriteSystem:
    def __init__(self, generators, rules: dict, max_steps: int = 2_000_000):
        self.generators = list(generators)
        self.rules = {w(k): {w(x): fe(c) for x, c in v.items()} for k, v in rules.items()}
        for lhs in self.rules:
            for g in lhs:
                if g not in self.generators:
                    raise ValueError(f"unknown generator {g!r} in rule {lhs}")
        self.lengths = sorted({len(k) for k in self.rules})
        self.max_steps = max_steps
        self.steps = 0
        self._cache: dict = {}
        self._active: set = set()

    def find_redex(self, word):
        rules = self.rules
        n = len(word)
        for i in range(n):
            for L in self.lengths:
                if i + L > n:
                    break
                if word[i:i + L] in rules:
                    return i, L
        return None

    def is_irreducible(self, word) -> bool:
        return self.find_redex(word) is None

    def nf(self, word) -> dict:
        word = w(word)
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        red = self.find_redex(word)
        if red is None:
            res = {word: ONE}
            self._cache[word] = res
            return res
        if word in self._active:
            raise NonTerminating(f"rewriting cycles on {''.join(map(str, word))}")
        self.steps += 1
        if self.steps > self.max_steps:
            raise NonTerminating(f"step bound {self.max_steps} exceeded")
        self._active.add(word)
        try:
            i, L = red
            pre, post = word[:i], word[i + L:]
            res = {}
            for rw, c in self.rules[word[i:i + L]].items():
                add_into(res, self.nf(pre + rw + post), c)
        finally:
            self._active.discard(word)
        self._cache[word] = res
        return res

    def nf_combo(self, comb: dict) -> dict:
        out = {}
        for word, c in comb.items():
            add_into(out, self.nf(word), c)
        return out

    def normal_words(self, bound: int = 4096) -> list:
        """All irreducible words, breadth first.  Raises if more than ``bound``."""
        out = [()]
        queue = deque([()])
        while queue:
            u = queue.popleft()
            for g in self.generators:
                v = u + (g,)
                ok = True
                # only suffixes can contain a new redex
                for L in self.lengths:
                    if L <= len(v) and v[-L:] in self.rules:
                        ok = False
                        break
                if ok:
                    out.append(v)
                    if len(out) > bound:
                        raise NonTerminating(f"more than {bound} normal words")
                    queue.append(v)
        return out
