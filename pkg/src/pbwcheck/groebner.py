"""
Truncated noncommutative Groebner bases (Buchberger with overlap
obstructions) in the free algebra on v letters.

Words are ordered deg-lex: longer words are larger, equal lengths compare
lexicographically. Every basis element is monic in its leading word, and a
word is normal when no leading word occurs in it as a subword. Obstructions
whose overlap word is longer than the truncation degree are deferred and can
be resumed with `extend`.
"""
from __future__ import annotations

import heapq
import logging
from itertools import count
from typing import Iterable, Iterator, Optional

from src.errors import ShapeError
from src.exactmath.linear import scaled
from src.tensorspace.words import Word


def deglex_key(word: Word):
    return (len(word), word)


def leading_word(poly: dict) -> Word:
    return max(poly, key=deglex_key)


def _heap_key(word: Word):
    # heapq pops the smallest key, i.e. the deg-lex largest word
    return (-len(word), tuple(-i for i in word))


class NCGroebner:
    """A truncated Groebner basis of a two-sided ideal, kept as {lead: monic element}."""

    def __init__(self, v: int, generators: Iterable[dict], max_degree: int):
        if max_degree < 0:
            raise ShapeError("truncation degree must be non-negative")
        self.v = v
        self.max_degree = max_degree
        self.basis: dict[Word, dict] = {}
        self._versions: dict[Word, int] = {}
        self._clock = count()
        self._obstructions: list = []
        self._deferred: list = []
        self._queue: list[dict] = [dict(g) for g in generators if g]
        self._max_lead = 0
        self._run()

    # ---------- reduction ----------

    def _divisor(self, word: Word) -> Optional[tuple[Word, int]]:
        if () in self.basis:
            return (), 0
        n = len(word)
        for length in range(1, min(n, self._max_lead) + 1):
            for i in range(n - length + 1):
                piece = word[i:i + length]
                if piece in self.basis:
                    return piece, i
        return None

    def reduce(self, poly: dict) -> dict:
        """Full normal form of poly modulo the current basis."""
        poly = {w: c for w, c in poly.items() if c}
        heap = [(_heap_key(w), w) for w in poly]
        heapq.heapify(heap)
        out: dict = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = poly.pop(w, None)
            if not c:
                continue
            hit = self._divisor(w)
            if hit is None:
                out[w] = c
                continue
            lead, i = hit
            prefix, suffix = w[:i], w[i + len(lead):]
            for t, d in self.basis[lead].items():
                if t == lead:
                    continue
                nw = prefix + t + suffix
                if nw not in poly:
                    heapq.heappush(heap, (_heap_key(nw), nw))
                nc = poly.get(nw, 0) - c * d
                if nc:
                    poly[nw] = nc
                else:
                    poly.pop(nw, None)
        return out

    def is_normal(self, word: Word) -> bool:
        return self._divisor(word) is None

    # ---------- completion ----------

    def _insert(self, poly: dict) -> None:
        lead = leading_word(poly)
        poly = scaled(poly, 1 / poly[lead]) if poly[lead] != 1 else poly
        for m in [m for m in self.basis if _contains(m, lead)]:
            self._queue.append(self.basis.pop(m))
            self._versions.pop(m, None)
        self.basis[lead] = poly
        self._versions[lead] = next(self._clock)
        self._max_lead = max(self._max_lead, len(lead))
        for m in list(self.basis):
            self._schedule(lead, m)
            if m != lead:
                self._schedule(m, lead)

    def _schedule(self, u: Word, w: Word) -> None:
        """Record every proper overlap u[-k:] == w[:k]."""
        for k in range(1, min(len(u), len(w))):
            if u[-k:] == w[:k]:
                degree = len(u) + len(w) - k
                entry = (degree, next(self._clock), u, w, k, self._versions[u], self._versions[w])
                if degree <= self.max_degree:
                    heapq.heappush(self._obstructions, entry)
                else:
                    self._deferred.append(entry)

    def _s_poly(self, u: Word, w: Word, k: int) -> dict:
        gu, gw = self.basis[u], self.basis[w]
        tail, head = w[k:], u[:-k]
        out = {t + tail: c for t, c in gu.items()}
        for t, c in gw.items():
            key = head + t
            nc = out.get(key, 0) - c
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
        return out

    def _stale(self, entry) -> bool:
        _, _, u, w, _, vu, vw = entry
        return self._versions.get(u) != vu or self._versions.get(w) != vw

    def _run(self) -> None:
        while self._queue or self._obstructions:
            while self._queue:
                r = self.reduce(self._queue.pop())
                if r:
                    self._insert(r)
            if not self._obstructions:
                break
            entry = heapq.heappop(self._obstructions)
            if self._stale(entry):
                continue
            _, _, u, w, k, _, _ = entry
            r = self.reduce(self._s_poly(u, w, k))
            if r:
                self._insert(r)
        logging.info(f"Groebner basis truncated at degree {self.max_degree}: {len(self.basis)} elements")

    def extend(self, max_degree: int) -> None:
        """Raise the truncation degree and resume the deferred obstructions."""
        if max_degree <= self.max_degree:
            return
        self.max_degree = max_degree
        waiting, self._deferred = self._deferred, []
        for entry in waiting:
            if entry[0] <= max_degree:
                heapq.heappush(self._obstructions, entry)
            else:
                self._deferred.append(entry)
        self._run()

    # ---------- normal words ----------

    def normal_words(self, degree: int) -> Iterator[Word]:
        """Normal words of the given length in lex order."""
        if () in self.basis:
            return iter(())
        layer: list[Word] = [()]
        for _ in range(degree):
            nxt = []
            for w in layer:
                for x in range(self.v):
                    cand = w + (x,)
                    if not self._ends_in_lead(cand):
                        nxt.append(cand)
            layer = nxt
        return iter(layer)

    def count_normal(self, degree: int) -> int:
        """Number of normal words of the given length, by a suffix automaton count."""
        if () in self.basis:
            return 0
        keep = max(self._max_lead - 1, 0)
        states: dict[Word, int] = {(): 1}
        for _ in range(degree):
            nxt: dict[Word, int] = {}
            for s, n in states.items():
                for x in range(self.v):
                    cand = s + (x,)
                    if self._ends_in_lead(cand):
                        continue
                    key = cand[max(len(cand) - keep, 0):] if keep else ()
                    nxt[key] = nxt.get(key, 0) + n
            states = nxt
        return sum(states.values())

    def _ends_in_lead(self, word: Word) -> bool:
        if () in self.basis:
            return True
        n = len(word)
        for length in range(1, min(n, self._max_lead) + 1):
            if word[n - length:] in self.basis:
                return True
        return False

    def leads(self) -> list[Word]:
        return sorted(self.basis, key=deglex_key)


def _contains(word: Word, piece: Word) -> bool:
    if word == piece or len(piece) > len(word):
        return False
    n = len(piece)
    return any(word[i:i + n] == piece for i in range(len(word) - n + 1))
