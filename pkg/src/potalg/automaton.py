"""Automaton recognising the words that avoid a set of forbidden factors.

Built with the failure-function (Aho-Corasick) construction: states are the
prefixes of forbidden words, a transition appends a letter and falls back to
the longest suffix that is still a prefix. States whose prefix ends in a
forbidden word are dead; every live state is accepting.
"""

from __future__ import annotations

from collections import deque


class AvoidanceAutomaton:
    def __init__(self, forbidden, alphabet: str = "xy"):
        self.alphabet = alphabet
        forbidden = sorted(set(forbidden), key=lambda w: (len(w), w))
        self.forbidden = tuple(forbidden)
        self.everything_forbidden = "" in forbidden
        self.prefixes = [""]
        children: list[dict] = [{}]
        terminal = [False]
        for w in forbidden:
            s = 0
            for ch in w:
                nxt = children[s].get(ch)
                if nxt is None:
                    nxt = len(self.prefixes)
                    children[s][ch] = nxt
                    children.append({})
                    self.prefixes.append(self.prefixes[s] + ch)
                    terminal.append(False)
                s = nxt
            terminal[s] = True

        n = len(self.prefixes)
        fail = [0] * n
        self.delta = [[0] * len(alphabet) for _ in range(n)]
        self.dead = terminal[:]
        queue = deque()
        for i, ch in enumerate(alphabet):
            nxt = children[0].get(ch)
            if nxt is None:
                self.delta[0][i] = 0
            else:
                self.delta[0][i] = nxt
                fail[nxt] = 0
                queue.append(nxt)
        while queue:
            s = queue.popleft()
            self.dead[s] = self.dead[s] or self.dead[fail[s]]
            for i, ch in enumerate(alphabet):
                nxt = children[s].get(ch)
                if nxt is None:
                    self.delta[s][i] = self.delta[fail[s]][i]
                else:
                    fail[nxt] = self.delta[fail[s]][i]
                    self.delta[s][i] = nxt
                    queue.append(nxt)
        if self.everything_forbidden:
            self.dead[0] = True
        self.live = [s for s in range(n) if not self.dead[s]]

    @property
    def n_states(self) -> int:
        return len(self.prefixes)

    def accepts(self, w: str) -> bool:
        s = 0
        if self.dead[0]:
            return False
        for ch in w:
            s = self.delta[s][self.alphabet.index(ch)]
            if self.dead[s]:
                return False
        return True

    def counts(self, max_degree: int) -> list[int]:
        """Number of accepted words of each length 0..max_degree."""
        if self.dead[0]:
            return [0] * (max_degree + 1)
        vec = {0: 1}
        out = [1]
        for _ in range(max_degree):
            nxt: dict[int, int] = {}
            for s, c in vec.items():
                for t in self.delta[s]:
                    if not self.dead[t]:
                        nxt[t] = nxt.get(t, 0) + c
            vec = nxt
            out.append(sum(vec.values()))
        return out

    def _reachable_live(self) -> set[int]:
        if self.dead[0]:
            return set()
        seen = {0}
        stack = [0]
        while stack:
            s = stack.pop()
            for t in self.delta[s]:
                if not self.dead[t] and t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def is_finite(self) -> bool:
        """True iff only finitely many words are accepted (no live cycle)."""
        reach = self._reachable_live()
        color = {s: 0 for s in reach}
        for root in sorted(reach):
            if color[root]:
                continue
            stack = [(root, iter(self.delta[root]))]
            color[root] = 1
            while stack:
                s, it = stack[-1]
                for t in it:
                    if self.dead[t]:
                        continue
                    if color[t] == 1:
                        return False
                    if color[t] == 0:
                        color[t] = 1
                        stack.append((t, iter(self.delta[t])))
                        break
                else:
                    color[s] = 2
                    stack.pop()
        return True

    def total(self):
        """Number of accepted words, or ``math.inf``."""
        import math

        if not self.is_finite():
            return math.inf
        return sum(self.counts(max(len(self._reachable_live()), 1)))

    def words(self, degree: int) -> list[str]:
        """Accepted words of the given length, in lexicographic order of the alphabet."""
        if self.dead[0]:
            return []
        out = []
        stack = [(0, "")]
        while stack:
            s, w = stack.pop()
            if len(w) == degree:
                out.append(w)
                continue
            for i in reversed(range(len(self.alphabet))):
                t = self.delta[s][i]
                if not self.dead[t]:
                    stack.append((t, w + self.alphabet[i]))
        return out

    def transfer_matrix(self):
        """Adjacency counts between reachable live states, with the state list."""
        states = sorted(self._reachable_live())
        index = {s: i for i, s in enumerate(states)}
        m = [[0] * len(states) for _ in states]
        for s in states:
            for t in self.delta[s]:
                if not self.dead[t]:
                    m[index[s]][index[t]] += 1
        return m, states
