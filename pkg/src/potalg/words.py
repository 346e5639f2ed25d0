"""Words over a finite alphabet and degree-lexicographic monomial orders.

A word is a plain ``str`` whose characters are letters of the alphabet; the
empty string is the identity. Strings give packed storage, O(1) hashing and
fast factor search for free.
"""

from __future__ import annotations

from itertools import product

from .errors import AlphabetError, ConfigError

DEFAULT_ALPHABET = "xy"


def rotate_word(w: str) -> str:
    """Move the first letter to the end."""
    return w[1:] + w[:1]


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))] if w else [w]


def all_words(alphabet: str, degree: int):
    for t in product(alphabet, repeat=degree):
        yield "".join(t)


def check_alphabet(alphabet: str) -> str:
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise AlphabetError(f"invalid alphabet {alphabet!r}")
    if not all(c.isalpha() and c.islower() for c in alphabet):
        raise AlphabetError("letters must be single lowercase characters")
    if len(alphabet) > 36:
        raise AlphabetError("alphabets of more than 36 letters are not supported")
    return alphabet


def word_to_text(w: str) -> str:
    """``xxyx`` -> ``x^2*y*x``; the empty word prints as ``1``."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "*".join(parts)


class MonomialOrder:
    """Degree-lexicographic order: longer words are larger, equal lengths
    compare letter by letter using ``precedence`` (first letter is largest).

    ``key`` maps words to integers, so the order is plain integer comparison.
    """

    kind = "deglex"

    def __init__(self, precedence: str = DEFAULT_ALPHABET):
        check_alphabet(precedence)
        self.precedence = precedence
        k = len(precedence)
        self._base = k
        # largest letter gets the largest digit
        digits = "0123456789abcdefghijklmnopqrstuvwxyz"
        self._table = str.maketrans({c: digits[k - 1 - i] for i, c in enumerate(precedence)})
        self._offsets = [0]
        self._cache: dict[str, int] = {}

    @property
    def alphabet(self) -> str:
        return self.precedence

    def _offset(self, n: int) -> int:
        offs = self._offsets
        while len(offs) <= n:
            offs.append(offs[-1] + self._base ** (len(offs) - 1))
        return offs[n]

    def key(self, w: str) -> int:
        k = self._cache.get(w)
        if k is None:
            if self._base == 1:
                k = len(w)
            else:
                t = w.translate(self._table)
                try:
                    k = self._offset(len(w)) + (int(t, self._base) if t else 0)
                except ValueError:
                    raise AlphabetError(f"word {w!r} is not over {self.precedence!r}") from None
            self._cache[w] = k
        return k

    def lt(self, u: str, v: str) -> bool:
        return self.key(u) < self.key(v)

    def max(self, words):
        return max(words, key=self.key)

    def sort_desc(self, words):
        return sorted(words, key=self.key, reverse=True)

    def header(self) -> str:
        return f"order={self.kind} letters={'>'.join(self.precedence)}"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.precedence == self.precedence

    def __hash__(self):
        return hash(("deglex", self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.precedence!r})"


DEGLEX = MonomialOrder("xy")


def order_from_text(text: str, alphabet: str = DEFAULT_ALPHABET) -> MonomialOrder:
    """Parse ``x>y``, ``y>x`` or a bare precedence string like ``yx``."""
    s = text.replace(">", "").replace(" ", "")
    if sorted(s) != sorted(alphabet):
        raise ConfigError(f"order {text!r} does not rank the alphabet {alphabet!r}")
    return MonomialOrder(s)
