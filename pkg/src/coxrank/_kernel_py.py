"""Pure-Python word kernels (fallback backend).

Words are ``bytes`` of generator indices.  Commutation comes in as one
bitmask per generator: bit ``t`` of ``comm[s]`` is set iff ``s`` and ``t``
are distinct commuting generators (an edge of the defining graph).

The compiled backend in ``_kernel.pyx`` mirrors these functions exactly;
the test suite cross-checks the two.
"""

from __future__ import annotations


def is_reduced(word: bytes, comm) -> bool:
    """True iff no deletable pair exists.

    A pair of equal letters is deletable when the letter does not reoccur
    strictly between them and every letter in between commutes with it.
    """
    n = len(word)
    for i in range(n - 1):
        s = word[i]
        mask = comm[s]
        for j in range(i + 1, n):
            t = word[j]
            if t == s:
                return False
            if not (mask >> t) & 1:
                break
    return True


def reduce_word(word: bytes, comm) -> bytes:
    """Delete the leftmost deletable pair, repeatedly, until none remains.

    The scan order (smallest first position, then its nearest matching
    letter) is part of the contract: both backends return the identical
    byte string, which keeps downstream traces reproducible.
    """
    buf = bytearray(word)
    while True:
        n = len(buf)
        hit = False
        for i in range(n - 1):
            s = buf[i]
            mask = comm[s]
            for j in range(i + 1, n):
                t = buf[j]
                if t == s:
                    del buf[j]
                    del buf[i]
                    hit = True
                    break
                if not (mask >> t) & 1:
                    break
            if hit:
                break
        if not hit:
            return bytes(buf)


def normal_form(word: bytes, comm) -> bytes:
    """Lexicographically least reduced word of the same group element.

    Greedy extraction: among the letters whose first occurrence is
    preceded only by letters they commute with, repeatedly emit the least
    one and delete that occurrence.
    """
    buf = bytearray(reduce_word(word, comm))
    out = bytearray()
    while buf:
        n = len(buf)
        best = -1
        pos = -1
        for p in range(n):
            s = buf[p]
            if best >= 0 and s >= best:
                continue
            mask = comm[s]
            ok = True
            for q in range(p):
                t = buf[q]
                if t == s or not (mask >> t) & 1:
                    ok = False
                    break
            if ok:
                best = s
                pos = p
        del buf[pos]
        out.append(best)
    return bytes(out)
