"""Words over the generators: reduction, canonical forms, parity, balls.

Public functions deal in tuples of labels; the index-level codec
(``encode_word``/``decode_word``) and the byte-level ball enumerator are
exposed for the hot loops in the certificate and verification modules.
All functions are pure; every returned word is a fresh tuple.
"""

from __future__ import annotations

from . import kernels
from .errors import RadiusCapError, UnknownGeneratorError
from .graphs import DefiningGraph

Word = tuple[str, ...]

DEFAULT_BALL_CAP = 10
EMPTY_WORD_DISPLAY = "e"


def parse_word(g: DefiningGraph, text: str) -> Word:
    """Parse space-separated generator labels.

    A lone ``e`` is the empty word unless a generator is literally named
    ``e`` (then it is that generator); the empty string always gives the
    empty word.
    """
    tokens = text.split()
    if tokens == [EMPTY_WORD_DISPLAY] and not g.has_vertex(EMPTY_WORD_DISPLAY):
        return ()
    for tok in tokens:
        if not g.has_vertex(tok):
            raise UnknownGeneratorError(tok)
    return tuple(tokens)


def format_word(word) -> str:
    """Render a word; the empty word prints as "e"."""
    return " ".join(word) if word else EMPTY_WORD_DISPLAY


def encode_word(g: DefiningGraph, word) -> bytes:
    out = bytearray()
    for x in word:
        if not g.has_vertex(x):
            raise UnknownGeneratorError(x)
        out.append(g.index(x))
    return bytes(out)


def decode_word(g: DefiningGraph, data: bytes) -> Word:
    verts = g.vertices
    return tuple(verts[i] for i in data)


def inverse(word) -> Word:
    """Inverse word; generators are involutions, so just reverse."""
    return tuple(reversed(word))


def parity_mask(g: DefiningGraph, word) -> int:
    """Per-generator letter counts mod 2, packed as a bitmask in vertex
    order.  Invariant under all legal moves, hence an invariant of the
    group element."""
    mask = 0
    for x in word:
        mask ^= 1 << g.index(x)
    return mask


def reduce_word(g: DefiningGraph, word) -> Word:
    """A reduced word for the same element (leftmost-pair deletion to a
    fixpoint; deterministic).

    >>> g = DefiningGraph("abcde", [("a","b"),("b","c"),("c","d"),("d","e"),("e","a")])
    >>> reduce_word(g, ("a", "b", "a"))
    ('b',)
    """
    return decode_word(g, kernels.reduce_word(encode_word(g, word), g.comm_masks))


def normal_form(g: DefiningGraph, word) -> Word:
    """The lexicographically least reduced word equal to ``word``; two
    words represent the same element iff their normal forms coincide.

    >>> g = DefiningGraph("abcde", [("a","b"),("b","c"),("c","d"),("d","e"),("e","a")])
    >>> normal_form(g, ("b", "a"))
    ('a', 'b')
    >>> normal_form(g, ("c", "a"))
    ('c', 'a')
    """
    return decode_word(g, kernels.normal_form(encode_word(g, word), g.comm_masks))


def is_reduced(g: DefiningGraph, word) -> bool:
    return kernels.is_reduced(encode_word(g, word), g.comm_masks)


def equal(g: DefiningGraph, w1, w2) -> bool:
    comm = g.comm_masks
    return kernels.normal_form(encode_word(g, w1), comm) == kernels.normal_form(
        encode_word(g, w2), comm
    )


def parity_vector(g: DefiningGraph, word) -> dict[str, int]:
    mask = parity_mask(g, word)
    return {v: (mask >> i) & 1 for i, v in enumerate(g.vertices)}


def support(g: DefiningGraph, word) -> frozenset[str]:
    """Generators appearing in the reduced form (well defined: the same
    for every reduced expression of the element)."""
    return frozenset(decode_word(g, kernels.reduce_word(encode_word(g, word), g.comm_masks)))


def ball_bytes(g: DefiningGraph, radius: int, cap: int = DEFAULT_BALL_CAP) -> list[bytes]:
    """All elements of reduced length <= radius as encoded normal forms,
    shortlex sorted (byte order = vertex order)."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if radius > cap:
        raise RadiusCapError(f"radius {radius} exceeds cap {cap}")
    comm = g.comm_masks
    nf = kernels.normal_form
    gens = [bytes([i]) for i in range(g.n)]
    seen = {b""}
    out = [b""]
    frontier = [b""]
    for r in range(1, radius + 1):
        grown = set()
        for w in frontier:
            for s in gens:
                v = nf(w + s, comm)
                if len(v) == r and v not in seen:
                    seen.add(v)
                    grown.add(v)
        frontier = sorted(grown)
        out.extend(frontier)
    return out


def enumerate_ball(g: DefiningGraph, radius: int, cap: int = DEFAULT_BALL_CAP) -> list[Word]:
    """Distinct group elements of reduced length <= radius, each as its
    normal form, shortlex sorted.

    >>> g = DefiningGraph("ab")
    >>> [" ".join(w) or "e" for w in enumerate_ball(g, 3)]
    ['e', 'a', 'b', 'a b', 'b a', 'a b a', 'b a b']
    """
    return [decode_word(g, w) for w in ball_bytes(g, radius, cap)]
