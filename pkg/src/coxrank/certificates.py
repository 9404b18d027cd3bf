"""Essentiality certificates and the bounded brute-force falsifier.

Two sufficient criteria certify that a word represents an essential
element (one whose parabolic closure is the whole group, hence a rank-one
element):

* all generators appear and each an odd number of times;
* the reduced word is s-good for every generator s.

Goodness is a condition on the blocks between occurrences of s: writing a
reduced word as  w0 s w1 s ... s wk s w(k+1)  with no s inside any block,
the word is s-minimal when every interior block carries an s-blocker (a
generator not commuting with s), and s-good when additionally the wrapped
block w(k+1)w0 carries one (k = 0 counts as good).  Every reduced word is
automatically s-minimal for each s in its support.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .errors import (
    GeneratorAbsentError,
    MissingGeneratorsError,
    NotReducedError,
    RadiusCapError,
)
from .graphs import DefiningGraph
from .words import (
    DEFAULT_BALL_CAP,
    Word,
    ball_bytes,
    decode_word,
    encode_word,
    parity_mask,
)


class GoodnessStatus(str, Enum):
    GOOD = "GOOD"
    NOT_GOOD = "NOT_GOOD"
    ABSENT = "ABSENT"
    # unreachable on reduced input; kept so reports can name the case
    NOT_MINIMAL_IMPOSSIBLE = "NOT_MINIMAL_IMPOSSIBLE"


@dataclass(frozen=True)
class GoodnessReport:
    per_generator: dict[str, GoodnessStatus]
    bad_set: frozenset[str]
    full_support: bool

    def to_json_dict(self) -> dict:
        order = list(self.per_generator)
        return {
            "perGenerator": {s: st.value for s, st in self.per_generator.items()},
            "badSet": [s for s in order if s in self.bad_set],
            "fullSupport": self.full_support,
        }


@dataclass(frozen=True)
class Counterexample:
    """Witness that a word is not essential: conjugating by ``conjugator``
    lands in the standard parabolic subgroup on ``parabolic``."""

    conjugator: Word
    parabolic: frozenset[str]


def _occurrences(enc: bytes, s: int) -> list[int]:
    return [i for i, ch in enumerate(enc) if ch == s]


def _has_blocker(block, mask: int) -> bool:
    return any(not (mask >> t) & 1 for t in block)


def _require_reduced(g: DefiningGraph, enc: bytes) -> None:
    if not kernels.is_reduced(enc, g.comm_masks):
        raise NotReducedError("word is not reduced")


def _minimal_and_good(g: DefiningGraph, enc: bytes, si: int) -> tuple[bool, bool]:
    pos = _occurrences(enc, si)
    k = len(pos) - 1
    if k == 0:
        return True, True
    mask = g.comm_masks[si]
    minimal = all(
        _has_blocker(enc[pos[m] + 1 : pos[m + 1]], mask) for m in range(k)
    )
    wrapped = enc[pos[-1] + 1 :] + enc[: pos[0]]
    return minimal, minimal and _has_blocker(wrapped, mask)


def is_s_minimal(g: DefiningGraph, word, s: str) -> bool:
    """Every interior block between occurrences of s carries an s-blocker.

    Vacuously true when s occurs once.  For Coxeter words the reduction of
    ``s wi s`` with blocker-free wi would delete both s's, so every reduced
    word is s-minimal; this checker evaluates the definition anyway.
    """
    enc = encode_word(g, word)
    _require_reduced(g, enc)
    si = g.index(s)
    if si not in enc:
        raise GeneratorAbsentError(f"generator {s!r} does not occur")
    minimal, _ = _minimal_and_good(g, enc, si)
    return minimal


def is_s_good(g: DefiningGraph, word, s: str) -> bool:
    """s-minimal and, when s occurs k+1 >= 2 times, the wrapped block
    w(k+1)w0 carries an s-blocker.  Single occurrences count as good."""
    enc = encode_word(g, word)
    _require_reduced(g, enc)
    si = g.index(s)
    if si not in enc:
        raise GeneratorAbsentError(f"generator {s!r} does not occur")
    _, good = _minimal_and_good(g, enc, si)
    return good


def goodness_report(g: DefiningGraph, word) -> GoodnessReport:
    """Per-generator goodness of a reduced word; generators outside the
    support report ABSENT and stay out of the bad set."""
    enc = encode_word(g, word)
    _require_reduced(g, enc)
    return _report_from_reduced(g, enc)


def _report_from_reduced(g: DefiningGraph, enc: bytes) -> GoodnessReport:
    present = set(enc)
    statuses: dict[str, GoodnessStatus] = {}
    bad = []
    for si, label in enumerate(g.vertices):
        if si not in present:
            statuses[label] = GoodnessStatus.ABSENT
            continue
        minimal, good = _minimal_and_good(g, enc, si)
        if not minimal:
            statuses[label] = GoodnessStatus.NOT_MINIMAL_IMPOSSIBLE
        elif good:
            statuses[label] = GoodnessStatus.GOOD
        else:
            statuses[label] = GoodnessStatus.NOT_GOOD
            bad.append(label)
    return GoodnessReport(
        per_generator=statuses,
        bad_set=frozenset(bad),
        full_support=len(present) == g.n,
    )


def bad_mask(g: DefiningGraph, enc: bytes) -> int:
    """Bad set of a reduced encoded word as a bitmask (hot-loop helper)."""
    mask = 0
    present = set(enc)
    for si in present:
        _, good = _minimal_and_good(g, enc, si)
        if not good:
            mask |= 1 << si
    return mask


def bad_set(g: DefiningGraph, word) -> GoodnessReport:
    """Goodness report for a reduced, full-support word.

    >>> g = DefiningGraph("abcde", [("a","b"),("b","c"),("c","d"),("d","e"),("e","a")])
    >>> sorted(bad_set(g, tuple("abcdea")).bad_set)
    ['a']
    """
    report = goodness_report(g, word)
    if not report.full_support:
        missing = [
            v
            for v in g.vertices
            if report.per_generator[v] is GoodnessStatus.ABSENT
        ]
        raise MissingGeneratorsError(missing)
    return report


def is_all_odd_essential(g: DefiningGraph, word) -> bool:
    """All generators appear, each an odd number of times.  Sufficient for
    essentiality (membership in a proper parabolic would force some
    generator to even parity)."""
    return parity_mask(g, word) == (1 << g.n) - 1


def is_good_essential(g: DefiningGraph, word) -> bool:
    """The reduced form has full support and is s-good for every s.
    Sufficient for essentiality; independent of the all-odd criterion."""
    enc = kernels.reduce_word(encode_word(g, word), g.comm_masks)
    if len(set(enc)) != g.n:
        return False
    return bad_mask(g, enc) == 0


def find_even_completion(g: DefiningGraph, word) -> Word:
    """Product, in vertex order, of the generators appearing an even
    (possibly zero) number of times; multiplying it on the left makes the
    parity all-odd.  Always a product of distinct generators.

    >>> g = DefiningGraph("abcde", [("a","b"),("b","c"),("c","d"),("d","e"),("e","a")])
    >>> find_even_completion(g, ("a", "b"))
    ('c', 'd', 'e')
    """
    mask = parity_mask(g, word)
    return tuple(v for i, v in enumerate(g.vertices) if not (mask >> i) & 1)


def _falsify_enc(g: DefiningGraph, enc: bytes, conj_ball) -> tuple[bytes, int] | None:
    """Hot-loop core of the falsifier: returns (conjugator, support mask)
    for the first conjugator whose conjugate misses a generator."""
    comm = g.comm_masks
    full = (1 << g.n) - 1
    for u in conj_ball:
        supp = 0
        for ch in kernels.reduce_word(u + enc + u[::-1], comm):
            supp |= 1 << ch
        if supp != full:
            return u, supp
    return None


def falsify_essential(
    g: DefiningGraph,
    word,
    conj_radius: int,
    cap: int = DEFAULT_BALL_CAP,
) -> Counterexample | None:
    """Bounded search for evidence that the element is NOT essential.

    Tries every conjugator u of reduced length <= conj_radius; if the
    reduced form of u w u^-1 misses some generator, the element lies in a
    proper parabolic subgroup (membership in W_J is equivalent to reduced
    support inside J) and the least such (u, J) in shortlex order is
    returned.  None means no counterexample at this radius, which is
    evidence, not proof.
    """
    if conj_radius > cap:
        raise RadiusCapError(f"radius {conj_radius} exceeds cap {cap}")
    hit = _falsify_enc(g, encode_word(g, word), ball_bytes(g, conj_radius, cap))
    if hit is None:
        return None
    u, supp = hit
    return Counterexample(
        conjugator=decode_word(g, u),
        parabolic=frozenset(g.vertices[i] for i in range(g.n) if (supp >> i) & 1),
    )
