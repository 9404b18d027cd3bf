"""Desk-scale verification: exhaustive and randomized checks with
machine-readable reports.

The word-problem ground truth here is deliberately independent of the
kernel algorithms: it only ever applies raw legal moves (swap an adjacent
commuting pair, delete a doubled letter, insert a doubled letter) and
takes breadth-first closures, so it exercises the rewriting theorem
directly rather than any normal-form code path.

Every report is reproducible bit for bit given the same parameters;
randomized checks take an explicit seed and record it.  Empty case sets
never pass: they are reported as FAIL with reason EMPTY_DOMAIN.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .cancellator import fix_missing, make_good
from .certificates import _falsify_enc, bad_mask, is_good_essential
from .errors import CoxrankError, PreconditionClassError, RadiusCapError
from .graphs import DefiningGraph, dj_prime, is_join
from .subgroups import SubgroupSpec, index_and_exponent, member, member_mask
from .words import (
    DEFAULT_BALL_CAP,
    ball_bytes,
    decode_word,
    encode_word,
    format_word,
)

WORD_PROBLEM_MAX_LEN = 6  # closure universe is n^(maxLen+2); keep desk scale


@dataclass
class VerificationReport:
    check: str
    params: dict
    total_cases: int
    failures: list
    elapsed_ms: int
    verdict: str
    seed: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "check": self.check,
            "params": self.params,
            "totalCases": self.total_cases,
            "failures": self.failures,
            "elapsedMs": self.elapsed_ms,
            "verdict": self.verdict,
        }
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def _finish(check, params, failures, total, t0, seed=None) -> VerificationReport:
    if total == 0 and not failures:
        failures = [{"reason": "EMPTY_DOMAIN"}]
    return VerificationReport(
        check=check,
        params=params,
        total_cases=total,
        failures=failures,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        verdict="PASS" if not failures else "FAIL",
        seed=seed,
    )


def _require_irreducible_nonaffine(g: DefiningGraph) -> None:
    if is_join(g) or g.n < 3:
        raise PreconditionClassError(
            "graph must be join-free with at least three vertices "
            "(the infinite irreducible non-affine case)"
        )


def _fmt(g: DefiningGraph, enc: bytes) -> str:
    return format_word(decode_word(g, enc))


def _chunks(items, jobs):
    if not items:
        return [items]
    size = (len(items) + jobs - 1) // jobs
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run_chunked(worker, arg_list, jobs):
    if jobs <= 1 or len(arg_list) <= 1:
        return [worker(a) for a in arg_list]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=min(jobs, len(arg_list))) as pool:
        return pool.map(worker, arg_list)


# -- parity invariance ---------------------------------------------------


def verify_parity_invariance(
    g: DefiningGraph,
    trials: int = 10_000,
    max_len: int = 12,
    seed: int = 0,
    _corrupt: bool = False,
) -> VerificationReport:
    """Random words, random legal-move sequences; the per-generator letter
    count mod 2 (recounted from scratch after every move) must never
    change.  ``_corrupt`` injects one illegal single-letter deletion per
    trial — a self-test hook that must make the check FAIL."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    n = g.n
    comm = g.comm_masks
    failures = []
    for trial in range(trials):
        word = [rng.randrange(n) for _ in range(rng.randint(0, max_len))]
        expected = 0
        for ch in word:
            expected ^= 1 << ch
        start = bytes(word)
        nmoves = rng.randint(1, 2 * max_len)
        corrupt_at = rng.randrange(nmoves) if _corrupt else -1
        for m in range(nmoves):
            if m == corrupt_at:
                if word:
                    del word[rng.randrange(len(word))]
                else:
                    word.append(rng.randrange(n))
            else:
                length = len(word)
                swaps = [
                    i
                    for i in range(length - 1)
                    if word[i] != word[i + 1] and (comm[word[i]] >> word[i + 1]) & 1
                ]
                cancels = [
                    i for i in range(length - 1) if word[i] == word[i + 1]
                ]
                pick = rng.randrange(len(swaps) + len(cancels) + (length + 1) * n)
                if pick < len(swaps):
                    i = swaps[pick]
                    word[i], word[i + 1] = word[i + 1], word[i]
                elif pick < len(swaps) + len(cancels):
                    i = cancels[pick - len(swaps)]
                    del word[i : i + 2]
                else:
                    pos, s = divmod(pick - len(swaps) - len(cancels), n)
                    word[pos:pos] = [s, s]
            observed = 0
            for ch in word:
                observed ^= 1 << ch
            if observed != expected:
                failures.append(
                    {
                        "trial": trial,
                        "start": _fmt(g, start),
                        "after": _fmt(g, bytes(word)),
                        "moveIndex": m,
                    }
                )
                break
    params = {"trials": trials, "maxLen": max_len, "corrupted": _corrupt}
    return _finish("parity-invariance", params, failures, trials, t0, seed=seed)


# -- word problem vs rewriting closure ------------------------------------


def _closure_partition(n: int, comm, cap: int):
    """Union-find over all words of length <= cap under legal moves.

    Words are ranked shortlex (rank = offsets[len] + base-n digit value);
    swap edges connect commuting transpositions, cancel edges connect a
    word with a doubled letter to the shorter word (which also realizes
    every doubled-letter insertion below the cap).  Returns (parent,
    offsets, pows); class roots are the shortlex-least members.
    """
    pows = [1]
    for _ in range(cap):
        pows.append(pows[-1] * n)
    offsets = [0]
    for length in range(cap + 1):
        offsets.append(offsets[-1] + pows[length])
    parent = list(range(offsets[cap + 1]))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            if rx < ry:
                parent[ry] = rx
            else:
                parent[rx] = ry

    for length in range(2, cap + 1):
        base = offsets[length]
        digits = [0] * length
        for r in range(pows[length]):
            rank = base + r
            for i in range(length - 1):
                a = digits[i]
                b = digits[i + 1]
                if a == b:
                    v = 0
                    for k in range(i):
                        v = v * n + digits[k]
                    for k in range(i + 2, length):
                        v = v * n + digits[k]
                    union(rank, offsets[length - 2] + v)
                elif a < b and (comm[a] >> b) & 1:
                    union(
                        rank,
                        rank + (a - b) * (pows[length - 2 - i] - pows[length - 1 - i]),
                    )
            k = length - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] == n:
                    digits[k] = 0
                    k -= 1
                else:
                    break
    return parent, offsets, pows, find


def verify_word_problem(g: DefiningGraph, max_len: int = WORD_PROBLEM_MAX_LEN) -> VerificationReport:
    """Normal-form equality must match rewriting-closure equality for all
    word pairs of length <= max_len (closure cap max_len + 2).

    Checked partition-wise, which covers every pair: within one closure
    class all normal forms must coincide, and distinct classes must have
    distinct normal forms."""
    t0 = time.perf_counter()
    if max_len > WORD_PROBLEM_MAX_LEN:
        raise RadiusCapError(
            f"maxLen {max_len} exceeds cap {WORD_PROBLEM_MAX_LEN}"
        )
    n = g.n
    comm = g.comm_masks
    cap = max_len + 2
    parent, offsets, pows, find = _closure_partition(n, comm, cap)

    failures = []
    by_root: dict[int, tuple[bytes, bytes]] = {}
    by_nf: dict[bytes, tuple[int, bytes]] = {}
    sphere_sizes = [0] * (max_len + 1)
    for length in range(0, max_len + 1):
        base = offsets[length]
        digits = [0] * length
        for r in range(pows[length]):
            w = bytes(digits)
            root = find(base + r)
            nf = kernels.normal_form(w, comm)
            seen = by_root.get(root)
            if seen is None:
                by_root[root] = (w, nf)
                sphere_sizes[length] += 1
            elif seen[1] != nf:
                failures.append(
                    {
                        "left": _fmt(g, seen[0]),
                        "right": _fmt(g, w),
                        "kind": "oracle-equal-but-normal-forms-differ",
                    }
                )
            prev = by_nf.get(nf)
            if prev is None:
                by_nf[nf] = (root, w)
            elif prev[0] != root:
                failures.append(
                    {
                        "left": _fmt(g, prev[1]),
                        "right": _fmt(g, w),
                        "kind": "normal-forms-equal-but-oracle-differs",
                    }
                )
            k = length - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] == n:
                    digits[k] = 0
                    k -= 1
                else:
                    break
    words = offsets[max_len + 1]
    params = {
        "maxLen": max_len,
        "closureCap": cap,
        "words": words,
        "universe": offsets[cap + 1],
        "sphereSizes": sphere_sizes,
    }
    return _finish(
        "word-problem", params, failures, words * (words - 1) // 2, t0
    )


def _min_layer(g: DefiningGraph, enc: bytes) -> set[bytes]:
    comm = g.comm_masks
    seen = {enc}
    stack = [enc]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if x == y:
                v = w[:i] + w[i + 2 :]
            elif (comm[x] >> y) & 1:
                v = w[:i] + bytes((y, x)) + w[i + 2 :]
            else:
                continue
            if v not in seen:
                seen.add(v)
                stack.append(v)
    least = min(len(w) for w in seen)
    return {w for w in seen if len(w) == least}


def rewriting_closure_equal(g: DefiningGraph, w1, w2) -> bool:
    """Ground-truth equality for a single pair: breadth-first closure of
    each word under non-increasing legal moves; the words are equal in the
    group iff the minimal-length layers (all reduced expressions) meet."""
    a = _min_layer(g, encode_word(g, w1))
    b = _min_layer(g, encode_word(g, w2))
    return not a.isdisjoint(b)


# -- covering checks -------------------------------------------------------


def _covering_chunk(args):
    g, chunk = args
    n = g.n
    failures = []
    hist: Counter = Counter()
    for w in chunk:
        pm = 0
        for ch in w:
            pm ^= 1 << ch
        alpha = bytes(i for i in range(n) if not (pm >> i) & 1)
        counts = 0
        for ch in alpha + w:
            counts ^= 1 << ch
        distinct = len(set(alpha)) == len(alpha)
        if counts != (1 << n) - 1 or not distinct:
            failures.append({"word": _fmt(g, w), "alpha": _fmt(g, alpha)})
        # histogram keys must be injective; "e" could name a generator
        hist[_fmt(g, alpha) if alpha else "(identity)"] += 1
    return failures, hist


def verify_covering(
    g: DefiningGraph,
    radius: int = 8,
    jobs: int = 1,
    cap: int = DEFAULT_BALL_CAP,
) -> VerificationReport:
    """Every ball element w must become all-odd (hence certified
    essential) after left-multiplying by its even-parity completion, and
    every multiplier used must be a product of distinct generators."""
    t0 = time.perf_counter()
    _require_irreducible_nonaffine(g)
    ball = ball_bytes(g, radius, cap)
    results = _run_chunked(
        _covering_chunk, [(g, c) for c in _chunks(ball, max(jobs, 1))], jobs
    )
    failures = []
    hist: Counter = Counter()
    for fails, h in results:
        failures.extend(fails)
        hist.update(h)
    params = {
        "radius": radius,
        "alphaHistogram": {k: hist[k] for k in sorted(hist)},
        "distinctMultipliers": len(hist),
    }
    return _finish("covering", params, failures, len(ball), t0)


def _subgroup_covering_chunk(args):
    g, chunk, spec, nexp = args
    failures = []
    multipliers = set()
    max_steps = 0
    full = (1 << g.n) - 1
    for w in chunk:
        word = decode_word(g, w)
        supp = 0
        for ch in kernels.reduce_word(w, g.comm_masks):
            supp |= 1 << ch
        missing0 = g.n - bin(supp & full).count("1")
        try:
            w1, t1 = fix_missing(g, word, nexp)
            bad1 = bin(bad_mask(g, encode_word(g, w1))).count("1")
            w2, t2 = make_good(g, w1, nexp)
        except CoxrankError as exc:
            failures.append({"word": format_word(word), "reason": f"{exc.code}: {exc}"})
            continue
        total_mult = tuple(t2.total_multiplier) + tuple(t1.total_multiplier)
        problems = []
        if not is_good_essential(g, w2):
            problems.append("final word is not s-good for all s")
        if not member(spec, w2):
            problems.append("final word left the subgroup")
        if any(not member(spec, st.multiplier) for st in t1.steps + t2.steps):
            problems.append("a multiplier left the subgroup")
        if len(t1.steps) > missing0:
            problems.append("more support repairs than missing generators")
        if len(t2.steps) > bad1:
            problems.append("more goodness repairs than bad generators")
        if problems:
            failures.append(
                {"word": format_word(word), "reason": "; ".join(problems)}
            )
        multipliers.add(total_mult)
        max_steps = max(max_steps, len(t1.steps) + len(t2.steps))
    return failures, multipliers, max_steps


def verify_subgroup_covering(
    g: DefiningGraph,
    spec: SubgroupSpec,
    radius: int = 8,
    jobs: int = 1,
    cap: int = DEFAULT_BALL_CAP,
) -> VerificationReport:
    """Every subgroup member in the ball must essentialize — via repair
    multipliers staying inside the subgroup — into a full-support,
    s-good-for-all-s member, using at most one support repair per missing
    generator and one goodness repair per bad generator.  The distinct
    total multipliers form the empirical covering set."""
    t0 = time.perf_counter()
    _require_irreducible_nonaffine(g)
    index, exponent = index_and_exponent(spec)
    nexp = max(2, exponent)
    members = []
    for w in ball_bytes(g, radius, cap):
        pm = 0
        for ch in w:
            pm ^= 1 << ch
        if member_mask(spec, pm):
            members.append(w)
    results = _run_chunked(
        _subgroup_covering_chunk,
        [(g, c, spec, nexp) for c in _chunks(members, max(jobs, 1))],
        jobs,
    )
    failures = []
    multipliers: set[str] = set()
    max_steps = 0
    for fails, mults, steps in results:
        failures.extend(fails)
        multipliers.update(mults)
        max_steps = max(max_steps, steps)
    params = {
        "radius": radius,
        "subgroupIndex": index,
        "quotientExponent": exponent,
        "pipelineExponent": nexp,
        "members": len(members),
        "distinctTotalMultipliers": len(multipliers),
        "maxTraceSteps": max_steps,
    }
    return _finish("subgroup-covering", params, failures, len(members), t0)


def verify_cancellator_uniformity(
    g: DefiningGraph,
    spec: SubgroupSpec | None = None,
    radius: int = 6,
    cap: int = DEFAULT_BALL_CAP,
) -> VerificationReport:
    """Group full-support ball elements by bad set; synthesize the repair
    multiplier for the first representative of each class and re-apply it
    verbatim to every other member.  A FAIL records that the single
    multiplier is not uniform over its bad-set class at this radius — an
    empirical finding, not a build error."""
    t0 = time.perf_counter()
    _require_irreducible_nonaffine(g)
    nexp = 2 if spec is None else max(2, index_and_exponent(spec)[1])
    comm = g.comm_masks
    full = (1 << g.n) - 1
    groups: dict[int, list[bytes]] = {}
    for w in ball_bytes(g, radius, cap):
        supp = 0
        for ch in w:
            supp |= 1 << ch
        if supp == full:
            groups.setdefault(bad_mask(g, w), []).append(w)
    failures = []
    per_class = {}
    total = 0
    for bm in sorted(groups):
        words_in_class = groups[bm]
        label = (
            " ".join(v for i, v in enumerate(g.vertices) if (bm >> i) & 1)
            or "(empty)"
        )
        _, trace = make_good(g, decode_word(g, words_in_class[0]), nexp)
        mult = encode_word(g, trace.total_multiplier)
        bad_words = []
        for w in words_in_class[1:]:
            total += 1
            r = kernels.reduce_word(mult + w, comm)
            if len(set(r)) != g.n or bad_mask(g, r) != 0:
                bad_words.append(w)
        failures.extend(
            {"badSet": label, "word": _fmt(g, w)} for w in bad_words
        )
        per_class[label] = {
            "size": len(words_in_class),
            "multiplier": format_word(trace.total_multiplier),
            "verdict": "FAIL" if bad_words else "PASS",
        }
    params = {"radius": radius, "exponent": nexp, "perBadSet": per_class}
    return _finish("cancellator-uniformity", params, failures, total, t0)


# -- structural checks ------------------------------------------------------


def verify_join_lemma(max_vertices: int = 5) -> VerificationReport:
    """Exhaustively over all labeled graphs with 1..max_vertices vertices:
    a graph is a join exactly when its doubled graph is."""
    t0 = time.perf_counter()
    if not 1 <= max_vertices <= 6:
        raise ValueError("max_vertices must be between 1 and 6")
    labels = list("abcdef")
    failures = []
    total = 0
    for k in range(1, max_vertices + 1):
        verts = labels[:k]
        pairs = list(combinations(range(k), 2))
        for bits in range(1 << len(pairs)):
            edges = [
                (verts[i], verts[j])
                for idx, (i, j) in enumerate(pairs)
                if (bits >> idx) & 1
            ]
            graph = DefiningGraph(verts, edges)
            if is_join(graph) != is_join(dj_prime(graph)):
                failures.append({"graph": graph.to_text()})
            total += 1
    params = {"maxVertices": max_vertices}
    return _finish("join-lemma", params, failures, total, t0)


def _certificates_chunk(args):
    g, chunk, conj_ball = args
    failures = []
    for w, why in chunk:
        hit = _falsify_enc(g, w, conj_ball)
        if hit is not None:
            u, supp = hit
            failures.append(
                {
                    "word": _fmt(g, w),
                    "certificate": why,
                    "conjugator": _fmt(g, u),
                    "parabolic": sorted(
                        g.vertices[i] for i in range(g.n) if (supp >> i) & 1
                    ),
                }
            )
    return failures


def verify_essential_certificates(
    g: DefiningGraph,
    radius: int = 6,
    conj_radius: int = 3,
    extra_certified=(),
    jobs: int = 1,
    cap: int = DEFAULT_BALL_CAP,
) -> VerificationReport:
    """Every ball element certified by either criterion must survive the
    bounded falsifier.  ``extra_certified`` injects words treated as
    certified regardless — the self-test hook for the harness (an
    uncertified word there must produce a recorded FAIL)."""
    t0 = time.perf_counter()
    full = (1 << g.n) - 1
    certified: list[tuple[bytes, str]] = []
    for w in ball_bytes(g, radius, cap):
        pm = 0
        supp = 0
        for ch in w:
            pm ^= 1 << ch
            supp |= 1 << ch
        if pm == full:
            certified.append((w, "all-odd"))
        elif supp == full and bad_mask(g, w) == 0:
            certified.append((w, "good-for-all"))
    for word in extra_certified:
        certified.append((encode_word(g, word), "assumed"))
    conj_ball = ball_bytes(g, conj_radius, cap)
    results = _run_chunked(
        _certificates_chunk,
        [(g, c, conj_ball) for c in _chunks(certified, max(jobs, 1))],
        jobs,
    )
    failures = [f for fs in results for f in fs]
    params = {
        "radius": radius,
        "conjRadius": conj_radius,
        "certified": len(certified),
    }
    return _finish("essential-certificates", params, failures, len(certified), t0)
