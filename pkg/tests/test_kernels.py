"""Cross-checks between the compiled and pure-Python kernel backends."""

import random

import pytest

from coxrank import _kernel_py
from coxrank.graphs import DefiningGraph
from coxrank.kernels import BACKEND

try:
    from coxrank import _kernel  # compiled extension
except ImportError:
    _kernel = None

needs_compiled = pytest.mark.skipif(
    _kernel is None, reason="compiled kernel not built"
)


def _random_graph(rng, n):
    verts = [f"v{i}" for i in range(n)]
    edges = [
        (verts[i], verts[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.4
    ]
    return DefiningGraph(verts, edges)


@needs_compiled
def test_backends_agree_on_random_words():
    rng = random.Random(1234)
    for _ in range(300):
        g = _random_graph(rng, rng.randint(1, 8))
        word = bytes(rng.randrange(g.n) for _ in range(rng.randint(0, 20)))
        comm = g.comm_masks
        assert _kernel.is_reduced(word, comm) == _kernel_py.is_reduced(word, comm)
        assert _kernel.reduce_word(word, comm) == _kernel_py.reduce_word(word, comm)
        assert _kernel.normal_form(word, comm) == _kernel_py.normal_form(word, comm)


@needs_compiled
def test_backends_agree_on_long_words():
    rng = random.Random(99)
    g = _random_graph(rng, 6)
    comm = g.comm_masks
    for _ in range(20):
        word = bytes(rng.randrange(g.n) for _ in range(400))
        assert _kernel.reduce_word(word, comm) == _kernel_py.reduce_word(word, comm)
        assert _kernel.normal_form(word, comm) == _kernel_py.normal_form(word, comm)


def test_pure_kernel_reduction_order_is_leftmost():
    # c and a do not commute on the pentagon, so the pair of b's around c is
    # blocked and the leftmost deletable pair is the two a's.
    g = DefiningGraph(
        "abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]
    )
    word = bytes([0, 1, 0, 2])  # a b a c
    assert _kernel_py.reduce_word(word, g.comm_masks) == bytes([1, 2])  # b c


def test_active_backend_reported():
    assert BACKEND in ("compiled", "python")
