import random

import pytest

from xyangian import algebra
from xyangian._rewrite_py import Rewriter as PyRewriter
from xyangian.algebra import RTTAlgebra
from xyangian.tensor import AlgebraContext

try:
    from xyangian._rewrite import Rewriter as CRewriter
except ImportError:
    CRewriter = None


def test_kernel_selected():
    assert algebra.KERNEL in ("compiled", "python")
    if CRewriter is not None:
        assert algebra.KERNEL in ("compiled", "python")


@pytest.mark.skipif(CRewriter is None, reason="compiled kernel not built")
@pytest.mark.parametrize("kind,n", [("B", 1), ("C", 2), ("D", 2)])
def test_compiled_matches_python(kind, n):
    ctx = AlgebraContext.of(kind, n)
    a, b = RTTAlgebra(ctx), RTTAlgebra(ctx)
    a.rw, b.rw = PyRewriter(a), CRewriter(b)
    N = ctx.N
    letters = [a.encode(i, j, r) for r in (1, 2) for i in range(1, N + 1) for j in range(1, N + 1)]
    rng = random.Random(7)
    for _ in range(30):
        w = tuple(rng.choice(letters) for _ in range(3))
        assert a.normal_order({w: 1}).terms == b.normal_order({w: 1}).terms
    assert set(a.rw.stats()) == set(b.rw.stats())


@pytest.mark.skipif(CRewriter is None, reason="compiled kernel not built")
def test_compiled_api_surface():
    for name in ("is_dep", "square", "comm", "dep", "insert", "word_times", "poly_times_word",
                 "mul", "normal_order", "nf_word", "stats"):
        assert hasattr(CRewriter, name) and hasattr(PyRewriter, name)
