import random

import pytest

from cactusdoodle import _canon_py, _kernel
from cactusdoodle.closure import close
from cactusdoodle.diagram import canonical_key
from diagen import embedded_circle, fig8, random_doodle, random_word, scramble

try:
    from cactusdoodle import _canon
except ImportError:
    _canon = None

needs_compiled = pytest.mark.skipif(_canon is None,
                                    reason="compiled kernel not built")


def test_backend_reported():
    assert _kernel.BACKEND in ("compiled", "python")


def pairs(rng, count):
    yield fig8()
    yield embedded_circle()
    for _ in range(count):
        d = close(random_word(rng))
        yield scramble(rng, d) if rng.random() < 0.5 else d
    for _ in range(count // 4):
        yield random_doodle(rng)


@needs_compiled
def test_backends_agree_byte_for_byte():
    rng = random.Random(73)
    for d in pairs(rng, 200):
        for labeled in (False, True):
            compiled = _kernel.canonical_key(d.circles, d.labels, d.orders,
                                             labeled, backend=_canon)
            pure = _kernel.canonical_key(d.circles, d.labels, d.orders,
                                         labeled, backend=_canon_py)
            assert compiled == pure


@needs_compiled
def test_backends_agree_on_walk_map():
    rng = random.Random(79)
    for d in pairs(rng, 40):
        args, _ = _kernel.prep(d.circles, d.labels, d.orders, False)
        assert _canon.canonical_core(*args, want_map=True) == \
            _canon_py.canonical_core(*args, want_map=True)


def test_key_round_trips_through_unpack():
    d = fig8()
    key = canonical_key(d)
    vec = _kernel.unpack_key(key)
    assert vec[0] == 0 and vec[1] == 0 and vec[2] == 1
    assert _kernel.render_key(key).startswith("k0;f0;c2;w0,0;s2:")


def test_render_key_handles_free_loops():
    d = embedded_circle()
    assert _kernel.render_key(canonical_key(d)) == "k0;f1;c-;w-"
