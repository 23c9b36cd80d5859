#!/usr/bin/env python3
"""Compare the compiled patch kernels against the numpy fallback.

Times im2col / col2im on training-realistic geometries plus one composite
conv2d forward per backend. Run after `python setup.py build_ext --inplace`;
CERTSLIM_NO_EXT=1 certslim ... selects the fallback at import in normal use.
"""

import time

import numpy as np

from certslim.kernels import _convkern  # noqa: F401  (fails loudly if not built)
from certslim.kernels import reference

try:
    from certslim.kernels import _convkern as compiled
except ImportError:
    compiled = None

CASES = [
    # (label, N, C, H, kh, stride, pad)
    ("mnist conv1 batch", 512, 1, 28, 4, 2, 1),
    ("mnist conv2 batch", 512, 8, 14, 4, 2, 1),
    ("backward-pass rows", 1280, 16, 8, 4, 2, 1),
    ("cifar cnn7 stage", 64, 64, 32, 3, 1, 1),
    ("single sample", 1, 64, 32, 3, 1, 1),
]


def timeit(fn, repeats=7):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def main():
    if compiled is None:
        raise SystemExit("compiled extension missing; run: python setup.py build_ext --inplace")
    print(f"{'case':24s} {'op':8s} {'numpy ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for label, n, c, h, k, stride, pad in CASES:
        rng = np.random.default_rng(0)
        x = rng.random((n, c, h, h), dtype=np.float32)
        cols = reference.im2col(x, k, k, stride, pad)
        for op, ref_fn, ext_fn in [
            ("im2col", lambda: reference.im2col(x, k, k, stride, pad), lambda: compiled.im2col(x, k, k, stride, pad)),
            (
                "col2im",
                lambda: reference.col2im(cols, c, h, h, k, k, stride, pad),
                lambda: compiled.col2im(cols, c, h, h, k, k, stride, pad),
            ),
        ]:
            t_ref = timeit(ref_fn)
            t_ext = timeit(ext_fn)
            print(f"{label:24s} {op:8s} {t_ref:10.3f} {t_ext:12.3f} {t_ref / t_ext:7.2f}x")

    # composite conv2d forward through the autodiff op, both backends
    import certslim.kernels as K
    from certslim import autodiff as ad

    rng = np.random.default_rng(1)
    x = ad.as_tensor(rng.random((256, 8, 14, 14), dtype=np.float32))
    w = ad.as_tensor(rng.random((16, 8, 4, 4), dtype=np.float32))
    b = ad.as_tensor(rng.random(16, dtype=np.float32))
    for name, impl in [("numpy", reference), ("compiled", compiled)]:
        K.im2col, K.col2im = impl.im2col, impl.col2im
        t = timeit(lambda: ad.conv2d(x, w, b, stride=2, padding=1))
        print(f"conv2d forward (256x8x14x14)  {name:8s} {t:8.3f} ms")


if __name__ == "__main__":
    main()
