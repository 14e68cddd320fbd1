#!/usr/bin/env python3
"""Smoke test for the dipolar_py extension module.

Builds the cdylib if needed, stages it under an importable name, and
exercises the bound functions against known values.

Run: python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def find_or_build_library():
    candidates = [
        os.path.join(ROOT, "target", profile, "libdipolar_py.so")
        for profile in ("release", "debug")
    ]
    for c in candidates:
        if os.path.exists(c):
            return c
    subprocess.run(["cargo", "build", "-p", "dipolar-py"], cwd=ROOT, check=True)
    return candidates[-1]


def main():
    lib = find_or_build_library()
    staging = tempfile.mkdtemp(prefix="dipolar-py-")
    shutil.copy(lib, os.path.join(staging, "dipolar_py.so"))
    sys.path.insert(0, staging)
    import dipolar_py as dp

    # singlet: maximally entangled
    singlet = [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ]
    assert dp.concurrence_x_state(singlet) == 1.0
    assert abs(dp.concurrence(singlet) - 1.0) < 1e-12
    lams = dp.concurrence_lambdas(singlet)
    assert abs(lams[0] - 1.0) < 1e-12 and max(lams[1:]) < 1e-12

    # thermal pair vs closed forms
    c, m = dp.thermal_point(5.0, 3.0)
    assert abs(c - 0.3454440237172905) < 1e-10
    assert abs(dp.concurrence_closed(5.0, 3.0) - c) < 1e-10
    assert m < 0.0
    assert abs(dp.magnetization_closed(5.0, 3.0) - m) < 1e-10

    # longitudinal orientation is separable
    c_long, _ = dp.thermal_point(5.0, 3.0, theta=0.0)
    assert c_long == 0.0

    # entanglement boundary
    bc = dp.boundary_beta(1.0)
    assert 2.21 <= bc <= 2.31
    assert abs(dp.boundary_beta(1.0, method="numeric") - bc) < 1e-6

    # concurrence-magnetization fit
    a, b, rms, n_entangled = dp.fit_concurrence_vs_magnetization(3.0, 3.32)
    assert abs(a + 0.71) <= 0.05 and abs(b - 0.26) <= 0.03
    assert rms < 0.01 and n_entangled > 10

    # three-spin triangle: symmetric pairs agree
    tri = [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.5, 3.0**0.5 / 2.0, 0.0)]
    cs = [dp.nspin_pair(tri, 5.0, 3.0, pair=p)[0] for p in ((1, 2), (1, 3), (2, 3))]
    assert max(cs) - min(cs) <= 1e-10
    assert abs(cs[0] - 0.17916340382901866) < 1e-10

    # small sweep through the grid engine
    rows = dp.sweep_transverse([0.0, 2.0, 5.0], [3.0])
    assert len(rows) == 3
    assert rows[0][2] == 0.0 and rows[2][2] > 0.3

    print(f"smoke test passed: boundary beta_c(1) = {bc:.6f}, fit a = {a:.4f}, b = {b:.4f}")


if __name__ == "__main__":
    main()
