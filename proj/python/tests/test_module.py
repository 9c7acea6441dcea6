import math

import pytest

nodalpart = pytest.importorskip("nodalpart")

MOEBIUS = {"surface": "moebius", "width": 16, "height": 16}


def test_random_partition_is_seeded():
    a = nodalpart.random_partition(MOEBIUS, seed=5, k=4)
    b = nodalpart.random_partition(MOEBIUS, seed=5, k=4)
    assert a == b
    assert len(a["labels"]) == 256
    assert len(set(a["labels"])) == 4


def test_moebius_defect_is_zero():
    for seed in range(20):
        r = nodalpart.verify(nodalpart.random_partition(MOEBIUS, seed=seed, k=1 + seed % 6))
        assert r["defect"] == 0
        assert r["verdict"]["status"] == "pass"
        assert r["chi_sigma"]["holds"]


def test_rectangle_saddle():
    labels = []
    n = 30
    for j in range(n):
        for i in range(n):
            x, y = (i + 0.5) * math.pi / n, (j + 0.5) * math.pi / n
            labels.append(int(math.sin(2 * x) * math.sin(3 * y) > 0))
    r = nodalpart.invariants({"surface": {"surface": "rectangle", "width": n, "height": n}, "labels": labels})
    assert (r["kappa"], r["beta"], r["sigma"], r["defect"]) == (6, 0, 5, 1)


def test_bands_three():
    r = nodalpart.stable_invariants({"family": "bands", "m": 3}, resolution=32)
    assert (r["kappa"], r["omega"], r["beta"]) == (2, 1, 1)
    assert r["resolutions"][-1] == r["resolution"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(nodalpart.InvalidInput):
        nodalpart.invariants({"surface": {"surface": "torus", "width": 2, "height": 2}, "labels": [0]})
    with pytest.raises(nodalpart.InvalidInput):
        nodalpart.invariants("{nope")
    with pytest.raises(nodalpart.InstabilityError):
        nodalpart.stable_invariants({"family": "bands", "m": 7}, resolution=4, max_refine=1)
    assert issubclass(nodalpart.InstabilityError, nodalpart.NodalpartError)


def test_run_cli_exit_codes():
    code, doc, err = nodalpart.run("nodal", "--family", "bands", "--m", "5", "--n", "16")
    assert code == 0, err
    assert doc["kappa"] == 3
    code, doc, err = nodalpart.run("frobnicate")
    assert code == 2 and doc is None and err
