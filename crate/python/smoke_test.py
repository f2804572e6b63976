"""Smoke test for the ssok_py extension module."""

import json

import ssok_py


def test_sset():
    assert ssok_py.sset_counts("simplex", 2) == [3, 3, 1]
    assert ssok_py.sset_counts("horn", 2, 1) == [3, 2]
    assert ssok_py.euler("boundary", 3) == 2


def test_operads():
    assert ssok_py.strict_fiber_size("AssInv", "id") == 4
    assert ssok_py.strict_fiber_size("Ass", "id") == 2
    assert ssok_py.ext_pi0("AssInv", "id") == 2
    assert ssok_py.ext_pi0("Comm", "c2") == 1
    assert ssok_py.ext_pi0("Comm", "c2", full=True) == 1
    assert ssok_py.ext_pi0("Ass", "id") == 2


def test_suite():
    rows = [json.loads(line) for line in ssok_py.suite("assinv").splitlines()]
    assert rows and all(r["verdict"] != "fail" for r in rows)


if __name__ == "__main__":
    test_sset()
    test_operads()
    test_suite()
    print("ok")
