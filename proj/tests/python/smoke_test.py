"""Smoke tests for the python bindings; run with PYTHONPATH at the build tree."""

import hopfgraph as hg


def test_tutte_k3():
    assert hg.tutte("K3") == [
        {"x": 2, "y": 0, "coeff": "1"},
        {"x": 1, "y": 0, "coeff": "1"},
        {"x": 0, "y": 1, "coeff": "1"},
    ]


def test_antipode_k2():
    assert hg.antipode("K2") == [
        {"graph": "n=2; edges=", "coeff": "2"},
        {"graph": "n=2; edges=0-1", "coeff": "-1"},
    ]
    # grading: every antipode term of K4 keeps 4 vertices
    assert all(t["graph"].startswith("n=4;") for t in hg.antipode("K4"))


def test_chromatic_c3():
    # k^3 - 3k^2 + 2k
    assert hg.chromatic("C3") == [
        {"k": 3, "coeff": "1"},
        {"k": 2, "coeff": "-3"},
        {"k": 1, "coeff": "2"},
    ]


def test_char_values():
    assert hg.char_eval("zeta", "E3") == "1"
    assert hg.char_eval("xi:2", "K3") == "8"
    assert hg.char_power_eval("zeta", -1, "K4") == "24"


def test_counts():
    assert hg.acyclic_count("C4") == 14
    assert hg.flats_count("K3") == 5
    assert hg.canonical_text("n=3; edges=1-0,2-1") == hg.canonical_text("P3")


def test_degree_chromatic_star():
    # P_2 of the 3-edge star: k^4 - 3k^2 + 2k
    assert hg.degree_chromatic("star3", 2) == [
        {"k": 4, "coeff": "1"},
        {"k": 2, "coeff": "-3"},
        {"k": 1, "coeff": "2"},
    ]


def test_verify_suite():
    report = hg.verify_suite("cycles")
    assert report["passed"] is True
    assert len(report["checks"]) == 6


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
