from fractions import Fraction

import c32inv


def test_poly_round_trip_and_arithmetic():
    p = c32inv.Poly.parse("x2 - 1/2 - 3/2*y11*x1^2")
    assert str(p) == "-3/2*x1^2*y11 + x2 - 1/2"
    assert (p - p).is_zero()
    assert str(p.diff("x2")) == "1"
    assert c32inv.Poly.parse(str(p * p)) == p * p


def test_relation_vanishes():
    assert c32inv.relation_residual().is_zero()
    assert c32inv.verify_trace_expansions()


def test_solve_xi():
    xi, transcript = c32inv.solve_xi()
    assert xi == {
        "xi1": Fraction(1, 27),
        "xi2": Fraction(-2, 9),
        "xi3p": Fraction(4, 15),
        "xi3pp": Fraction(1, 90),
        "xi4": Fraction(1, 3),
        "xi5": Fraction(-2, 3),
        "xi6": Fraction(-1, 3),
        "xi7": Fraction(-4, 27),
    }
    assert transcript[1].startswith("  4 - 360*xi3pp = 0")


def test_representations():
    assert c32inv.decompose_trace_space(6) == {(6, 0): 1, (4, 2): 2, (3, 3): 1}
    s = c32inv.decompose_s(12)
    assert s.get((6, 6)) == 8
    assert (3, 3) not in s
    assert c32inv.lr_tensor((2, 0), (2, 2)) == {(4, 2): 1}
    assert len(c32inv.necklaces(6)) == 14


def test_series_and_hwv():
    h = c32inv.hilbert_series(4)
    assert h[(1, 1)] == 2
    assert h[(2, 2)] == 9
    assert c32inv.series_identity_holds(16)
    assert c32inv.highest_weight_vectors(2, 2) == ["tr(XXYY) - tr(XYXY)"]


def test_cli_exit_codes():
    code, out, _ = c32inv.run_cli(["decompose", "--space", "U6"])
    assert code == 0
    assert out.splitlines()[0] == "decompose: pass"
    code, _, _ = c32inv.run_cli(["decompose", "--space", "U5"])
    assert code == 2
