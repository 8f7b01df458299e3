import json
import pytest

from fractions import Fraction

import carrycraft.core.report as rp
import carrycraft.core.theoremlab as tl

from carrycraft.core.valuation import valuation_report


def test_dump_json_fraction():

    out = json.loads(rp.dump_json({"x": Fraction(29, 12), "y": Fraction(4)}))

    assert out == {"x": "29/12", "y": "4"}


def test_dump_json_enum_and_tuple():

    out = json.loads(rp.dump_json({"mode": tl.BoundMode.CRITERION,
                                   "pair": (3, 5)}))

    assert out == {"mode": "criterion", "pair": [3, 5]}


def test_dump_json_sorted_keys():

    text = rp.dump_json({"b": 1, "a": 2})

    assert text.index('"a"') < text.index('"b"')


def test_dump_json_as_dict():

    out = json.loads(rp.dump_json([valuation_report(756, 7)]))

    assert out[0]["nu_factorial"] == 125


def test_dump_json_unknown_type():

    with pytest.raises(TypeError):
        rp.dump_json({"x": object()})


def test_render_valuation_report():

    text = rp.render("valuation_report.txt", {
        "n": 10, "product": 105, "coprime": True,
        "reports": [{"prime": 3, "digits": "1 0 1", "s_p_n": 2,
                     "nu_factorial": 4, "nu_binom": 0, "carries": 0}]})

    lines = text.splitlines()

    assert lines[0] == "N = 10"
    assert lines[1].startswith("P = 3: digits 1 0 1")
    assert lines[-1] == "gcd(C(2N, N), 105) = 1: true"


def test_render_ellipsoid_report():

    spec = tl.PrimeTriple(3, 5, 7)
    text = rp.render("ellipsoid_report.txt", {
        "s": {"a": 2, "b": 3, "c": 4, "p": spec.p, "q": spec.q,
              "r": spec.r},
        "total": Fraction(29, 12), "region": True,
        "planes": [("xy", True), ("xz", True), ("yz", False)]})

    assert "= 29/12 >= 1: true" in text
    assert "yz trace: false" in text
