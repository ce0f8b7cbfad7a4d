"""Residual assembly for the functional and algebraic series identities.

Each system yields one or more *readings* — alternative transcriptions kept
wherever the printed source is ambiguous or fails the residual test — and each
reading carries named equations as (label, lhs, rhs) series pairs.  Evaluation
never auto-corrects: every reading is reported with its own residual outcome.
"""

import hashlib
import json
from importlib import resources

from catschett.serieslab import families
from catschett.serieslab.laurent import LaurentPoly2
from catschett.serieslab.series import TruncatedSeries, geometric_t2

FUNCTIONAL_SYSTEMS = ("lem3.1", "eq:ee", "eq:eo", "eq:o", "eq:G", "eq:LE")
ALGEBRAIC_SYSTEMS = ("alg:gf1", "thm1.6i", "alg:gf2", "bbs")

Equations = list[tuple[str, TruncatedSeries, TruncatedSeries]]
Readings = list[tuple[str, Equations]]


def load_appendix_coefficients() -> dict[str, list]:
    """Load the transcribed equation coefficients, verifying the stored checksum."""
    text = resources.files("catschett.serieslab").joinpath("appendix_coefficients.json").read_text()
    data = json.loads(text)
    payload = json.dumps(data["coefficients"], sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if digest != data["sha256"]:
        raise ValueError("appendix coefficient data does not match its checksum")
    return data["coefficients"]


def coefficient_series(coeffs: dict[str, list], key: str, order: int) -> TruncatedSeries:
    """One stored coefficient polynomial as a truncated series in t with Laurent coefficients."""
    per_order: dict[int, dict[tuple[int, int], int]] = {}
    for td, xd, yd, c in coeffs[key]:
        if td <= order:
            per_order.setdefault(td, {})[(xd, yd)] = per_order.setdefault(td, {}).get((xd, yd), 0) + c
    return TruncatedSeries(order, [LaurentPoly2(per_order.get(k)) for k in range(order + 1)])


def first_failure(lhs: TruncatedSeries, rhs: TruncatedSeries) -> dict | None:
    """Locus of the lowest nonzero residual coefficient, or None when the sides agree."""
    nz = (lhs - rhs).first_nonzero()
    if nz is None:
        return None
    k, poly = nz
    a, b, _ = poly.sorted_terms()[0]
    return {
        "t_order": k,
        "monomial": f"x^{a}*y^{b}",
        "lhs": lhs.coefficient(k).coefficient(a, b),
        "rhs": rhs.coefficient(k).coefficient(a, b),
    }


def _functional_readings(name: str, order: int) -> Readings:
    geo = geometric_t2(order)
    one = TruncatedSeries.one(order)
    if name == "lem3.1":
        _, eo, oe, _ = families.compute_EE_EO_OE_OO(order)
        return [("literal", [("EO=OE", eo, oe)])]
    if name == "eq:G":
        ee, eo, oe, oo = families.compute_EE_EO_OE_OO(order)
        g_perm = families.compute_G(order, source="perm")
        g_dyck = families.compute_G(order, source="dyck")
        return [("literal", [("G=EE+2EO+OO", g_perm, ee + eo + eo + oo), ("G routes", g_perm, g_dyck)])]
    if name == "eq:ee":
        ee, eo, oe, oo = families.compute_EE_EO_OE_OO(order)
        t11 = geo.mul_monomial(2, 0, 1)
        t12 = oe.mul_monomial(1, -1, 1)
        inner21 = oe - (ee - geo.mul_monomial(2, 0, 1)).mul_monomial(1, 1, -1)
        fac21 = one + ee.mul_monomial(0, 0, -1) + oe.mul_monomial(0, 0, -1)
        t21 = (inner21 * fac21).mul_monomial(1, -1, 1)
        inner22 = oo - geo.mul_monomial(1, 1, 0) - eo.mul_monomial(1, 1, -1)
        fac22 = (
            ee.mul_monomial(0, 0, -1)
            - geo.mul_monomial(2, 0, 0)
            + oe.mul_monomial(0, -2, 1)
            + geo.mul_monomial(1, -1, 1)
        )
        t22 = (inner22 * fac22).mul_monomial(1, -1, 1)
        return [("literal", [("EE", ee, t11 + t12 + t21 + t22)])]
    if name == "eq:eo":
        ee, eo, oe, oo = families.compute_EE_EO_OE_OO(order)
        t1 = (oo - geo.mul_monomial(1, 1, 0)).mul_monomial(1, -1, 1)
        inner21 = oe - (ee - geo.mul_monomial(2, 0, 1)).mul_monomial(1, 1, -1)
        inner22 = oo - eo.mul_monomial(1, 1, -1) - geo.mul_monomial(1, 1, 0)
        fac22 = geo + eo.mul_monomial(0, 0, -1) + oo.mul_monomial(0, -2, 1) - geo.mul_monomial(1, -1, 1)
        t22 = (inner22 * fac22).mul_monomial(1, -1, 1)
        readings = []
        for label, mult in (("literal (EO+EE)", eo + ee), ("terminal-parity variant (EO+OO)", eo + oo)):
            t21 = (inner21 * mult).mul_monomial(1, -1, 0)
            readings.append((label, [("EO", eo, t1 + t21 + t22)]))
        return readings
    if name == "eq:o":
        ee, eo, oe, oo = families.compute_EE_EO_OE_OO(order)
        f = eo.mul_monomial(0, 0, -1) + geo + oo.mul_monomial(0, -2, 1) - geo.mul_monomial(1, -1, 1)
        o1 = geo.mul_monomial(1, 1, 0)
        o2 = eo.mul_monomial(1, 1, -1)
        o3 = (eo + geo.mul_monomial(0, 0, 1)).mul_monomial(2, 2, -1)
        o4 = (oo - geo.mul_monomial(1, 1, 0)).mul_monomial(2, 0, 1)
        o5 = ((eo + geo.mul_monomial(2, 0, 1)) * f).mul_monomial(2, 2, -1)
        o6 = ((ee - geo.mul_monomial(2, 0, 1)) * (eo + oo)).mul_monomial(2, 2, -2)
        o7 = ((oo - geo.mul_monomial(1, 1, 0)) * f).mul_monomial(2, 0, 1)
        o8 = ((oe + geo.mul_monomial(1, 1, 0)) * (eo + oo)).mul_monomial(2, 0, 0)
        o9 = ((ee - geo.mul_monomial(2, 0, 1) - oe.mul_monomial(1, -1, 1)) * (oo + eo)).mul_monomial(1, 1, -2)
        o10 = ((eo - (oo - geo.mul_monomial(1, 1, 0)).mul_monomial(1, -1, 1)) * f).mul_monomial(1, 1, -1)
        return [("literal", [("OO", oo, o1 + o2 + o3 + o4 + o5 + o6 + o7 + o8 + o9 + o10)])]
    if name == "eq:LE":
        m = families.compute_M(order)
        le, lo, e, o = families.compute_LE_LO_E_O(order)
        le_s, lo_s, e_s, o_s = le.swap_xy(), lo.swap_xy(), e.swap_xy(), o.swap_xy()
        equations = [
            ("M=LE+LO", m, le + lo),
            (
                "LE",
                le,
                (o * (one + le)).mul_monomial(1, 1, 0) + lo_s.mul_monomial(1, 0, 0) + (e * lo_s).mul_monomial(1, 0, 1),
            ),
            (
                "LO",
                lo,
                (o * lo).mul_monomial(1, 1, 0)
                + (one + le_s).mul_monomial(1, 0, 0)
                + ((one + le_s) * e).mul_monomial(1, 0, 1),
            ),
            ("E", e, (o * (one + le)).mul_monomial(1, 0, 0) + ((one + e) * lo_s).mul_monomial(1, 0, 0)),
            ("O", o, (o * lo).mul_monomial(1, 0, 0) + ((one + e) * (one + le_s)).mul_monomial(1, 0, 0)),
            (
                "LE swapped",
                le_s,
                (o_s * (one + le_s)).mul_monomial(1, 0, 1) + lo.mul_monomial(1, 0, 0) + (e_s * lo).mul_monomial(1, 1, 0),
            ),
            (
                "LO swapped",
                lo_s,
                (o_s * lo_s).mul_monomial(1, 0, 1)
                + (one + le).mul_monomial(1, 0, 0)
                + ((one + le) * e_s).mul_monomial(1, 1, 0),
            ),
            ("E swapped", e_s, (o_s * (one + le_s)).mul_monomial(1, 0, 0) + ((one + e_s) * lo).mul_monomial(1, 0, 0)),
            ("O swapped", o_s, (o_s * lo_s).mul_monomial(1, 0, 0) + ((one + e_s) * (one + le)).mul_monomial(1, 0, 0)),
        ]
        return [("literal", equations)]
    raise ValueError(f"unknown functional system: {name}")


def _polynomial_residual(series: TruncatedSeries, coeff_list: list[TruncatedSeries]) -> TruncatedSeries:
    # coeff_list[k] multiplies series**k
    acc = coeff_list[0]
    power = TruncatedSeries.one(series.order)
    for coeff in coeff_list[1:]:
        power = power * series
        acc = acc + coeff * power
    return acc


def _algebraic_readings(name: str, order: int) -> Readings:
    coeffs = load_appendix_coefficients()
    zero = TruncatedSeries.zero(order)

    def cs(key: str) -> TruncatedSeries:
        return coefficient_series(coeffs, key, order)

    if name == "alg:gf1":
        g = families.compute_G(order)
        readings = []
        for label, a2key in (("literal", "alg_gf1_a2"), ("alpha2 minus 8t^2xy", "alg_gf1_a2_minus_8t2xy")):
            coeff_list = [cs("alg_gf1_a0"), cs("alg_gf1_a1"), cs(a2key), cs("alg_gf1_a3"), cs("alg_gf1_a4")]
            readings.append((label, [("residual", _polynomial_residual(g, coeff_list), zero)]))
        return readings
    if name == "thm1.6i":
        a = families.compute_A(order)
        coeff_list = [cs("quartic_r0"), cs("quartic_r1"), cs("quartic_r2"), -1 * cs("quartic_r3"), cs("quartic_c4")]
        return [("literal", [("residual", _polynomial_residual(a, coeff_list), zero)])]
    if name == "alg:gf2":
        m = families.compute_M(order)
        readings = []
        for label, b1key in (
            ("beta1 t^11 (literal)", "alg_gf2_b1_literal"),
            ("beta1 t^10", "alg_gf2_b1_t10"),
            ("beta1 t^10 minus x^2t", "alg_gf2_b1_t10_minus_x2t"),
        ):
            coeff_list = [cs("alg_gf2_b0"), cs(b1key)] + [cs(f"alg_gf2_b{k}") for k in range(2, 7)]
            readings.append((label, [("residual", _polynomial_residual(m, coeff_list), zero)]))
        return readings
    if name == "bbs":
        b = families.compute_B(order)
        readings = []
        for label, linkey in (("2t^2x", "bbs_lin_t2x"), ("2tx", "bbs_lin_tx")):
            res = _polynomial_residual(b, [cs("bbs_q0"), cs(linkey), cs("bbs_q2")])
            readings.append((label, [("residual", res, zero)]))
        return readings
    raise ValueError(f"unknown algebraic system: {name}")


def system_readings(name: str, order: int) -> Readings:
    """All candidate readings of one identity system, each with its equations."""
    if name in FUNCTIONAL_SYSTEMS:
        return _functional_readings(name, order)
    if name in ALGEBRAIC_SYSTEMS:
        return _algebraic_readings(name, order)
    raise ValueError(f"unknown system: {name}")
