"""
Quotient matrices of B^c(s,t,kappa) and BB^c(n1,n2;kappa) and their quartics.

The 4x4 quotients come from the equitable partitions of the two complements:
(G_s, G_t minus v, cut, v) for B^c and (side 1 minus U, U, side 2 minus W, W)
for BB^c. Both characteristic polynomials are even, so every root is
obtained in closed form from the quadratic in lambda^2.
"""

import csv
import io
import math
from collections.abc import Iterable

import numpy as np
from pydantic import BaseModel

from compspec.errors import ParameterError, QuarticError
from compspec.schemas.params import BBParams, BParams
from compspec.schemas.quartic import FSweepRow, GSweepRow, Quartic
from compspec.schemas.spectrum import TOLERANCE


def quotient_matrix_B(s: int, t: int, kappa: int) -> np.ndarray:
    """
    Quotient of B^c(s,t,kappa) on (x_s, x_t, x_kappa, x_v).

    Raises:
        ParameterError: if (s,t,kappa) is not a valid B(s,t,kappa) tuple
    """
    BParams.for_B(s, t, kappa, allow_unordered=True)
    return np.array(
        [
            [0, t - 1, 0, 1],
            [s, 0, 0, 0],
            [0, 0, 0, 1],
            [s, 0, kappa, 0],
        ],
        dtype=np.int64,
    )


def quotient_matrix_BB(n1: int, n2: int, kappa: int) -> np.ndarray:
    """
    Quotient of the join-variant BB^c(n1,n2;kappa) on (x_1, x_2, x_3, x_4).

    Raises:
        ParameterError: if (n1,n2,kappa) is not a valid BB tuple
    """
    BBParams.build(n1, n2, kappa)
    return np.array(
        [
            [0, 0, n2 - kappa, kappa],
            [0, 0, n2 - kappa, 0],
            [n1 - kappa, kappa, 0, 0],
            [n1 - kappa, 0, 0, 0],
        ],
        dtype=np.int64,
    )


def characteristic_coefficients(matrix: np.ndarray) -> np.ndarray:
    """Coefficients of det(lambda I - M), highest degree first."""
    return np.poly(np.asarray(matrix, dtype=float))


def f_poly(s: int, t: int, kappa: int) -> Quartic:
    """f_{s,t}(lambda) = lambda^4 - (kappa + st) lambda^2 + kappa s (t - 1)."""
    return Quartic(
        kind="f",
        params={"s": s, "t": t, "kappa": kappa},
        c2=-(kappa + s * t),
        c0=kappa * s * (t - 1),
    )


def g_poly(n1: int, n2: int, kappa: int) -> Quartic:
    """g_{n1,n2}(lambda) = lambda^4 + (k^2 - n1 n2) lambda^2 + k^4 - (n1+n2) k^3 + n1 n2 k^2."""
    return Quartic(
        kind="g",
        params={"n1": n1, "n2": n2, "kappa": kappa},
        c2=kappa**2 - n1 * n2,
        c0=kappa**4 - (n1 + n2) * kappa**3 + n1 * n2 * kappa**2,
    )


def quartic_extreme_roots(q: Quartic) -> tuple[float, float]:
    """
    Largest and smallest real root of an even quartic.

    Returns:
        Tuple of (max_root, min_root); min_root is -max_root

    Raises:
        QuarticError: if the quadratic in lambda^2 has no nonnegative real root
    """
    disc = q.discriminant
    if disc < 0:
        raise QuarticError(f"negative discriminant {disc} for {q.kind}{q.params}")
    top = (-q.c2 + math.sqrt(disc)) / 2.0
    if top < 0:
        if top < -TOLERANCE:
            raise QuarticError(f"{q.kind}{q.params} has no real roots")
        top = 0.0
    root = math.sqrt(top)
    return root, -root


def f_difference(s: int, t: int, kappa: int, lam: float) -> float:
    """f_{s,t}(lambda) - f_{s-1,t+1}(lambda) = (s-t-1) lambda^2 - kappa (s-t)."""
    return (s - t - 1) * lam * lam - kappa * (s - t)


def theta(s: int, t: int, kappa: int) -> float:
    """
    Positive root of :func:`f_difference`: sqrt(kappa (1 + 1/(s-t-1))).

    Returns NaN when kappa (s-t)/(s-t-1) is negative.

    Raises:
        ParameterError: if s - t - 1 = 0
    """
    if s - t - 1 == 0:
        raise ParameterError("theta is undefined for s = t + 1")
    inner = kappa * (s - t) / (s - t - 1)
    if inner < 0:
        return math.nan
    return math.sqrt(inner)


def g_difference(n1: int, n2: int, kappa: int, lam: float) -> float:
    """g_{n1,n2}(lambda) - g_{n1-1,n2+1}(lambda) = (n1-n2-1)(lambda^2 - kappa^2)."""
    return (n1 - n2 - 1) * (lam * lam - kappa * kappa)


def alpha(kappa: int) -> float:
    """Least root of :func:`g_difference`."""
    return -float(kappa)


def sigma_formula_B(s: int, t: int, kappa: int) -> int:
    """Closed-form transmission of B^c(s,t,kappa)."""
    return kappa**2 + (2 * s + 3 * t - 3) * kappa + s**2 + t**2 + s * t - s - t


def sigma_formula_BB(n1: int, n2: int, kappa: int) -> int:
    """Closed-form transmission of the join-variant BB^c(n1,n2;kappa); needs n2 > kappa."""
    return n1**2 + n2**2 + n1 * n2 - n1 - n2 + 2 * kappa**2


def h_B(s: int, t: int, kappa: int) -> float:
    """Numerator of lambda_1 - sqrt(kappa) obtained from the transmission bound."""
    rk = math.sqrt(kappa)
    return (
        2 * kappa**2
        + 2 * (2 * s + 3 * t - 3) * kappa
        + 2 * s**2
        + 2 * t**2
        + 2 * s * t
        - 2 * s
        - 2 * t
        - s * rk
        - t * rk
        - kappa * rk
    )


def h_BB(n1: int, n2: int, kappa: int) -> float:
    """Numerator of alpha - lambda_n obtained from the transmission bound."""
    return float(
        2 * n1**2 + 2 * n2**2 + 2 * n1 * n2 - 2 * (n1 + n2) + 4 * kappa**2 - (n1 + n2) * kappa
    )


def _f_row(s: int, t: int, kappa: int) -> FSweepRow:
    q = f_poly(s, t, kappa)
    top, _ = quartic_extreme_roots(q)
    shifted, _ = quartic_extreme_roots(f_poly(s - 1, t + 1, kappa))
    th = theta(s, t, kappa)
    anchor = math.sqrt((kappa + s * t) / 2.0)
    return FSweepRow(
        s=s,
        t=t,
        kappa=kappa,
        c2=q.c2,
        c0=q.c0,
        max_root=top,
        shifted_max_root=shifted,
        theta=th,
        monotone=top > shifted + TOLERANCE,
        above_theta=top > th + TOLERANCE,
        anchor_holds=top > anchor + TOLERANCE and q(anchor) < 0,
    )


def sweep_lemma_3_3(max_n: int) -> list[FSweepRow]:
    """f-quartic checks for every 2 <= s <= t, kappa >= 1 with s + t + kappa <= max_n."""
    rows = []
    for kappa in range(1, max_n):
        for s in range(2, max_n):
            for t in range(s, max_n - s - kappa + 1):
                rows.append(_f_row(s, t, kappa))
    return rows


def _g_row(n1: int, n2: int, kappa: int) -> GSweepRow:
    q = g_poly(n1, n2, kappa)
    top, bottom = quartic_extreme_roots(q)
    shifted = monotone = None
    if n1 > n2 + 1:
        _, shifted = quartic_extreme_roots(g_poly(n1 - 1, n2 + 1, kappa))
        monotone = bottom > shifted + TOLERANCE
    return GSweepRow(
        n1=n1,
        n2=n2,
        kappa=kappa,
        c2=q.c2,
        c0=q.c0,
        min_root=bottom,
        shifted_min_root=shifted,
        monotone=monotone,
        above_kappa=top > kappa + TOLERANCE,
    )


def sweep_lemma_4_2(max_n: int) -> list[GSweepRow]:
    """g-quartic checks for every valid (n1 >= n2 >= kappa, n1 + n2 > 2 kappa) with n1 + n2 <= max_n."""
    rows = []
    for kappa in range(1, max_n):
        for n2 in range(kappa, max_n):
            for n1 in range(max(n2, 2 * kappa - n2 + 1), max_n - n2 + 1):
                rows.append(_g_row(n1, n2, kappa))
    return rows


def rows_to_csv(rows: Iterable[BaseModel]) -> str:
    """Flat CSV export of sweep rows (header from the first row's fields)."""
    rows = list(rows)
    out = io.StringIO()
    if not rows:
        return ""
    writer = csv.DictWriter(out, fieldnames=list(type(rows[0]).model_fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.model_dump())
    return out.getvalue()
