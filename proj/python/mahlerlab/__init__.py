"""Exact continued fractions, Pisot classification, and certified
fractional-part experiments for quadratic and algebraic numbers.

The heavy lifting happens in the compiled ``_mahlerlab`` extension; this
package re-exports its string-first API. Surds are written
``(a+b*sqrt(D))/c``, continued fractions ``[a0; a1, (p1, p2, ...)]``,
polynomials as ascending coefficients ``c0,c1,...``, and rationals ``p/q``.
"""

from _mahlerlab import (
    cf_convergents,
    cf_evaluate,
    cf_expand,
    frac_power,
    liouville_alpha,
    liouville_trace,
    liouville_verify,
    mahler_measure,
    period_table,
    pisot_classify,
    report_emit,
    run_mahler_rational,
    run_scan,
    run_theorem1,
    run_theorem2,
    schur_cohn_inside,
    surd_classify,
    weil_height,
)

__all__ = [
    "cf_convergents",
    "cf_evaluate",
    "cf_expand",
    "frac_power",
    "liouville_alpha",
    "liouville_trace",
    "liouville_verify",
    "mahler_measure",
    "period_table",
    "pisot_classify",
    "report_emit",
    "run_mahler_rational",
    "run_scan",
    "run_theorem1",
    "run_theorem2",
    "schur_cohn_inside",
    "surd_classify",
    "weil_height",
]

__version__ = "0.1.0"
