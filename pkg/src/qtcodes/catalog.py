"""Verified catalog records for the QT two-weight family."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from .analyze import ENUMERATION_CAP, weight_distribution
from .bounds import paper_claims_d_optimal, theorem5_report
from .errors import QTCodesError, TooLarge, VerificationError
from .gf import make_field
from .qtconstruct import build_code

CSV_COLUMNS = (
    "q", "t", "p", "n", "k", "lambda", "w1", "w2", "d",
    "griesmer_n", "gap", "i", "r", "length_optimal", "paper_d_optimal",
)

# every published code at desk scale, as (q, t)
DEFAULT_GRID = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2))


@dataclass
class CodeRecord:
    q: int
    t: int
    p: int
    n: int
    k: int
    lambda_enc: int
    w1: int
    w2: int
    d: int
    griesmer_n: int
    gap: int
    i: int
    r: int
    length_optimal: bool
    paper_d_optimal: bool
    h_coeffs: list = field(default_factory=list)
    g_coeffs: list = field(default_factory=list)
    weight_counts: dict = field(default_factory=dict)

    def csv_row(self) -> list:
        return [
            self.q, self.t, self.p, self.n, self.k, self.lambda_enc, self.w1, self.w2, self.d,
            self.griesmer_n, self.gap, self.i, self.r,
            str(self.length_optimal).lower(), str(self.paper_d_optimal).lower(),
        ]

    def to_json(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lambda_enc")
        out["weight_counts"] = {str(w): a for w, a in sorted(self.weight_counts.items())}
        return out


def make_record(q: int, t: int, p: int, h=None, cap: int = ENUMERATION_CAP, code=None) -> CodeRecord:
    """Construct the (q, t, p) code, enumerate it and cross-check every parameter."""
    f = make_field(q)
    if code is None:
        code = build_code(f, t, p, h, verify=False)
    lc = code.linear_code()
    if lc.k != 2 * t:
        raise VerificationError(f"rank {lc.k} != {2 * t}")
    wd = weight_distribution(lc, cap)
    ws = wd.nonzero_weights
    expected = sorted({code.w1, code.w2})
    if ws != expected:
        raise VerificationError(f"nonzero weights {ws} != {expected}")
    if not wd.power_moments_hold():
        raise VerificationError("power-moment identities fail")
    rep, par = theorem5_report(q, t, p)
    if rep.d != ws[0] or rep.n != lc.n:
        raise VerificationError(f"enumerated [{lc.n}, d={ws[0]}] disagrees with [{rep.n}, d={rep.d}]")
    return CodeRecord(
        q=q, t=t, p=p, n=lc.n, k=lc.k, lambda_enc=code.lam,
        w1=ws[0], w2=ws[-1], d=ws[0],
        griesmer_n=rep.griesmer_n, gap=rep.slack, i=par.i, r=par.r,
        length_optimal=rep.meets_bound,
        paper_d_optimal=paper_claims_d_optimal(lc.n, lc.k, ws[0], q, t=t, p=p),
        h_coeffs=list(code.base.h.coeffs), g_coeffs=list(code.base.g.coeffs),
        weight_counts=dict(wd.counts),
    )


def catalog_points(q_list=None, t_list=None, p_range=None):
    """(q, t, p) triples in ascending order; ``p_range=None`` means 2..q^t+1."""
    if q_list is None and t_list is None:
        grid = DEFAULT_GRID
    else:
        qs = q_list or sorted({q for q, _ in DEFAULT_GRID})
        ts = t_list or [2]
        grid = [(q, t) for q in qs for t in ts]
    for q, t in sorted(grid):
        if p_range is None:
            ps = range(2, q**t + 2)
        else:
            lo, hi = p_range
            ps = range(lo, hi + 1)
        for p in ps:
            yield q, t, p


def catalog(points, cap: int = ENUMERATION_CAP):
    """Yield ``(q, t, p, record_or_None, error_or_None)``; failures do not stop the stream."""
    for q, t, p in points:
        try:
            yield q, t, p, make_record(q, t, p, cap=cap), None
        except TooLarge as exc:
            yield q, t, p, None, f"TooLarge: {exc}"
        except QTCodesError as exc:
            yield q, t, p, None, f"{type(exc).__name__}: {exc}"


def render_csv(entries) -> tuple[str, list[str]]:
    """CSV text plus a list of diagnostics for rows that failed."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    errors = []
    for q, t, p, rec, err in entries:
        if rec is not None:
            w.writerow(rec.csv_row())
        else:
            w.writerow([q, t, p] + [""] * (len(CSV_COLUMNS) - 3))
            errors.append(f"q={q} t={t} p={p}: {err}")
    return buf.getvalue(), errors


def render_json(entries) -> tuple[str, list[str]]:
    out, errors = [], []
    for q, t, p, rec, err in entries:
        if rec is not None:
            out.append(rec.to_json())
        else:
            out.append({"q": q, "t": t, "p": p, "error": err})
            errors.append(f"q={q} t={t} p={p}: {err}")
    return json.dumps(out, indent=1) + "\n", errors
