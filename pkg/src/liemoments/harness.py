"""Convergence experiments: exact vs quadrature vs leading-order values.

An experiment fixes a group, a highest weight, cycle types and a test class
function, then sweeps the power index N over a schedule, computing whichever
of the three routes are requested and the ratio of the reference value to the
leading-order estimate.  Reports serialize deterministically (byte-identical
reruns); wall-clock timings are kept on the report object and only serialized
on explicit request.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import charring, rootsys, torusquad
from .asymptotics import (AsymptoticEstimate, ClassFunction, HypothesisError,
                          leading_term_I, leading_term_K)
from .charring import CycleType
from .repweights import check_dominant_integral, is_regular

_PATHS = ("exact", "quad", "asymptotic")


def parse_weight(text, rank=None):
    parts = [p.strip() for p in str(text).split(",")]
    try:
        lam = tuple(int(p) for p in parts)
    except ValueError:
        raise rootsys.ConfigurationError(f"bad weight {text!r}") from None
    if rank is not None and len(lam) != rank:
        raise rootsys.ConfigurationError(
            f"weight {text!r} has {len(lam)} coordinates, expected {rank}")
    return lam


def parse_schedule(text):
    """Parse ``"1,2,4"`` or an inclusive range ``"2:160:2"``."""
    text = str(text).strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise rootsys.ConfigurationError(f"bad schedule {text!r}")
        start, stop = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
        if step <= 0 or stop < start:
            raise rootsys.ConfigurationError(f"bad schedule {text!r}")
        return tuple(range(start, stop + 1, step))
    return tuple(int(p) for p in text.split(","))


def parse_class_function(text, rank):
    """Parse ``"1"`` (constant 1) or ``"w1,..,wr:coeff; w1,..,wr:coeff"``."""
    text = str(text).strip()
    if text in ("", "1"):
        return ClassFunction.one(rank)
    terms = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise rootsys.ConfigurationError(
                f"bad class-function term {chunk!r} (want coords:coeff)")
        coords, coeff = chunk.rsplit(":", 1)
        terms.append((parse_weight(coords, rank), float(coeff)))
    if not terms:
        raise rootsys.ConfigurationError(f"empty class function {text!r}")
    return ClassFunction(tuple(terms))


@dataclass(frozen=True)
class ExperimentConfig:
    group: str
    lam: tuple
    a: CycleType
    b: CycleType = CycleType(())
    schedule: tuple = ()
    f: ClassFunction | None = None
    paths: tuple = _PATHS
    grid_sizes: tuple | None = None
    out: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if not self.schedule:
            raise rootsys.ConfigurationError("empty N schedule")
        if any(n <= 0 for n in self.schedule) or \
                any(x >= y for x, y in zip(self.schedule, self.schedule[1:])):
            raise rootsys.ConfigurationError(
                f"schedule must be strictly increasing and positive: "
                f"{self.schedule}")
        bad = [p for p in self.paths if p not in _PATHS]
        if bad or not self.paths:
            raise rootsys.ConfigurationError(
                f"paths must be a nonempty subset of {_PATHS}, got "
                f"{self.paths}")
        if self.fmt not in ("json", "csv"):
            raise rootsys.ConfigurationError(f"format must be json or csv")

    @staticmethod
    def from_mapping(m):
        m = {str(k).lower(): v for k, v in m.items()}
        group = m.get("group")
        if not group:
            raise rootsys.ConfigurationError("config needs a group")
        rs = rootsys.build_root_system(group)
        lam = parse_weight(m.get("lambda", ""), rs.rank)
        a = CycleType.parse(str(m.get("a", "")))
        b = CycleType.parse(str(m.get("b", "")))
        schedule = parse_schedule(m.get("n", ""))
        f = parse_class_function(m.get("f", "1"), rs.rank)
        paths = tuple(p.strip() for p in
                      str(m.get("paths", ",".join(_PATHS))).split(",")
                      if p.strip())
        grid = m.get("grid", "").strip() if m.get("grid") else None
        grid_sizes = (tuple(int(x) for x in grid.split(","))
                      if grid else None)
        return ExperimentConfig(group=group, lam=lam, a=a, b=b,
                                schedule=schedule, f=f, paths=paths,
                                grid_sizes=grid_sizes,
                                out=m.get("out") or None,
                                fmt=m.get("format", "json"))

    @staticmethod
    def from_file(path):
        """Read a ``key = value`` config file ('#' starts a comment)."""
        mapping = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise rootsys.ConfigurationError(
                        f"{path}:{lineno}: expected key = value")
                key, val = line.split("=", 1)
                mapping[key.strip().lower()] = val.strip()
        return ExperimentConfig.from_mapping(mapping)

    def echo(self):
        return {
            "group": self.group,
            "lambda": list(self.lam),
            "a": list(self.a.exps),
            "b": list(self.b.exps),
            "N": list(self.schedule),
            "f": [[list(nu), c] for nu, c in
                  (self.f.terms if self.f else ())],
            "paths": list(self.paths),
            "grid": list(self.grid_sizes) if self.grid_sizes else None,
            "format": self.fmt,
        }


@dataclass(frozen=True)
class HypothesisVerdict:
    """Structured yes/no record of the leading-term hypotheses.

    ``vanishing_period`` is the smallest q >= 1 such that q * k_a * lam lies
    in the root lattice; the one-sided moment is identically zero whenever N
    is not a multiple of it.
    """
    regular: bool
    gcd_one_sided: int
    gcd_two_sided: int
    k_a: int
    k_b: int
    balanced: bool
    vanishing_period: int
    problems_one_sided: tuple
    problems_two_sided: tuple

    @property
    def ok_one_sided(self):
        return not self.problems_one_sided

    @property
    def ok_two_sided(self):
        return not self.problems_two_sided

    def one_sided_nonzero(self, n):
        """Whether the one-sided moment can be nonzero at index n."""
        return n % self.vanishing_period == 0

    def to_dict(self):
        return {
            "regular": self.regular,
            "gcd_one_sided": self.gcd_one_sided,
            "gcd_two_sided": self.gcd_two_sided,
            "k_a": self.k_a,
            "k_b": self.k_b,
            "balanced": self.balanced,
            "vanishing_period": self.vanishing_period,
            "problems_one_sided": list(self.problems_one_sided),
            "problems_two_sided": list(self.problems_two_sided),
        }


def check_hypotheses(rs, lam, a, b=CycleType(())):
    """Check leading-term hypotheses without throwing on failures."""
    lam = check_dominant_integral(rs, lam)
    regular = is_regular(rs, lam)
    g1 = a.gcd_support
    g2 = math.gcd(a.gcd_support, b.gcd_support)
    k_a, k_b = a.weight, b.weight
    if k_a == 0:
        period = 1
    else:
        period = rootsys.order_mod_root_lattice(
            rs, tuple(k_a * c for c in lam))
    p1 = []
    p2 = []
    if not regular:
        p1.append("highest weight is not regular")
        p2.append("highest weight is not regular")
    if g1 != 1:
        p1.append(f"one-sided support gcd is {g1}, need 1")
    if g2 != 1:
        p2.append(f"combined support gcd is {g2}, need 1")
    if k_a != k_b:
        p2.append(f"unbalanced powers: k_a={k_a}, k_b={k_b}")
    return HypothesisVerdict(regular=regular, gcd_one_sided=g1,
                             gcd_two_sided=g2, k_a=k_a, k_b=k_b,
                             balanced=(k_a == k_b),
                             vanishing_period=period,
                             problems_one_sided=tuple(p1),
                             problems_two_sided=tuple(p2))


@dataclass
class ExperimentRow:
    n: int
    exact: object = None        # int, or float when f has float coefficients
    quad: float = None
    estimate: AsymptoticEstimate = None
    ratio: float = None
    abs_error: float = None
    notes: tuple = ()

    def to_dict(self):
        return {
            "N": self.n,
            "exact": self.exact,
            "quad": self.quad,
            "estimate": self.estimate.to_dict() if self.estimate else None,
            "ratio": self.ratio,
            "abs_error": self.abs_error,
            "notes": list(self.notes),
        }


@dataclass
class ConvergenceReport:
    config: dict
    hypotheses: HypothesisVerdict
    rows: list
    fitted_exponent: float = None
    timings: dict = field(default_factory=dict)

    def to_dict(self, include_timings=False):
        out = {
            "config": self.config,
            "hypotheses": self.hypotheses.to_dict(),
            "rows": [r.to_dict() for r in self.rows],
            "fitted_exponent": self.fitted_exponent,
        }
        if include_timings:
            out["timings"] = self.timings
        return out

    def to_json(self, include_timings=False):
        return json.dumps(self.to_dict(include_timings=include_timings),
                          indent=2, sort_keys=True) + "\n"

    def to_csv(self):
        lines = ["N,exact,quad,estimate,ratio,abs_error,notes"]
        for r in self.rows:
            est = repr(r.estimate.value) if r.estimate else ""
            cells = [str(r.n),
                     "" if r.exact is None else repr(r.exact),
                     "" if r.quad is None else repr(r.quad),
                     est,
                     "" if r.ratio is None else repr(r.ratio),
                     "" if r.abs_error is None else repr(r.abs_error),
                     "|".join(r.notes)]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def render(self, fmt="json", include_timings=False):
        if fmt == "csv":
            return self.to_csv()
        return self.to_json(include_timings=include_timings)


def _log_abs(x):
    if isinstance(x, int):
        return math.log(abs(x)) if x else float("-inf")
    return math.log(abs(x)) if x else float("-inf")


def _exact_value(rs, lam, a, b, n, f):
    """Exact moment with the class-function factor folded in."""
    total = charring.moment_weight_system(rs, lam, a.scaled(n), b.scaled(n))
    if f is None or f.is_trivial_one():
        return charring.trivial_multiplicity(rs, total)
    from .repweights import weight_system
    acc = 0
    exact_coeffs = all(float(c).is_integer() for _, c in f.terms)
    for nu, c in f.terms:
        mult = charring.trivial_multiplicity(
            rs, charring.product(total, weight_system(rs, nu)))
        acc += (int(c) if exact_coeffs else c) * mult
    return acc


def run_experiment(cfg):
    """Run all requested value routes over the N schedule."""
    rs = rootsys.build_root_system(cfg.group)
    lam = check_dominant_integral(rs, cfg.lam)
    f = cfg.f if cfg.f is not None else ClassFunction.one(rs.rank)
    verdict = check_hypotheses(rs, lam, cfg.a, cfg.b)
    two_sided = bool(cfg.b.exps)
    timings = {p: 0.0 for p in cfg.paths}
    rows = []
    for n in cfg.schedule:
        row = ExperimentRow(n=n)
        notes = []
        if "exact" in cfg.paths:
            t0 = time.perf_counter()
            try:
                row.exact = _exact_value(rs, lam, cfg.a, cfg.b, n, f)
            except charring.SupportCapExceeded as exc:
                notes.append(f"exact skipped: {exc}")
            timings["exact"] += time.perf_counter() - t0
        if "quad" in cfg.paths:
            t0 = time.perf_counter()
            grid = None
            if cfg.grid_sizes:
                bw = torusquad.required_bandwidth(rs, lam, cfg.a, cfg.b, n, f)
                grid = torusquad.TorusGrid(sizes=cfg.grid_sizes,
                                           bandwidth_bound=bw)
            try:
                if two_sided:
                    row.quad = torusquad.quad_K_N(rs, lam, cfg.a, cfg.b, n,
                                                  f=f, grid=grid)
                else:
                    row.quad = torusquad.quad_I_N(rs, lam, cfg.a, n, f=f,
                                                  grid=grid)
            except torusquad.GridError as exc:
                notes.append(f"quad skipped: {exc}")
            timings["quad"] += time.perf_counter() - t0
        if "asymptotic" in cfg.paths:
            t0 = time.perf_counter()
            try:
                if two_sided:
                    row.estimate = leading_term_K(rs, lam, cfg.a, cfg.b, n,
                                                  f=f)
                else:
                    row.estimate = leading_term_I(rs, lam, cfg.a, n, f=f)
            except HypothesisError as exc:
                notes.append(f"asymptotic skipped: {exc}")
            timings["asymptotic"] += time.perf_counter() - t0

        ref = row.exact if row.exact is not None else row.quad
        if ref is not None and row.estimate is not None:
            est_log = row.estimate.log_abs_value()
            if est_log == float("-inf"):
                if ref == 0:
                    notes.append("estimate and reference both zero")
                else:
                    notes.append("estimate zero but reference nonzero")
            elif ref == 0:
                row.ratio = 0.0
                row.abs_error = 1.0
            else:
                sign = (1.0 if (ref > 0) == (row.estimate.pi_sum.real > 0)
                        else -1.0)
                row.ratio = sign * math.exp(_log_abs(ref) - est_log)
                row.abs_error = abs(row.ratio - 1.0)
        row.notes = tuple(notes)
        rows.append(row)

    fitted = fit_error_exponent([r.n for r in rows],
                                [r.abs_error for r in rows])
    return ConvergenceReport(config=cfg.echo(), hypotheses=verdict,
                             rows=rows, fitted_exponent=fitted,
                             timings=timings)


def fit_error_exponent(ns, errors):
    """Least-squares slope of log|error| vs log N over the schedule tail.

    Only the upper half of the schedule enters the fit, and only rows with a
    defined nonzero error; returns None with fewer than two usable points.
    """
    cut = ns[len(ns) // 2] if ns else 0
    pts = [(math.log(n), math.log(e)) for n, e in zip(ns, errors)
           if n >= cut and e is not None and e > 0]
    if len(pts) < 2:
        return None
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def write_report(report, cfg, include_timings=False):
    """Render and optionally write the report; returns the rendered text."""
    text = report.render(fmt=cfg.fmt, include_timings=include_timings)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
