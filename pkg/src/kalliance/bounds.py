"""Lower and upper bounds on the defensive k-alliance number.

Each bound function raises :class:`BoundDomainError` when its hypothesis
(range of k, connectivity, ...) fails; :func:`report` turns those into
absent fields with a reason string.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field, fields
from typing import Mapping

from .alliance import max_neighbor_degree_star
from .graph_core import Graph, degree_sequence, is_connected
from .spectral import DEFAULT_TOL, algebraic_connectivity

SNAP = 1e-6


class BoundDomainError(ValueError):
    """The bound's hypothesis does not hold for this graph / k."""


class BoundsInconsistencyError(RuntimeError):
    """A bound disagrees with an exact value: an implementation bug."""


class ExistenceAssumedWarning(UserWarning):
    pass


def ceil_snap(x: float) -> int:
    r = round(x)
    if abs(x - r) <= SNAP:
        return int(r)
    return math.ceil(x)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_k(g: Graph, k: int) -> None:
    if g.n == 0:
        raise BoundDomainError("empty graph")
    if not -g.min_degree <= k <= g.max_degree:
        raise BoundDomainError(f"k={k} outside -min_degree..max_degree = {-g.min_degree}..{g.max_degree}")


def assumes_existence(g: Graph, k: int) -> bool:
    """True when bounds at this k are only meaningful if a k-alliance exists."""
    return k > g.min_degree


def _degree_bounds(g: Graph, k: int) -> tuple[int, int]:
    _check_k(g, k)
    dn = g.min_degree
    return max(1, _ceil_div(dn + k + 2, 2)), g.n - (dn - k) // 2


def degree_bounds(g: Graph, k: int) -> tuple[int, int]:
    """``(ceil((d_n + k + 2)/2), n - floor((d_n - k)/2))``."""
    if assumes_existence(g, k):
        warnings.warn(f"k={k} exceeds the minimum degree; bounds assume a "
                      f"defensive {k}-alliance exists", ExistenceAssumedWarning, stacklevel=2)
    return _degree_bounds(g, k)


def shift_lower(g: Graph, k: int, r: int, a_k_minus_2r: int) -> int:
    """Lower bound ``a_{k-2r} + r`` on ``a_k``."""
    _check_k(g, k)
    if r < 0 or 2 * r > k + g.min_degree:
        raise BoundDomainError(f"r={r} outside 0..(k + min_degree)/2")
    return a_k_minus_2r + r


@dataclass(frozen=True)
class Inequality:
    """A chain ``terms[0] <= terms[1] <= ...`` with instantiated values."""

    name: str
    terms: tuple[tuple[str, int], ...]

    @property
    def holds(self) -> bool:
        vals = [v for _, v in self.terms]
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def __str__(self) -> str:
        chain = " <= ".join(f"{label}={val}" for label, val in self.terms)
        return f"{self.name}: {chain} [{'pass' if self.holds else 'FAIL'}]"


def _a(j: int) -> str:
    return f"a_{{{j}}}"


def corollary_chain(g: Graph, k: int, profile: Mapping[int, int | None]) -> list[Inequality]:
    """Instantiate the consequences of the shift bound at ``k``.

    ``profile`` maps k to the alliance number (None where no alliance
    exists; k below -min_degree may be omitted, the value there is 1).
    Emits ``a_{k-2} + 1 <= a_k`` when ``2 - d_n <= k <= d_1`` and, for
    ``0 <= k <= d_n``, the two-sided chain through ``a_0`` (k even) or
    ``a_{-1}`` (k odd). Chains touching a missing value are skipped.
    """
    _check_k(g, k)
    dn = g.min_degree

    def val(j: int) -> int | None:
        return 1 if j < -dn else profile[j]

    out = []
    if 2 - dn <= k and val(k) is not None:
        out.append(Inequality("step", ((f"{_a(k - 2)}+1", val(k - 2) + 1), (_a(k), val(k)))))
    if 0 <= k <= dn:
        if k % 2 == 0:
            h = k // 2
            terms = ((f"{_a(-k)}+{h}", val(-k) + h), (_a(0), val(0)), (f"{_a(k)}-{h}", val(k) - h))
            out.append(Inequality("even chain", terms))
        else:
            lo, hi = (k - 1) // 2, (k + 1) // 2
            terms = ((f"{_a(-k)}+{lo}", val(-k) + lo), (_a(-1), val(-1)), (f"{_a(k)}-{hi}", val(k) - hi))
            out.append(Inequality("odd chain", terms))
    return out


def upper_half(g: Graph, k: int) -> int:
    """``ceil((n + k + 1)/2)`` for ``-d_n <= k <= 0``, tightened by the classical
    ``a_{-1} <= ceil(n/2)`` and ``a_0 <= floor(n/2) + 1``."""
    if g.n == 0 or not -g.min_degree <= k <= 0:
        raise BoundDomainError(f"k={k} outside -min_degree..0")
    n = g.n
    bound = _ceil_div(n + k + 1, 2)
    if k == -1:
        bound = min(bound, _ceil_div(n, 2))
    elif k == 0:
        bound = min(bound, n // 2 + 1)
    return bound


def _spectral_check(g: Graph, k: int, mu: float) -> None:
    _check_k(g, k)
    if not is_connected(g):
        raise BoundDomainError("graph is disconnected")
    if mu <= 0:
        raise BoundDomainError(f"algebraic connectivity must be positive, got {mu}")


def spectral_lower_fiedler(g: Graph, k: int, mu: float) -> int:
    """``ceil(n (mu + k + 1) / (n + mu))``, clamped to at least 1."""
    _spectral_check(g, k, mu)
    return max(1, ceil_snap(g.n * (mu + k + 1) / (g.n + mu)))


def spectral_lower_maxdeg(g: Graph, k: int, mu: float) -> int:
    """``ceil(n (mu - floor((d_1 - k)/2)) / mu)``, clamped to at least 1."""
    _spectral_check(g, k, mu)
    return max(1, ceil_snap(g.n * (mu - (g.max_degree - k) // 2) / mu))


@dataclass(frozen=True)
class LineGraphBounds:
    upper_maxdeg: int | None
    upper_star: int | None
    lower_degrees: int | None
    reasons: dict[str, str]


def line_graph_bounds(base: Graph, k: int) -> LineGraphBounds:
    """Bounds on ``a_k(L(base))`` from the base degree sequence."""
    if base.m == 0:
        raise BoundDomainError("base graph has no edges")
    seq = degree_sequence(base)
    d1, d2 = seq[0], seq[1]
    dn, dn1 = seq[-1], seq[-2]
    dstar, _ = max_neighbor_degree_star(base)
    reasons = {}

    upper_maxdeg = upper_star = lower = None
    if 2 * (1 - d1) <= k <= 0:
        upper_maxdeg = d1 + _ceil_div(k, 2)
    else:
        reasons["upper_line_maxdeg"] = f"k={k} outside {2 * (1 - d1)}..0"
    if 2 - dstar - d1 <= k <= d1 - dstar:
        upper_star = _ceil_div(d1 + dstar + k, 2)
    else:
        reasons["upper_line_star"] = f"k={k} outside {2 - dstar - d1}..{d1 - dstar} (delta*={dstar})"
    if 2 - d1 - d2 <= k <= d1 + d2 - 2:
        lower = max(1, _ceil_div(dn + dn1 + k, 2))
    else:
        reasons["lower_line_degrees"] = f"k={k} outside {2 - d1 - d2}..{d1 + d2 - 2}"
    return LineGraphBounds(upper_maxdeg, upper_star, lower, reasons)


# ---------------------------------------------------------------------------
# consolidated report

LOWER_FIELDS = ("lower_degree", "lower_spectral_fiedler", "lower_spectral_maxdeg")
UPPER_FIELDS = ("upper_degree", "upper_half")
LINE_LOWER_FIELDS = ("lower_line_degrees",)
LINE_UPPER_FIELDS = ("upper_line_maxdeg", "upper_line_star")

FORMULAS = {
    "lower_degree": "ceil((d_n+k+2)/2)",
    "upper_degree": "n-floor((d_n-k)/2)",
    "upper_half": "ceil((n+k+1)/2), k<=0",
    "lower_spectral_fiedler": "ceil(n(mu+k+1)/(n+mu))",
    "lower_spectral_maxdeg": "ceil(n(mu-floor((d_1-k)/2))/mu)",
    "upper_line_maxdeg": "a_k(L) <= d_1+ceil(k/2)",
    "upper_line_star": "a_k(L) <= ceil((d_1+d*+k)/2)",
    "lower_line_degrees": "a_k(L) >= ceil((d_n+d_{n-1}+k)/2)",
    "exact": "a_k(G) by exact search",
    "exact_line": "a_k(L(G)) by exact search",
}


@dataclass
class BoundsReport:
    k: int
    lower_degree: int | None = None
    upper_degree: int | None = None
    upper_half: int | None = None
    lower_spectral_fiedler: int | None = None
    lower_spectral_maxdeg: int | None = None
    upper_line_maxdeg: int | None = None
    upper_line_star: int | None = None
    lower_line_degrees: int | None = None
    exact: int | None = None
    exact_line: int | None = None
    assumes_existence: bool = False
    mu: float | None = None
    reasons: dict[str, str] = field(default_factory=dict)

    def value_fields(self) -> list[str]:
        skip = {"k", "assumes_existence", "mu", "reasons"}
        return [f.name for f in fields(self) if f.name not in skip]

    def check_sandwich(self) -> None:
        for exact_name, lows, ups in (("exact", LOWER_FIELDS, UPPER_FIELDS),
                                      ("exact_line", LINE_LOWER_FIELDS, LINE_UPPER_FIELDS)):
            exact = getattr(self, exact_name)
            if exact is None:
                continue
            for name in lows:
                v = getattr(self, name)
                if v is not None and v > exact:
                    raise BoundsInconsistencyError(f"k={self.k}: {name}={v} > {exact_name}={exact}")
            for name in ups:
                v = getattr(self, name)
                if v is not None and v < exact:
                    raise BoundsInconsistencyError(f"k={self.k}: {name}={v} < {exact_name}={exact}")

    def to_dict(self) -> dict:
        out = {"k": self.k}
        out.update({name: getattr(self, name) for name in self.value_fields()})
        out["assumes_existence"] = self.assumes_existence
        out["mu"] = self.mu
        out["reasons"] = dict(self.reasons)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def human(self) -> str:
        lines = [f"k = {self.k}" + ("  (bounds assume an alliance exists)" if self.assumes_existence else "")]
        for name in self.value_fields():
            val = getattr(self, name)
            shown = "-" if val is None else str(val)
            note = FORMULAS[name] if val is not None else self.reasons.get(name, "")
            lines.append(f"  {name:<24} {shown:>4}   {note}")
        return "\n".join(lines)


def report(g: Graph, k: int, with_exact: bool = False, line_exact: bool = False,
           tolerance: float = DEFAULT_TOL, limit: int | None = None) -> BoundsReport:
    """Every applicable bound at ``k``; exact values on request.

    Graph bounds are sandwiched against ``exact`` (a_k(g)) and line-graph
    bounds against ``exact_line`` (a_k(L(g))); a violation raises
    :class:`BoundsInconsistencyError`.
    """
    from . import solver  # solver depends on this module for its start bound

    rep = BoundsReport(k)
    reasons = rep.reasons

    try:
        rep.lower_degree, rep.upper_degree = _degree_bounds(g, k)
        rep.assumes_existence = assumes_existence(g, k)
    except BoundDomainError as exc:
        reasons["lower_degree"] = reasons["upper_degree"] = str(exc)

    try:
        rep.upper_half = upper_half(g, k)
    except BoundDomainError as exc:
        reasons["upper_half"] = str(exc)

    if g.n < 2:
        reasons["lower_spectral_fiedler"] = reasons["lower_spectral_maxdeg"] = "needs n >= 2"
    elif not is_connected(g):
        reasons["lower_spectral_fiedler"] = reasons["lower_spectral_maxdeg"] = "graph is disconnected"
    else:
        rep.mu = algebraic_connectivity(g, tolerance).mu
        for name, fn in (("lower_spectral_fiedler", spectral_lower_fiedler),
                         ("lower_spectral_maxdeg", spectral_lower_maxdeg)):
            try:
                setattr(rep, name, fn(g, k, rep.mu))
            except BoundDomainError as exc:
                reasons[name] = str(exc)

    try:
        lb = line_graph_bounds(g, k)
        rep.upper_line_maxdeg, rep.upper_line_star, rep.lower_line_degrees = (
            lb.upper_maxdeg, lb.upper_star, lb.lower_degrees)
        reasons.update(lb.reasons)
    except BoundDomainError as exc:
        for name in LINE_LOWER_FIELDS + LINE_UPPER_FIELDS:
            reasons[name] = str(exc)

    kw = {} if limit is None else {"limit": limit}
    if with_exact:
        try:
            res = solver.min_alliance(g, k, **kw)
            rep.exact = res.value
            if res.value is None:
                reasons["exact"] = "no defensive k-alliance exists"
        except (ValueError, solver.SearchLimitError) as exc:
            reasons["exact"] = str(exc)
    else:
        reasons["exact"] = "not requested"
    if line_exact and g.m > 0:
        from .graph_core import line_graph
        try:
            res = solver.min_alliance(line_graph(g).line, k, **kw)
            rep.exact_line = res.value
            if res.value is None:
                reasons["exact_line"] = "no defensive k-alliance exists in the line graph"
        except (ValueError, solver.SearchLimitError) as exc:
            reasons["exact_line"] = str(exc)
    else:
        reasons["exact_line"] = "not requested" if g.m else "graph has no edges"

    rep.check_sandwich()
    return rep
