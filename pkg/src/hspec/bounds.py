"""Evaluate the clique/spectral/Lagrangian inequalities on a hypergraph.

Every check returns a :class:`BoundRecord` oriented so that ``slack >= 0``
means the inequality holds. Records never feed back into the computed
quantities; they only report.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import factorial

from .clique import clique_number, find_nonadjacent_twins, is_clique, ms_hypothesis_holds
from .comb import binom
from .errors import NotConverged
from .hypercore import Hypergraph, connected_components, edge_types, is_complete
from .lagrange import maximize_L, predicted_L
from .spectral import PowerIterationConfig, principal_eigenvector_sum, spectral_radius

EQUALITY_TOL = 1e-8
SCHEMA = "hspec/1"


@dataclass
class BoundRecord:
    name: str
    applicable: bool
    lhs: float | None = None
    rhs: float | None = None
    satisfied: bool | None = None
    slack: float | None = None
    equality: bool | None = None
    note: str = ""

    @classmethod
    def compare(cls, name, lhs, rhs, note=""):
        lhs, rhs = float(lhs), float(rhs)
        slack = rhs - lhs
        return cls(
            name,
            True,
            lhs,
            rhs,
            satisfied=slack >= -EQUALITY_TOL,
            slack=slack,
            equality=abs(slack) < EQUALITY_TOL,
            note=note,
        )

    @classmethod
    def inapplicable(cls, name, reason):
        return cls(name, False, note=reason)

    @property
    def violated(self) -> bool:
        return self.applicable and not self.satisfied


def _has_m_m1_types(H: Hypergraph) -> bool:
    m = H.rank
    return m >= 3 and set(edge_types(H)) == {m, m - 1}


def check_clique_witness(H: Hypergraph, omega: int, witness) -> BoundRecord:
    ok = len(witness) == omega and (not H.edges or is_clique(H, witness))
    note = f"witness {list(witness)}"
    if not H.edges:
        note += "; edgeless, omega = 1 by convention"
    return BoundRecord.compare("clique_number", omega, omega if ok else -1, note)


def check_lower_bound_rho(H: Hypergraph, rho: float, omega: int) -> BoundRecord:
    """rho(H) >= sum_{s in R} C(omega - 1, s - 1), equality iff H is complete."""
    name = "lower_bound_rho"
    if not H.edges:
        return BoundRecord.inapplicable(name, "no edges: spectral radius undefined")
    if omega < 1:
        return BoundRecord.inapplicable(name, "no nonempty clique")
    bound = sum(binom(omega - 1, s - 1) for s in edge_types(H))
    rec = BoundRecord.compare(name, bound, rho)
    complete = is_complete(H)
    if rec.equality and complete:
        rec.note = "equality: H is a complete R-graph"
    elif rec.equality:
        connected = len(connected_components(H)) == 1
        rec.note = "equality on a non-complete hypergraph" + (
            "; H is disconnected" if not connected else "; UNEXPECTED for connected H"
        )
    elif complete:
        rec.note = "UNEXPECTED: complete R-graph without equality"
    return rec


def check_omega_upper(H: Hypergraph, rho: float, omega: int) -> BoundRecord:
    """omega <= m - 2 + ((m-1)! rho)^(1/(m-1)) for {m, m-1}-graphs."""
    name = "omega_upper"
    if not _has_m_m1_types(H):
        return BoundRecord.inapplicable(
            name, f"needs edge types exactly {{m, m-1}} with m >= 3; R = {list(edge_types(H))}"
        )
    m = H.rank
    rhs = m - 2 + (factorial(m - 1) * rho) ** (1.0 / (m - 1))
    return BoundRecord.compare(name, omega, rhs)


def _ms_inapplicable_reason(H: Hypergraph) -> str | None:
    if H.rank < 3:
        return f"needs m >= 3; m = {H.rank}"
    if not ms_hypothesis_holds(H):
        return (
            "outside the hypothesis (edge types exactly {m, m-1} and complete or "
            "nonadjacent twins); measured value reported only"
        )
    return None


def _hypothesis_note(H: Hypergraph) -> str:
    if is_complete(H):
        return "hypothesis: complete {m, m-1}-graph"
    return f"hypothesis: nonadjacent twins {find_nonadjacent_twins(H)}"


def rho_upper_U_value(m: int, U: float, omega: int) -> float:
    return m * (U / omega) ** m * binom(omega + 1, m)


def rho_upper_n_value(m: int, n: int, omega: int) -> float:
    return m * n ** (m - 1) / omega**m * binom(omega + 1, m)


def check_rho_upper_U(H: Hypergraph, rho: float, U: float, omega: int) -> BoundRecord:
    """rho(H) <= m (U/omega)^m C(omega + 1, m)."""
    name = "rho_upper_U"
    reason = _ms_inapplicable_reason(H)
    if reason:
        return BoundRecord.inapplicable(name, reason)
    return BoundRecord.compare(name, rho, rho_upper_U_value(H.rank, U, omega), _hypothesis_note(H))


def check_rho_upper_n(H: Hypergraph, rho: float, omega: int, U: float | None = None) -> BoundRecord:
    """rho(H) <= m n^(m-1) / omega^m C(omega + 1, m); also checks that this
    right side dominates the U-based one, since U^m <= n^(m-1)."""
    name = "rho_upper_n"
    reason = _ms_inapplicable_reason(H)
    if reason:
        return BoundRecord.inapplicable(name, reason)
    m = H.rank
    rhs = rho_upper_n_value(m, H.n, omega)
    rec = BoundRecord.compare(name, rho, rhs, _hypothesis_note(H))
    if U is not None:
        rhs_U = rho_upper_U_value(m, U, omega)
        if rhs < rhs_U - 1e-10:
            rec.satisfied = False
            rec.note += f"; n-based bound {rhs:.12g} below U-based bound {rhs_U:.12g}"
    return rec


def check_wilf_2graph(H: Hypergraph, rho: float, U: float, omega: int) -> BoundRecord:
    """omega >= M^2 / (M^2 - rho) for connected 2-graphs, M = U with the
    eigenvector scaled to unit 2-norm (the m-norm when m = 2)."""
    name = "wilf_2graph"
    if edge_types(H) != (2,):
        return BoundRecord.inapplicable(name, "needs a 2-graph")
    if len(connected_components(H)) != 1:
        return BoundRecord.inapplicable(name, "needs a connected 2-graph")
    M2 = U * U
    if M2 <= rho:
        return BoundRecord.inapplicable(name, "M^2 <= rho, bound undefined")
    return BoundRecord.compare(
        name, M2 / (M2 - rho), omega, "M taken from the unit 2-norm principal eigenvector"
    )


def check_ms_value(H: Hypergraph, measured_L: float, omega: int) -> BoundRecord:
    """Measured L(H) against (1/omega)^m C(omega + 1, m).

    The measured value is attained at a simplex point, so it is a lower bound
    on L(H): a negative slack certifies L(H) exceeds the formula.
    """
    name = "ms_value"
    reason = _ms_inapplicable_reason(H)
    if reason:
        return BoundRecord.inapplicable(name, reason)
    rec = BoundRecord.compare(name, measured_L, predicted_L(omega, H.rank), _hypothesis_note(H))
    if rec.satisfied and not rec.equality:
        rec.note += "; optimizer fell short of the formula"
    return rec


@dataclass(frozen=True)
class ReportConfig:
    power: PowerIterationConfig = field(default_factory=PowerIterationConfig)
    starts: int = 32
    seed: int = 0
    tol: float = 1e-10


@dataclass
class BoundReport:
    records: list[BoundRecord]
    summary: dict
    complete: bool = True
    notes: list[str] = field(default_factory=list)

    def record(self, name: str) -> BoundRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def violations(self) -> list[BoundRecord]:
        return [r for r in self.records if r.violated]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "complete": self.complete,
            "summary": _rounded(self.summary),
            "records": [_rounded(asdict(r)) for r in self.records],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        header = ("name", "applicable", "lhs", "rhs", "slack", "satisfied", "equality", "note")
        rows = [header]
        for r in self.records:
            rows.append(
                (
                    r.name,
                    "yes" if r.applicable else "no",
                    fmt(r.lhs),
                    fmt(r.rhs),
                    fmt(r.slack),
                    _flag(r.satisfied),
                    _flag(r.equality),
                    r.note,
                )
            )
        widths = [max(len(row[k]) for row in rows) for k in range(len(header) - 1)]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row[:-1], widths)) + "  " + row[-1]
            for row in rows
        ]
        lines = [ln.rstrip() for ln in lines]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _flag(b):
    return "-" if b is None else ("yes" if b else "no")


def round12(x: float) -> float:
    return float(f"{x:.12g}")


def _rounded(obj):
    if isinstance(obj, float):
        return round12(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    return obj


def full_report(H: Hypergraph, cfg: ReportConfig | None = None) -> BoundReport:
    """Run clique search, spectral radius and L maximization once, then every check.

    If an iterative step fails to converge, :class:`NotConverged` is raised
    with the partial report (``complete=False``) in ``exc.diagnostics["report"]``.
    """
    cfg = cfg or ReportConfig()
    cq = clique_number(H)
    omega = cq.omega
    summary = {
        "n": H.n,
        "m": H.rank,
        "R": list(edge_types(H)),
        "edges_by_type": {str(s): len(H.edges_of_size(s)) for s in edge_types(H)},
        "components": [list(c) for c in connected_components(H)],
        "omega": omega,
        "clique_witness": list(cq.witness),
        "ms_hypothesis": ms_hypothesis_holds(H),
    }
    records = [check_clique_witness(H, omega, cq.witness)]
    report = BoundReport(records, summary)
    if not H.edges:
        report.notes.append("edgeless hypergraph: spectral radius and L(H) skipped")
        return report
    if omega < 1:
        report.notes.append("no nonempty clique exists; clique-based bounds skipped")

    rho = U = None
    if H.rank < 2:
        report.notes.append("rank 1: spectral radius not computed")
    else:
        try:
            sr = spectral_radius(H, cfg.power)
        except NotConverged as exc:
            report.complete = False
            report.notes.append(f"spectral radius: {exc}")
            raise NotConverged(str(exc), report=report, **exc.diagnostics) from exc
        rho, U = sr.rho, principal_eigenvector_sum(sr)
        summary.update(
            rho=rho,
            U=U,
            eigen_residual=sr.residual,
            power_iterations=sr.iterations,
            component_rho=[[list(c), r] for c, r in sr.component_rhos],
        )
        if not sr.positive_support:
            report.notes.append("disconnected: rho is the maximum over components")

    try:
        lag = maximize_L(H, starts=cfg.starts, seed=cfg.seed, tol=cfg.tol)
    except NotConverged as exc:
        report.complete = False
        report.notes.append(f"L(H) maximization: {exc}")
        raise NotConverged(str(exc), report=report, **exc.diagnostics) from exc
    summary["L_measured"] = lag.value
    summary["L_maximizer"] = [float(v) for v in lag.maximizer]
    summary["L_kkt_residual"] = lag.kkt_residual
    hypothesis = H.rank >= 3 and omega >= 1 and summary["ms_hypothesis"]
    summary["L_predicted"] = predicted_L(omega, H.rank) if hypothesis else None

    if omega >= 1 and rho is not None:
        records += [
            check_lower_bound_rho(H, rho, omega),
            check_omega_upper(H, rho, omega),
            check_rho_upper_U(H, rho, U, omega),
            check_rho_upper_n(H, rho, omega, U),
            check_wilf_2graph(H, rho, U, omega),
        ]
    if omega >= 1:
        records.append(check_ms_value(H, lag.value, omega))
    return report
