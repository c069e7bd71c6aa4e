"""Per-graph analysis records, the scan pipeline and the counterexample checklist."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import connectivity, constructions, factors, symmetry
from .codec import encode_graph6
from .generator import GenSpec, generate, generate_unit, units_for
from .graph import INFINITE, Graph, girth, is_bipartite, is_connected, is_regular

FIELDS = (
    "certificate",
    "n",
    "girth",
    "bipartite",
    "two_factor_count",
    "structure_set",
    "pseudo_2fi",
    "vacuous",
    "two_factor_hamiltonian",
    "essentially_4ec",
    "cyclic_ec",
    "aut_group_size",
    "vertex_transitive",
    "witnesses",
)
EXPENSIVE = ("cyclic_ec", "aut_group_size", "vertex_transitive")
BASIC = tuple(f for f in FIELDS if f not in EXPENSIVE and f != "witnesses")


def default_fields(n: int) -> tuple[str, ...]:
    if n <= 32:
        return tuple(f for f in FIELDS if f != "witnesses")
    return BASIC


@dataclass
class AnalysisReport:
    certificate: str
    n: int
    girth: object = None
    bipartite: Optional[bool] = None
    two_factor_count: Optional[int] = None
    structure_set: Optional[frozenset] = None
    pseudo_2fi: Optional[bool] = None
    vacuous: Optional[bool] = None
    two_factor_hamiltonian: Optional[bool] = None
    essentially_4ec: Optional[bool] = None
    cyclic_ec: object = None
    aut_group_size: Optional[int] = None
    vertex_transitive: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)

    def problems(self) -> list[str]:
        """Internal inconsistencies; empty for a sound record."""
        out = []
        if self.two_factor_hamiltonian and self.pseudo_2fi is False:
            out.append("2-factor hamiltonian but not pseudo 2-factor isomorphic")
        for s in self.structure_set or ():
            if sum(s) != self.n:
                out.append(f"structure {s} does not sum to n={self.n}")
            if self.bipartite and any(x % 2 for x in s):
                out.append(f"odd cycle length in bipartite graph: {s}")
        if self.two_factor_count == 0 and self.pseudo_2fi and not self.vacuous:
            out.append("no 2-factors but vacuous flag unset")
        return out


def _fmt(value) -> str:
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is INFINITE:
        return "infinite"
    if isinstance(value, frozenset):
        return ";".join("(" + ",".join(map(str, s)) + ")" for s in sorted(value)) or "none"
    if isinstance(value, dict):
        return ";".join(f"{k}:{v}" for k, v in value.items()) or "-"
    return str(value)


def header(fields: Sequence[str]) -> str:
    return "# " + "\t".join(fields)


def format_report(r: AnalysisReport, fields: Sequence[str]) -> str:
    return "\t".join(_fmt(getattr(r, f)) for f in fields)


def analyze(g: Graph, fields: Iterable[str] | None = None) -> AnalysisReport:
    want = set(default_fields(g.n) if fields is None else fields)
    unknown = want - set(FIELDS)
    if unknown:
        raise ValueError(f"unknown fields: {', '.join(sorted(unknown))}")
    r = AnalysisReport(symmetry.certificate(g), g.n)
    r.girth = girth(g)
    r.bipartite = is_bipartite(g)
    if want & {"two_factor_count", "structure_set", "pseudo_2fi", "vacuous", "two_factor_hamiltonian"}:
        all_f = list(factors.enumerate_two_factors_direct(g))
        r.two_factor_count = len(all_f)
        r.structure_set = frozenset(f.structure for f in all_f)
        parities = {len(f) % 2 for f in all_f}
        r.pseudo_2fi = len(parities) <= 1
        r.vacuous = not all_f
        r.two_factor_hamiltonian = all(len(f) == 1 for f in all_f)
        if "witnesses" in want:
            pv = factors.is_pseudo_2fi(g)
            if pv.witness:
                r.witnesses["pseudo"] = "|".join(map(str, pv.witness))
            hv = factors.is_2factor_hamiltonian(g)
            if hv.witness:
                r.witnesses["2fh"] = str(hv.witness[0])
    if "essentially_4ec" in want:
        v = connectivity.is_essentially_4_edge_connected(g)
        r.essentially_4ec = v.value
        if v.witness is not None and "witnesses" in want:
            r.witnesses["cut"] = str(v.witness)
    if "cyclic_ec" in want:
        r.cyclic_ec = connectivity.cyclic_edge_connectivity(g)
    if want & {"aut_group_size", "vertex_transitive"}:
        info = symmetry.automorphisms(g)
        r.aut_group_size = info.group_size
        r.vertex_transitive = len(info.vertex_orbits) <= 1
    return r


# scan ------------------------------------------------------------------


@dataclass
class OrderSummary:
    n: int
    graphs: int = 0
    pseudo_2fi: int = 0
    two_factor_hamiltonian: int = 0
    survivors: int = 0


@dataclass
class ScanResult:
    min_girth: int
    orders: list[OrderSummary]
    survivors: list[Graph]
    """Essentially 4-edge-connected pseudo 2-factor isomorphic graphs."""
    hamiltonian: list[Graph]
    """2-factor hamiltonian graphs (any connectivity)."""


def _classify(g: Graph) -> tuple[bool, bool, bool]:
    pseudo = factors.is_pseudo_2fi(g)
    if not pseudo:
        return False, False, False
    ham = bool(factors.is_2factor_hamiltonian(g))
    e4 = bool(connectivity.is_essentially_4_edge_connected(g))
    return True, ham, e4


def _order_graphs(spec: GenSpec, jobs: int) -> list[Graph]:
    if jobs <= 1:
        return list(generate(spec))
    from concurrent.futures import ProcessPoolExecutor

    units = units_for(spec, jobs)
    with ProcessPoolExecutor(jobs) as pool:
        parts = pool.map(_unit_list, units)
        return [g for part in parts for g in part]


def _unit_list(unit) -> list[Graph]:
    return list(generate_unit(unit))


def first_order(min_girth: int) -> int:
    return 6 if min_girth == 4 else 14


def scan(n_max: int, min_girth: int, jobs: int = 1, progress: Callable[[OrderSummary], None] | None = None) -> ScanResult:
    """Generate every order up to ``n_max`` and keep the essentially
    4-edge-connected pseudo 2-factor isomorphic graphs."""
    orders = []
    survivors = []
    ham = []
    for n in range(first_order(min_girth), n_max + 1, 2):
        summary = OrderSummary(n)
        graphs = sorted(_order_graphs(GenSpec(n, min_girth), jobs), key=encode_graph6)
        for g in graphs:
            summary.graphs += 1
            pseudo, is_ham, e4 = _classify(g)
            summary.pseudo_2fi += pseudo
            summary.two_factor_hamiltonian += is_ham
            if is_ham:
                ham.append(g)
            if pseudo and e4:
                summary.survivors += 1
                survivors.append(g)
        orders.append(summary)
        if progress is not None:
            progress(summary)
    return ScanResult(min_girth, orders, survivors, ham)


# counterexample checklist -------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    observed: str


COUNTEREXAMPLE_STRUCTURES = frozenset({(6, 6, 18), (6, 10, 14), (10, 10, 10), (30,)})


def verify_counterexample(g: Graph | None = None) -> list[Check]:
    """The published properties of the 30-vertex counterexample, in order."""
    if g is None:
        g = constructions.counterexample()
    cubic = is_regular(g, 3)

    def direct_count():
        return factors.count_two_factors(g, "direct")

    def matching_count():
        if not cubic:
            raise ValueError("not cubic")
        return factors.count_two_factors(g, "matching")

    steps: list[tuple[str, Callable[[], object], Callable[[object], bool]]] = [
        ("30 vertices", lambda: g.n, lambda v: v == 30),
        ("cubic", lambda: cubic, bool),
        ("bipartite", lambda: is_bipartite(g), bool),
        ("girth 6", lambda: girth(g), lambda v: v == 6),
        ("essentially 4-edge-connected",
         lambda: connectivity.is_essentially_4_edge_connected(g).value, bool),
        ("cyclic edge-connectivity 6", lambda: connectivity.cyclic_edge_connectivity(g), lambda v: v == 6),
        ("automorphism group size 144", lambda: symmetry.automorphisms(g).group_size, lambda v: v == 144),
        ("not vertex-transitive", lambda: symmetry.is_vertex_transitive(g), lambda v: v is False),
        ("312 2-factors (both enumerators)",
         lambda: (direct_count(), matching_count()), lambda v: v == (312, 312)),
        ("2-factor structures (6,6,18),(6,10,14),(10,10,10),(30)",
         lambda: factors.two_factor_structure_set(g), lambda v: v == COUNTEREXAMPLE_STRUCTURES),
        ("pseudo 2-factor isomorphic", lambda: factors.is_pseudo_2fi(g).value, bool),
        ("not 2-factor hamiltonian", lambda: factors.is_2factor_hamiltonian(g).value, lambda v: v is False),
        ("not a star product of K33, Heawood, Pappus",
         lambda: is_connected(g) and cubic and constructions.in_family(g, constructions.conjecture_basis("pseudo")),
         lambda v: v is False),
    ]
    out = []
    for name, compute, ok in steps:
        try:
            value = compute()
            out.append(Check(name, bool(ok(value)), _fmt(value)))
        except Exception as exc:  # a malformed graph must not abort the checklist
            out.append(Check(name, False, f"error: {exc}"))
    return out


# cross-check ----------------------------------------------------------------


@dataclass
class CrossCheck:
    agreed: int = 0
    compared: int = 0
    skipped: list[int] = field(default_factory=list)
    first_disagreement: Optional[tuple[int, int, int]] = None
    """``(index, direct count, matching count)`` of the first mismatch."""


def crosscheck(graphs: Iterable[Graph]) -> CrossCheck:
    res = CrossCheck()
    for i, g in enumerate(graphs):
        if not is_regular(g, 3):
            res.skipped.append(i)
            continue
        res.compared += 1
        a = set(factors.enumerate_two_factors_direct(g))
        b = set(factors.enumerate_two_factors_via_matchings(g))
        if a == b:
            res.agreed += 1
        elif res.first_disagreement is None:
            res.first_disagreement = (i, len(a), len(b))
    return res


def iter_reports(graphs: Iterable[Graph], fields: Sequence[str] | None) -> Iterator[AnalysisReport]:
    for g in graphs:
        yield analyze(g, fields)
