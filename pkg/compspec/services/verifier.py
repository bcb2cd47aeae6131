"""
Brute-force theorem checks over the connected graphs with given connectivity.

A class scan walks the edge-mask range in shards. Each shard batches the
complement adjacency matrices through ``numpy.linalg.eigvalsh`` and folds
the measured eigenvalue into a :class:`ScanFold`; shard folds merge by
minimum. Shards run in a ``multiprocessing.Pool`` when ``jobs > 1``.
"""

import logging
import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Literal

import numpy as np

from compspec.config import settings
from compspec.errors import DisconnectedGraphError, ParameterError
from compspec.schemas.graph import Graph, edge_pairs
from compspec.schemas.params import BBParams, BParams, ClassFilter, DiameterRule
from compspec.schemas.report import (
    EXTREMAL_INTERPRETATION,
    ExtremalReport,
    Lemma32Check,
    Lemma32Report,
    PerturbationReport,
    SignPartition,
    Verdict,
)
from compspec.schemas.spectrum import TOLERANCE, AuditRecord
from compspec.services.constructions import (
    build_B,
    build_BB,
    build_calB,
    embed_B,
    validate_membership,
)
from compspec.services.enumeration import (
    canonical_form,
    check_enumeration_size,
    diameter_matches,
    enumerate_class,
    is_isomorphic,
    iter_class_masks,
    shard_ranges,
)
from compspec.services.graphcore import (
    all_minimum_cuts,
    complement,
    components,
    cut_profile,
    graph6_encode,
    is_connected,
    path_graph,
)
from compspec.services.quotient import (
    f_poly,
    g_poly,
    h_B,
    h_BB,
    quartic_extreme_roots,
    sweep_lemma_3_3,
    sweep_lemma_4_2,
    theta,
)
from compspec.services.spectra import (
    batch_extreme_eigenvalues,
    complement_rayleigh_gap,
    eigen_symmetric,
    least_eigenvalue,
    least_eigenvector,
    perron_vector,
    spectral_radius,
    transmission_bound_audit,
)

logger = logging.getLogger(__name__)

Measure = Literal["lambda_1", "lambda_n"]

# Per-pair tolerance of the perturbation check
PERTURBATION_TOLERANCE = 1e-12


# --- scan fold -------------------------------------------------------------


@dataclass
class ScanFold:
    """
    Shard-local scan result.

    ``witnesses`` holds every (value, mask) within the tolerance of
    ``min_value``; ``runner_up`` is the smallest value further away.
    """

    count: int = 0
    min_value: float = math.inf
    witnesses: list[tuple[float, int]] = field(default_factory=list)
    runner_up: float = math.inf

    @classmethod
    def from_values(cls, values: np.ndarray, masks: list[int]) -> "ScanFold":
        if len(masks) == 0:
            return cls()
        low = float(values.min())
        close = values <= low + TOLERANCE
        far = values[~close]
        return cls(
            count=len(masks),
            min_value=low,
            witnesses=[(float(values[i]), masks[i]) for i in np.flatnonzero(close)],
            runner_up=float(far.min()) if far.size else math.inf,
        )

    def merge(self, other: "ScanFold") -> "ScanFold":
        """Associative and commutative combination of two folds."""
        low = min(self.min_value, other.min_value)
        kept, dropped = [], []
        for value, mask in self.witnesses + other.witnesses:
            (kept if value <= low + TOLERANCE else dropped).append((value, mask))
        runner = min([self.runner_up, other.runner_up] + [value for value, _ in dropped])
        return ScanFold(
            count=self.count + other.count,
            min_value=low,
            witnesses=sorted(kept, key=lambda item: item[1]),
            runner_up=runner,
        )


@dataclass(frozen=True)
class ScanJob:
    """One shard of a class scan; picklable for the worker pool."""

    n: int
    kappa: int
    diameter_rule: DiameterRule
    measure: Measure
    lo: int
    hi: int
    batch_size: int
    track_unrestricted: bool = False


def _complement_stack(n: int, rows: list[tuple[int, ...]]) -> np.ndarray:
    full = (1 << n) - 1
    comp = np.array(
        [[full & ~row & ~(1 << v) for v, row in enumerate(adj)] for adj in rows],
        dtype=np.int64,
    )
    shifts = np.arange(n, dtype=np.int64)
    return ((comp[:, :, None] >> shifts) & 1).astype(float)


def _measure(stack: np.ndarray, measure: Measure) -> np.ndarray:
    top, bottom = batch_extreme_eigenvalues(stack)
    return top if measure == "lambda_1" else bottom


def scan_shard(job: ScanJob) -> tuple[ScanFold, ScanFold | None]:
    """
    Fold one shard.

    Returns:
        Tuple of (fold over the filtered class, fold over the whole
        connectivity class or None unless ``track_unrestricted``)
    """
    logger.debug("shard [%d, %d) started", job.lo, job.hi)
    rule: DiameterRule = "any" if job.track_unrestricted else job.diameter_rule
    restricted, unrestricted = ScanFold(), ScanFold()
    pending: list[tuple[int, tuple[int, ...], bool]] = []

    def flush() -> None:
        nonlocal restricted, unrestricted
        if not pending:
            return
        values = _measure(_complement_stack(job.n, [adj for _, adj, _ in pending]), job.measure)
        masks = [mask for mask, _, _ in pending]
        inside = np.array([flag for _, _, flag in pending], dtype=bool)
        restricted = restricted.merge(
            ScanFold.from_values(values[inside], [m for m, f in zip(masks, inside) if f])
        )
        if job.track_unrestricted:
            unrestricted = unrestricted.merge(ScanFold.from_values(values, masks))
        pending.clear()

    for mask, adj in iter_class_masks(job.n, job.kappa, rule, job.lo, job.hi):
        flag = diameter_matches(adj, job.n, job.diameter_rule) if job.track_unrestricted else True
        pending.append((mask, adj, flag))
        if len(pending) >= job.batch_size:
            flush()
    flush()
    logger.debug("shard [%d, %d) finished: %d graphs", job.lo, job.hi, restricted.count)
    return restricted, unrestricted if job.track_unrestricted else None


def scan_class(
    class_filter: ClassFilter,
    measure: Measure,
    *,
    jobs: int = 1,
    shards: int | None = None,
    allow_large: bool = False,
    track_unrestricted: bool = False,
) -> tuple[ScanFold, ScanFold | None, int]:
    """
    Minimum of the complement eigenvalue ``measure`` over the class.

    Returns:
        Tuple of (class fold, unrestricted fold or None, masks visited)
    """
    n = class_filter.n
    check_enumeration_size(n, allow_large=allow_large)
    shard_count = shards if shards is not None else max(1, jobs * 4 if jobs > 1 else 1)
    ranges = shard_ranges(n, shard_count)
    work = [
        ScanJob(
            n=n,
            kappa=class_filter.kappa,
            diameter_rule=class_filter.diameter_rule,
            measure=measure,
            lo=lo,
            hi=hi,
            batch_size=settings.batch_size,
            track_unrestricted=track_unrestricted,
        )
        for lo, hi in ranges
    ]
    if jobs > 1 and len(work) > 1:
        with Pool(jobs) as pool:
            results = pool.map(scan_shard, work)
    else:
        results = [scan_shard(job) for job in work]

    folded, whole = ScanFold(), ScanFold()
    for restricted, unrestricted in results:
        folded = folded.merge(restricted)
        if unrestricted is not None:
            whole = whole.merge(unrestricted)
    return folded, (whole if track_unrestricted else None), ranges[-1][1] - ranges[0][0]


def _witness_graphs(n: int, fold: ScanFold) -> list[Graph]:
    """One labeled minimizer per isomorphism class, lowest mask first."""
    seen: set[bytes] = set()
    graphs = []
    for _, mask in sorted(fold.witnesses, key=lambda item: item[1]):
        g = Graph.from_edge_mask(n, mask)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            graphs.append(g)
    return graphs


def _g6(g: Graph) -> str:
    return graph6_encode(g).decode("ascii")


def _extremal_verdict(
    fold: ScanFold, predicted_value: float | None, witnesses: list[Graph], predicted: Graph | None
) -> Verdict:
    if fold.count == 0:
        return "vacuous"
    if predicted_value is None or predicted is None:
        return "unpredicted"
    if abs(fold.min_value - predicted_value) > TOLERANCE:
        return "refuted"
    if all(is_isomorphic(w, predicted) for w in witnesses):
        return "confirmed"
    return "tie-within-tolerance"


# --- theorem checks --------------------------------------------------------


def verify_theorem_3_1(
    n: int, kappa: int, *, jobs: int = 1, shards: int | None = None, allow_large: bool = False
) -> ExtremalReport:
    """
    lambda_1(G^c) >= sqrt(n - kappa - 1) over diameter-2 graphs with connectivity kappa.

    Confirmed when no member lies below the bound and some member attains it;
    refuted otherwise, with ``attained`` telling the two failures apart.

    Raises:
        ParameterError: unless 1 <= kappa <= n - 2
    """
    if not 1 <= kappa <= n - 2:
        raise ParameterError("1 <= kappa <= n-2 required for diameter-2 classes")
    class_filter = ClassFilter.build(n, kappa, "exactly-2")
    fold, _, work = scan_class(
        class_filter, "lambda_1", jobs=jobs, shards=shards, allow_large=allow_large
    )
    bound = math.sqrt(n - kappa - 1)
    predicted = build_calB(BParams.for_calB(1, n - kappa - 1, kappa))
    witnesses = _witness_graphs(n, fold)
    notes = ["bound check: confirmed means no member lies below the bound and it is attained"]

    if fold.count == 0:
        verdict: Verdict = "vacuous"
        attained = None
    else:
        attained = abs(fold.min_value - bound) <= TOLERANCE
        if fold.min_value < bound - TOLERANCE:
            verdict = "refuted"
        elif attained:
            verdict = "confirmed"
        else:
            verdict = "refuted"
            notes.append("bound holds but is not attained in the class")
        if attained and not any(is_isomorphic(w, predicted) for w in witnesses):
            notes.append("bound attained, but not by calB(1, n-kappa-1, kappa)")

    report = ExtremalReport(
        theorem="3.1",
        n=n,
        kappa=kappa,
        diameter_rule="exactly-2",
        measure="lambda_1",
        class_size=fold.count,
        min_value=None if fold.count == 0 else fold.min_value,
        runner_up=None if math.isinf(fold.runner_up) else fold.runner_up,
        witnesses=[_g6(w) for w in witnesses],
        predicted_value=bound,
        predicted_graph=_g6(predicted),
        predicted_in_class=validate_membership(predicted, n, kappa),
        attained=attained,
        verdict=verdict,
        work_units=work,
        audit_notes=notes,
    )
    logger.info("theorem 3.1 n=%d kappa=%d: %s", n, kappa, verdict)
    return report


def verify_theorem_3_4(
    n: int, kappa: int, *, jobs: int = 1, shards: int | None = None, allow_large: bool = False
) -> ExtremalReport:
    """Minimum of lambda_1(G^c) over diameter >= 3 graphs, against B(1, n-kappa-1, kappa)."""
    class_filter = ClassFilter.build(n, kappa, "at-least-3")
    notes = [EXTREMAL_INTERPRETATION]
    predicted = predicted_value = quartic = None
    try:
        params = BParams.for_B(1, n - kappa - 1, kappa)
    except ParameterError as exc:
        notes.append(f"B(1, n-kappa-1, kappa) undefined: {exc}")
    else:
        predicted = build_B(params)
        q = f_poly(params.s, params.t, params.kappa)
        predicted_value, _ = quartic_extreme_roots(q)
        quartic = q.coefficients()

    fold, whole, work = scan_class(
        class_filter,
        "lambda_1",
        jobs=jobs,
        shards=shards,
        allow_large=allow_large,
        track_unrestricted=True,
    )
    witnesses = _witness_graphs(n, fold)
    verdict = _extremal_verdict(fold, predicted_value, witnesses, predicted)
    below = whole is not None and whole.count and fold.count
    if below and whole.min_value < fold.min_value - TOLERANCE:
        notes.append("a diameter-2 member lies below the diameter >= 3 minimum")

    report = ExtremalReport(
        theorem="3.4",
        n=n,
        kappa=kappa,
        diameter_rule="at-least-3",
        measure="lambda_1",
        class_size=fold.count,
        min_value=None if fold.count == 0 else fold.min_value,
        runner_up=None if math.isinf(fold.runner_up) else fold.runner_up,
        witnesses=[_g6(w) for w in witnesses],
        predicted_value=predicted_value,
        predicted_graph=None if predicted is None else _g6(predicted),
        predicted_quartic=quartic,
        predicted_in_class=None if predicted is None else validate_membership(predicted, n, kappa),
        unrestricted_min_value=None if whole is None or whole.count == 0 else whole.min_value,
        verdict=verdict,
        work_units=work,
        audit_notes=notes,
    )
    logger.info("theorem 3.4 n=%d kappa=%d: %s", n, kappa, verdict)
    return report


def verify_theorem_4_3(
    n: int, kappa: int, *, jobs: int = 1, shards: int | None = None, allow_large: bool = False
) -> ExtremalReport:
    """
    Minimum of lambda_n(G^c) over the class, against BB(ceil(n/2), floor(n/2); kappa).

    The verdict is taken against the join variant; the matching variant is
    measured alongside and ``resolved_variant`` names whichever one is
    isomorphic to a minimizer.
    """
    class_filter = ClassFilter.build(n, kappa)
    notes = [EXTREMAL_INTERPRETATION]
    variants: dict[str, Graph] = {}
    variant_values: dict[str, float] = {}
    predicted_value = quartic = None
    try:
        join = BBParams.balanced(n, kappa, "join")
    except ParameterError as exc:
        notes.append(f"BB(ceil(n/2), floor(n/2); kappa) undefined: {exc}")
    else:
        q = g_poly(join.n1, join.n2, join.kappa)
        _, predicted_value = quartic_extreme_roots(q)
        quartic = q.coefficients()
        for variant in ("join", "matching"):
            g = build_BB(BBParams.balanced(n, kappa, variant))
            variants[variant] = g
            variant_values[variant] = least_eigenvalue(complement(g))
            if not validate_membership(g, n, kappa):
                notes.append(f"{variant} variant is not in the scanned class")

    fold, _, work = scan_class(
        class_filter, "lambda_n", jobs=jobs, shards=shards, allow_large=allow_large
    )
    witnesses = _witness_graphs(n, fold)
    predicted = variants.get("join")
    verdict = _extremal_verdict(fold, predicted_value, witnesses, predicted)

    resolved = None
    for variant, g in variants.items():
        if any(is_isomorphic(w, g) for w in witnesses):
            resolved = variant
            break
    if verdict == "refuted":
        notes.append(
            f"join-variant prediction {predicted_value!r} differs from the class minimum; "
            f"minimizer variant: {resolved or 'neither'}"
        )

    report = ExtremalReport(
        theorem="4.3",
        n=n,
        kappa=kappa,
        diameter_rule="any",
        measure="lambda_n",
        class_size=fold.count,
        min_value=None if fold.count == 0 else fold.min_value,
        runner_up=None if math.isinf(fold.runner_up) else fold.runner_up,
        witnesses=[_g6(w) for w in witnesses],
        predicted_value=predicted_value,
        predicted_graph=None if predicted is None else _g6(predicted),
        predicted_quartic=quartic,
        predicted_in_class=None if predicted is None else validate_membership(predicted, n, kappa),
        variant_values=variant_values,
        resolved_variant=resolved,
        verdict=verdict,
        work_units=work,
        audit_notes=notes,
    )
    logger.info("theorem 4.3 n=%d kappa=%d: %s", n, kappa, verdict)
    return report


# --- lemma checks ----------------------------------------------------------


def lemma_3_2_instance(g: Graph) -> tuple[list[Lemma32Check], bool]:
    """
    Compare lambda_1(G^c) with lambda_1(B^c) for every minimum cut of ``g`` with a free vertex.

    Returns:
        Tuple of (one check per such cut, whether any minimum cut had a free vertex)
    """
    lam = spectral_radius(complement(g))
    label = _g6(g)
    checks = []
    for cut in all_minimum_cuts(g):
        profile = cut_profile(g, cut)
        if profile.v is None:
            continue
        h = embed_B(g, profile)
        h_comp = complement(h)
        bound = spectral_radius(h_comp)
        x = perron_vector(h_comp)
        gap = complement_rayleigh_gap(g, h, x)
        checks.append(
            Lemma32Check(
                graph=label,
                cut=profile.cut,
                s=profile.s,
                t=profile.t,
                v=profile.v,
                lambda_graph=lam,
                lambda_bound=bound,
                rayleigh_gap=gap,
                holds=lam >= bound - TOLERANCE,
            )
        )
    return checks, bool(checks)


def verify_lemma_3_2(n: int, kappa: int, *, allow_large: bool = False) -> Lemma32Report:
    """Run :func:`lemma_3_2_instance` over every diameter >= 3 graph with connectivity kappa."""
    class_filter = ClassFilter.build(n, kappa, "at-least-3")
    report = Lemma32Report(n=n, kappa=kappa, work_units=1 << (n * (n - 1) // 2))
    for g in enumerate_class(class_filter, allow_large=allow_large):
        report.graphs_checked += 1
        checks, has_v = lemma_3_2_instance(g)
        if not has_v:
            report.graphs_without_v += 1
            if len(report.examples_without_v) < 5:
                report.examples_without_v.append(_g6(g))
        for check in checks:
            report.cuts_checked += 1
            margin = check.lambda_graph - check.lambda_bound
            if report.min_margin is None or margin < report.min_margin:
                report.min_margin = margin
            if check.rayleigh_gap < -TOLERANCE:
                report.rayleigh_violations += 1
            if not check.holds:
                report.violations += 1
                if len(report.violation_examples) < 5:
                    report.violation_examples.append(check)
    if report.graphs_checked == 0:
        report.verdict = "vacuous"
    elif report.violations:
        report.verdict = "refuted"
    logger.info(
        "lemma 3.2 n=%d kappa=%d: %d graphs, %d cuts, %d violations",
        n,
        kappa,
        report.graphs_checked,
        report.cuts_checked,
        report.violations,
    )
    return report


def sign_partition(
    g: Graph, x: np.ndarray | list[float], cut: tuple[int, ...] = ()
) -> SignPartition:
    """Split ``g``'s vertices by the sign of ``x``, per component of ``g`` minus ``cut``."""
    vec = np.asarray(x, dtype=float)
    plus = tuple(v for v in range(g.n) if vec[v] >= 0)
    minus = tuple(v for v in range(g.n) if vec[v] < 0)
    parts = components(g, cut) if cut else []
    return SignPartition(
        plus=plus,
        minus=minus,
        cut_plus=tuple(v for v in cut if vec[v] >= 0),
        cut_minus=tuple(v for v in cut if vec[v] < 0),
        components_plus=tuple(tuple(v for v in part if vec[v] >= 0) for part in parts),
        components_minus=tuple(tuple(v for v in part if vec[v] < 0) for part in parts),
    )


def perturbation_check(
    g: Graph, kind: Literal["add-within-sign", "delete-cross-sign"]
) -> PerturbationReport:
    """
    Modify ``g`` along the sign pattern of the least eigenvector x of A(g^c).

    ``add-within-sign`` adds every non-edge uv with x_u x_v >= 0;
    ``delete-cross-sign`` removes every edge uv with x_u x_v <= 0 whose removal
    keeps ``g`` connected. Each modification must not raise lambda_n of the
    complement, and must lower it by at least 2|x_u x_v| when that is nonzero.

    Raises:
        DisconnectedGraphError: if ``g`` is not connected
    """
    if not is_connected(g):
        raise DisconnectedGraphError("perturbation check needs a connected graph")
    g_comp = complement(g)
    base = least_eigenvalue(g_comp)
    x = least_eigenvector(g_comp)
    report = PerturbationReport(graph=_g6(g), kind=kind, lambda_n=base)
    for u, v in edge_pairs(g.n):
        product = x[u] * x[v]
        if kind == "add-within-sign":
            if g.has_edge(u, v) or product < -PERTURBATION_TOLERANCE:
                continue
            modified = g.add_edge(u, v)
        else:
            if not g.has_edge(u, v) or product > PERTURBATION_TOLERANCE:
                continue
            modified = g.remove_edge(u, v)
            if not is_connected(modified):
                report.skipped_disconnecting += 1
                continue
        value = least_eigenvalue(complement(modified))
        increase = value - base
        strict = abs(product) > PERTURBATION_TOLERANCE
        report.checked += 1
        report.strict_checked += int(strict)
        if report.max_increase is None or increase > report.max_increase:
            report.max_increase = increase
        # x^T A' x = lambda_n - 2|x_u x_v| for the toggled pair
        ceiling = base - 2 * abs(product) if strict else base
        if value > ceiling + PERTURBATION_TOLERANCE:
            report.violations += 1
    return report


def random_connected_graph(n: int, rng: np.random.Generator, density: float = 0.5) -> Graph:
    """Erdos-Renyi draw, redrawn until connected."""
    pairs = edge_pairs(n)
    while True:
        keep = rng.random(len(pairs)) < density
        g = Graph.from_edges(n, (pair for pair, k in zip(pairs, keep) if k))
        if is_connected(g):
            return g


def perturbation_sweep(
    count: int = 200, sizes: tuple[int, ...] = (6, 7, 8), seed: int = 0
) -> list[PerturbationReport]:
    """Both perturbation kinds on ``count`` random connected graphs."""
    rng = np.random.default_rng(seed)
    reports = []
    for index in range(count):
        g = random_connected_graph(sizes[index % len(sizes)], rng)
        reports.append(perturbation_check(g, "add-within-sign"))
        reports.append(perturbation_check(g, "delete-cross-sign"))
    violations = sum(r.violations for r in reports)
    logger.info("perturbation sweep: %d graphs, %d violations", count, violations)
    return reports


# --- audits ----------------------------------------------------------------


def audit_suite(max_n: int = 20) -> list[AuditRecord]:
    """
    Evaluate the audited proof inequalities; records findings, never raises on failure.

    Covers the transmission bound lambda_1 >= 2 sigma / n on P_3 and on the
    connected complements of the constructions, positivity of h for both
    families, lambda_1(B^c) > theta and lambda_1(BB^c) > kappa.
    """
    records = [transmission_bound_audit(path_graph(3), "P3")]

    for row in sweep_lemma_3_3(max_n):
        s, t, kappa = row.s, row.t, row.kappa
        if t - 1 < kappa:
            continue
        label = f"B^c({s},{t},{kappa})"
        b_comp = complement(build_B(BParams.for_B(s, t, kappa)))
        records.append(
            AuditRecord.evaluate("h-positive-B", label, h_B(s, t, kappa), 0.0, strict=True)
        )
        th = theta(s, t, kappa)
        if not math.isnan(th):
            top = eigen_symmetric(b_comp, with_vectors=False).spectral_radius
            records.append(
                AuditRecord.evaluate("lambda1-above-theta", label, top, th, strict=True)
            )
        if is_connected(b_comp):
            records.append(transmission_bound_audit(b_comp, label))

    for row in sweep_lemma_4_2(max_n):
        n1, n2, kappa = row.n1, row.n2, row.kappa
        label = f"BB^c({n1},{n2};{kappa})"
        bb_comp = complement(build_BB(BBParams.build(n1, n2, kappa)))
        records.append(
            AuditRecord.evaluate("h-positive-BB", label, h_BB(n1, n2, kappa), 0.0, strict=True)
        )
        records.append(
            AuditRecord.evaluate(
                "lambda1-above-kappa", label, spectral_radius(bb_comp), float(kappa), strict=True
            )
        )
        if is_connected(bb_comp):
            records.append(transmission_bound_audit(bb_comp, label))

    failing = sum(not r.holds for r in records)
    logger.info("audit suite max_n=%d: %d records, %d failing", max_n, len(records), failing)
    return records
