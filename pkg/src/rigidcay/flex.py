"""One-parameter planar flexes built from NAC-colorings.

A vertex with red component ``r`` and blue component ``b`` is placed at

    R(angle) @ red_anchor[r] + blue_anchor[b]

Red edges stay inside one red component, so their vectors are differences of
blue anchors and never change; blue edges rotate rigidly with ``angle``. For a
good coloring the (r, b) keys are distinct, so generic anchors keep vertices
apart at all but finitely many angles.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.spatial import cKDTree

from .errors import InvalidColoring, InvalidParameter
from .graphs import SimpleGraph
from .nac import EdgeColoring, is_good_nac

RED_SKEW = 0.137
BLUE_SKEW = 0.149
PERTURBATION = 1e-3
MAX_RETRIES = 3
# two vertices closer than this count as coincident
COINCIDENCE_EPS = 1e-6
PAIR_SAMPLE = 200_000


def rotation(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True)
class ParamRealization:
    graph: SimpleGraph
    coloring: EdgeColoring
    red_anchor: np.ndarray
    blue_anchor: np.ndarray
    red_of: np.ndarray
    blue_of: np.ndarray
    is_good: bool

    @property
    def vertex_key(self) -> list[tuple[int, int]]:
        return list(zip(self.red_of.tolist(), self.blue_of.tolist()))


@dataclass(frozen=True)
class RealizationFrame:
    angle: float
    positions: np.ndarray
    edge_lengths: np.ndarray


def default_anchors(red_count: int, blue_count: int) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(red_count, dtype=float)
    j = np.arange(blue_count, dtype=float)
    red = np.column_stack([i, RED_SKEW * i**2])
    blue = np.column_stack([BLUE_SKEW * j**2, j])
    return red, blue


def build_flex(graph: SimpleGraph, coloring: EdgeColoring) -> ParamRealization:
    verdict = is_good_nac(coloring)
    if not verdict.is_nac:
        reason = "it is not surjective" if not verdict.is_surjective else f"edge {verdict.offending_edge} closes an almost cycle"
        raise InvalidColoring(f"cannot build a flex: coloring is not NAC ({reason})")
    red = coloring.red_components()
    blue = coloring.blue_components()
    red_anchor, blue_anchor = default_anchors(red.component_count, blue.component_count)
    return ParamRealization(graph, coloring, red_anchor, blue_anchor,
                            np.asarray(red.component_of), np.asarray(blue.component_of), verdict.is_good)


def perturb(realization: ParamRealization, rng: np.random.Generator,
            magnitude: float = PERTURBATION) -> ParamRealization:
    return replace(
        realization,
        red_anchor=realization.red_anchor + rng.uniform(-magnitude, magnitude, realization.red_anchor.shape),
        blue_anchor=realization.blue_anchor + rng.uniform(-magnitude, magnitude, realization.blue_anchor.shape),
    )


def positions_at(realization: ParamRealization, angle: float) -> np.ndarray:
    rotated = realization.red_anchor @ rotation(angle).T
    return rotated[realization.red_of] + realization.blue_anchor[realization.blue_of]


def evaluate(realization: ParamRealization, angle: float) -> RealizationFrame:
    if not np.isfinite(angle):
        raise InvalidParameter(f"angle must be finite, got {angle}")
    pos = positions_at(realization, angle)
    edges = np.asarray(realization.graph.edges, dtype=np.int64).reshape(-1, 2)
    lengths = np.linalg.norm(pos[edges[:, 0]] - pos[edges[:, 1]], axis=1)
    return RealizationFrame(float(angle), pos, lengths)


def export_frames(realization: ParamRealization, angle_grid) -> list[RealizationFrame]:
    angles = list(angle_grid)
    if not angles:
        raise InvalidParameter("angle grid is empty")
    return [evaluate(realization, a) for a in angles]


@dataclass
class FlexReport:
    passed: bool
    sample_count: int
    tolerance: float
    max_length_drift: float
    lengths_preserved: bool
    max_distance_variation: float
    noncongruent: bool
    distance_change_pi_3: float
    injective: bool | None
    min_separation: float | None
    retries: int = 0
    failure_angle: float | None = None
    realization: ParamRealization | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        out = {k: v for k, v in vars(self).items() if k != "realization"}
        return {k: (float(v) if isinstance(v, np.floating) else v) for k, v in out.items()}


def _nonadjacent_pairs(graph: SimpleGraph, rng: np.random.Generator) -> np.ndarray:
    n = graph.vertex_count
    if n * (n - 1) // 2 <= PAIR_SAMPLE:
        iu, ju = np.triu_indices(n, 1)
    else:
        iu = rng.integers(0, n, PAIR_SAMPLE)
        ju = rng.integers(0, n, PAIR_SAMPLE)
        keep = iu < ju
        iu, ju = iu[keep], ju[keep]
    adjacent = np.array([graph.has_edge(int(a), int(b)) for a, b in zip(iu, ju)], dtype=bool)
    return np.column_stack([iu[~adjacent], ju[~adjacent]])


def _min_separation(pos: np.ndarray) -> float:
    if len(pos) < 2:
        return float("inf")
    dist, _ = cKDTree(pos).query(pos, k=2)
    return float(dist[:, 1].min())


def _check(realization: ParamRealization, angles: np.ndarray, tolerance: float, pairs: np.ndarray):
    base = evaluate(realization, 0.0)
    drift = 0.0
    seps = []
    dmin = dmax = None
    for a in angles:
        frame = evaluate(realization, a)
        drift = max(drift, float(np.abs(frame.edge_lengths - base.edge_lengths).max(initial=0.0)))
        if realization.is_good:
            seps.append(_min_separation(frame.positions))
        if len(pairs):
            d = np.linalg.norm(frame.positions[pairs[:, 0]] - frame.positions[pairs[:, 1]], axis=1)
            dmin = d if dmin is None else np.minimum(dmin, d)
            dmax = d if dmax is None else np.maximum(dmax, d)
    variation = float((dmax - dmin).max()) if dmin is not None else 0.0
    change = 0.0
    if len(pairs):
        p0 = base.positions
        p3 = evaluate(realization, np.pi / 3).positions
        d0 = np.linalg.norm(p0[pairs[:, 0]] - p0[pairs[:, 1]], axis=1)
        d3 = np.linalg.norm(p3[pairs[:, 0]] - p3[pairs[:, 1]], axis=1)
        change = float(np.abs(d3 - d0).max())
    return drift, variation, change, seps


def verify_flex(realization: ParamRealization, graph: SimpleGraph | None = None, sample_count: int = 100,
                tolerance: float = 1e-9, seed: int = 0, max_retries: int = MAX_RETRIES) -> FlexReport:
    """Sample angles and check length preservation, non-congruence and injectivity.

    Injectivity is only required for good colorings; on a coincidence the
    anchors are perturbed (seeded) and the whole check is repeated, at most
    ``max_retries`` times.
    """
    if sample_count < 2:
        raise InvalidParameter("sample_count must be at least 2")
    if graph is not None and not graph.same_edges(realization.graph):
        raise InvalidParameter("realization was built for a different graph")
    rng = np.random.default_rng(seed)
    angles = rng.uniform(0.0, 2 * np.pi, sample_count)
    pairs = _nonadjacent_pairs(realization.graph, rng)

    retries = 0
    while True:
        drift, variation, change, seps = _check(realization, angles, tolerance, pairs)
        injective = None
        min_sep = None
        failure = None
        if realization.is_good:
            min_sep = min(seps)
            injective = min_sep > COINCIDENCE_EPS
            if not injective:
                failure = float(angles[int(np.argmin(seps))])
                if retries < max_retries:
                    retries += 1
                    realization = perturb(realization, rng)
                    continue
        break

    lengths_ok = drift < tolerance
    noncongruent = variation > 10 * tolerance
    return FlexReport(
        passed=lengths_ok and noncongruent and injective is not False,
        sample_count=sample_count,
        tolerance=tolerance,
        max_length_drift=drift,
        lengths_preserved=lengths_ok,
        max_distance_variation=variation,
        noncongruent=noncongruent,
        distance_change_pi_3=change,
        injective=injective,
        min_separation=min_sep,
        retries=retries,
        failure_angle=failure,
        realization=realization,
    )
