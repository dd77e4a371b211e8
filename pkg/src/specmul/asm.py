"""Defect measurement: how far products stray from the product of spectra.

For unitary matrices the *asm defect* of an ordered pair (A, B) is

    max over gamma in sigma(AB) of  min over (alpha, beta) in
    sigma(A) x sigma(B) of  |arg(alpha beta / gamma)| / (2 pi),

computed exactly (rational arithmetic over a common denominator) whenever
all three spectra are exact, and in floats otherwise.  Spectra enter as
sets: multiplicities never change a defect.

For general matrices the *sub defect* replaces the argument distance by the
chord |gamma - alpha beta| scaled by the spectral radii, with zero
eigenvalues left out on both sides (the convention is recorded in reports).

``measure_asm`` takes the maximum over all ordered pairs of a complete
closure; ``measure_asm_sampled`` and ``measure_sub`` stream sampled pairs
from a seeded generator.  All of them produce an ``AsmReport`` that
serializes to JSON and round-trips.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .circle import UnitPoint
from .errors import (
    DimensionMismatchError,
    IncompleteClosureError,
    ZeroSpectralRadiusError,
)
from .groups import GroupClosure
from .linalg import (
    Spectrum,
    UMatrix,
    general_spectrum,
    matmul,
    matrix_to_json,
)

__all__ = [
    "Histogram",
    "PairDefect",
    "AsmReport",
    "pair_defect",
    "pair_sub_defect",
    "measure_asm",
    "measure_asm_sampled",
    "measure_sub",
    "conversion_check",
]

DEFAULT_BINS = 20
SUB_ZERO_TOL = 1e-9

# Pool startup dwarfs the work below these sizes, so small jobs stay
# in-process regardless of the requested worker count.
PARALLEL_MIN_TASKS = 256
PARALLEL_MIN_PAIRS = 2048

# Sampled runs are split into a fixed number of logical chunks, each with its
# own spawned seed stream, so the drawn pairs do not depend on how many
# workers execute the chunks.
SAMPLE_CHUNKS = 64


# ---------------------------------------------------------------------------
# defect cores

def _defect_exact(sa, sb, sab, scale):
    """Exact defect over integer angle numerators mod ``scale``.

    Returns (defect numerator, gamma, alpha, beta) with the witnesses chosen
    deterministically: first maximizing gamma in sorted order, then the
    nearest product with the smaller representative.
    """
    prod_src = {}
    for x in sa:
        for y in sb:
            v = (x + y) % scale
            if v not in prod_src:
                prod_src[v] = (x, y)
    prods = sorted(prod_src)
    np_ = len(prods)
    best = -1
    best_w = None
    for g in sab:
        i = bisect_left(prods, g)
        d = None
        w = None
        for cand in (prods[i % np_], prods[(i - 1) % np_]):
            t = (g - cand) % scale
            t = min(t, scale - t)
            if d is None or t < d:
                d, w = t, cand
        if d > best:
            best = d
            best_w = (g, w)
    g, v = best_w
    x, y = prod_src[v]
    return best, g, x, y


def _defect_float(sa: np.ndarray, sb: np.ndarray, sab: np.ndarray):
    """Float defect over angle arrays in turns."""
    prods = (sa[:, None] + sb[None, :]).reshape(-1) % 1.0
    diff = np.abs(sab[:, None] - prods[None, :])
    diff = np.minimum(diff, 1.0 - diff)
    per_g = diff.min(axis=1)
    gi = int(per_g.argmax())
    pj = int(diff[gi].argmin())
    ai, bi = divmod(pj, len(sb))
    return float(per_g[gi]), gi, ai, bi


def _spectrum_defect(sa: Spectrum, sb: Spectrum, sab: Spectrum):
    """Dispatch to the exact or float core; returns defect + witness points."""
    if sa.exact and sb.exact and sab.exact:
        scale = 1
        for s in (sa, sb, sab):
            scale = scale * s.common_denominator() // math.gcd(
                scale, s.common_denominator())
        d, g, x, y = _defect_exact(
            sa.int_angles(scale), sb.int_angles(scale), sab.int_angles(scale), scale)
        fr = Fraction(d, scale)
        return (float(fr), fr,
                UnitPoint.exact(g, scale), UnitPoint.exact(x, scale),
                UnitPoint.exact(y, scale))
    aa, ab, aab = sa.angles(), sb.angles(), sab.angles()
    d, gi, ai, bi = _defect_float(aa, ab, aab)
    return d, None, sab.points[gi], sa.points[ai], sb.points[bi]


# ---------------------------------------------------------------------------
# result containers

@dataclass(frozen=True)
class Histogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"edges": list(self.edges), "counts": list(self.counts)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Histogram":
        return cls(tuple(float(x) for x in d["edges"]),
                   tuple(int(x) for x in d["counts"]))


def _make_histogram(values: np.ndarray, bins: int, vmax: Optional[float]) -> Histogram:
    if vmax is None:
        vmax = float(values.max()) if values.size and float(values.max()) > 0 else 1.0
    counts, edges = np.histogram(values, bins=bins, range=(0.0, vmax))
    return Histogram(tuple(float(e) for e in edges), tuple(int(c) for c in counts))


def _point_json(p) -> dict:
    if isinstance(p, UnitPoint):
        if p.is_exact:
            return {"num": p.angle.num, "den": p.angle.den}
        return {"angle": p.angle, "err": p.err}
    z = complex(p)
    return {"re": z.real, "im": z.imag}


def _point_from_json(d: dict):
    if "num" in d:
        return UnitPoint.exact(int(d["num"]), int(d["den"]))
    if "angle" in d:
        return UnitPoint.approx(float(d["angle"]), float(d.get("err", 0.0)))
    return complex(float(d["re"]), float(d["im"]))


def _frac_str(f: Optional[Fraction]) -> Optional[str]:
    return None if f is None else f"{f.numerator}/{f.denominator}"


def _frac_parse(s: Optional[str]) -> Optional[Fraction]:
    return None if s is None else Fraction(s)


@dataclass
class PairDefect:
    """One measured pair with enough context to replot it."""

    kind: str
    defect: float
    defect_exact: Optional[Fraction]
    pair: tuple
    witness_gamma: object
    witness_alpha: object
    witness_beta: object
    spectrum_a: tuple
    spectrum_b: tuple
    spectrum_ab: tuple
    matrix_a: Optional[dict] = None
    matrix_b: Optional[dict] = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "defect": self.defect,
            "defect_exact": _frac_str(self.defect_exact),
            "pair": list(self.pair),
            "witness": {
                "gamma": _point_json(self.witness_gamma),
                "alpha": _point_json(self.witness_alpha),
                "beta": _point_json(self.witness_beta),
            },
            "spectra": {
                "a": [_point_json(p) for p in self.spectrum_a],
                "b": [_point_json(p) for p in self.spectrum_b],
                "ab": [_point_json(p) for p in self.spectrum_ab],
            },
            "matrix_a": self.matrix_a,
            "matrix_b": self.matrix_b,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "PairDefect":
        w = d["witness"]
        sp = d["spectra"]
        return cls(
            kind=d["kind"],
            defect=float(d["defect"]),
            defect_exact=_frac_parse(d["defect_exact"]),
            pair=tuple(d["pair"]),
            witness_gamma=_point_from_json(w["gamma"]),
            witness_alpha=_point_from_json(w["alpha"]),
            witness_beta=_point_from_json(w["beta"]),
            spectrum_a=tuple(_point_from_json(p) for p in sp["a"]),
            spectrum_b=tuple(_point_from_json(p) for p in sp["b"]),
            spectrum_ab=tuple(_point_from_json(p) for p in sp["ab"]),
            matrix_a=d.get("matrix_a"),
            matrix_b=d.get("matrix_b"),
        )


@dataclass
class AsmReport:
    kind: str
    mode: str
    bound: str
    epsilon: float
    epsilon_exact: Optional[Fraction]
    exact: bool
    pair_total: int
    sample_count: Optional[int]
    seed: Optional[int]
    group_order: Optional[int]
    worst: Optional[PairDefect]
    histogram: Histogram
    gamma_convention: Optional[str] = None
    pair_rows: Optional[list] = None

    def to_json_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "mode": self.mode,
            "bound": self.bound,
            "epsilon": self.epsilon,
            "epsilon_exact": _frac_str(self.epsilon_exact),
            "exact": self.exact,
            "pair_total": self.pair_total,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "group_order": self.group_order,
            "worst": None if self.worst is None else self.worst.to_json_dict(),
            "histogram": self.histogram.to_json_dict(),
            "gamma_convention": self.gamma_convention,
        }
        if self.pair_rows is not None:
            d["pair_rows"] = [list(r) for r in self.pair_rows]
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "AsmReport":
        return cls(
            kind=d["kind"],
            mode=d["mode"],
            bound=d["bound"],
            epsilon=float(d["epsilon"]),
            epsilon_exact=_frac_parse(d["epsilon_exact"]),
            exact=bool(d["exact"]),
            pair_total=int(d["pair_total"]),
            sample_count=d["sample_count"],
            seed=d["seed"],
            group_order=d["group_order"],
            worst=None if d["worst"] is None else PairDefect.from_json_dict(d["worst"]),
            histogram=Histogram.from_json_dict(d["histogram"]),
            gamma_convention=d.get("gamma_convention"),
            pair_rows=[tuple(r) for r in d["pair_rows"]] if "pair_rows" in d else None,
        )


# ---------------------------------------------------------------------------
# single pairs

def pair_defect(a: UMatrix, b: UMatrix, pair: tuple = ("explicit",),
                with_matrices: bool = True) -> PairDefect:
    """Asm defect of the ordered pair (a, b) with deterministic witnesses."""
    ab = matmul(a, b)
    sa, sb, sab = a.spectrum(), b.spectrum(), ab.spectrum()
    d, fr, g, al, be = _spectrum_defect(sa, sb, sab)
    return PairDefect(
        kind="asm",
        defect=d,
        defect_exact=fr,
        pair=pair,
        witness_gamma=g,
        witness_alpha=al,
        witness_beta=be,
        spectrum_a=sa.points,
        spectrum_b=sb.points,
        spectrum_ab=sab.points,
        matrix_a=matrix_to_json(a) if with_matrices else None,
        matrix_b=matrix_to_json(b) if with_matrices else None,
    )


def _nonzero_eigs(x, ztol: float):
    from .constructions import SrElement

    if isinstance(x, SrElement):
        return [x.nonzero_eigenvalue()], x.spectral_radius()
    eigs = general_spectrum(np.asarray(x, dtype=complex))
    rho = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    keep = [complex(z) for z in eigs if abs(z) > ztol]
    return keep, rho


def _sub_dense(x):
    from .constructions import SrElement

    return x.matrix() if isinstance(x, SrElement) else np.asarray(x, dtype=complex)


def pair_sub_defect(a, b, pair: tuple = ("explicit",),
                    ztol: float = SUB_ZERO_TOL) -> PairDefect:
    """Chord defect |gamma - alpha beta| / (rho(a) rho(b)) over nonzero
    eigenvalues; closed form when both elements are rank-one samples."""
    from .constructions import SrElement, sr_pair_gamma

    alphas, ra = _nonzero_eigs(a, ztol)
    betas, rb = _nonzero_eigs(b, ztol)
    if ra == 0.0 or rb == 0.0:
        raise ZeroSpectralRadiusError("spectral radius vanishes; defect undefined")
    if isinstance(a, SrElement) and isinstance(b, SrElement):
        gammas = [sr_pair_gamma(a, b)]
    else:
        gammas, _ = _nonzero_eigs(_sub_dense(a) @ _sub_dense(b), ztol)
    scale = ra * rb
    best = -1.0
    wit = None
    for g in gammas:
        d = None
        w = None
        for al in alphas:
            for be in betas:
                t = abs(g - al * be) / scale
                if d is None or t < d:
                    d, w = t, (al, be)
        if d is not None and d > best:
            best = d
            wit = (g, w[0], w[1])
    if wit is None:
        best, wit = 0.0, (0j, 0j, 0j)
    ma = matrix_to_json_like(a)
    mb = matrix_to_json_like(b)
    return PairDefect(
        kind="sub",
        defect=best,
        defect_exact=None,
        pair=pair,
        witness_gamma=wit[0],
        witness_alpha=wit[1],
        witness_beta=wit[2],
        spectrum_a=tuple(alphas),
        spectrum_b=tuple(betas),
        spectrum_ab=tuple(gammas),
        matrix_a=ma,
        matrix_b=mb,
    )


def matrix_to_json_like(x) -> dict:
    if isinstance(x, UMatrix):
        return matrix_to_json(x)
    a = _sub_dense(x)
    return {
        "variant": "dense",
        "dim": int(a.shape[0]),
        "entries": [[[z.real, z.imag] for z in row] for row in a],
        "unitary": False,
    }


# ---------------------------------------------------------------------------
# worker helpers (module level so process pools can pickle them)

def _map_chunks(fn, chunk_args: list, workers: int) -> list:
    if workers <= 1 or len(chunk_args) <= 1:
        return [fn(c) for c in chunk_args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunk_args))


def _exact_triples_chunk(args):
    triples, scale = args
    return [_defect_exact(sa, sb, sab, scale)[0] for sa, sb, sab in triples]


def _float_rows_chunk(args):
    angles, cay_rows, row_start = args
    n = len(angles)
    vals = np.empty(len(cay_rows) * n, dtype=float)
    for li, row in enumerate(cay_rows):
        sa = angles[row_start + li]
        for j in range(n):
            vals[li * n + j] = _defect_float(sa, angles[j], angles[row[j]])[0]
    return vals


def _sampled_asm_chunk(args):
    sampler, count, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    vals = np.empty(count, dtype=float)
    best = -1.0
    best_idx = -1
    best_pair = None
    all_exact = True
    for t in range(count):
        a = sampler(rng)
        b = sampler(rng)
        sa, sb, sab = a.spectrum(), b.spectrum(), matmul(a, b).spectrum()
        d, fr, *_ = _spectrum_defect(sa, sb, sab)
        if fr is None:
            all_exact = False
        vals[t] = d
        if d > best:
            best, best_idx, best_pair = d, t, (a, b)
    return vals, best, best_idx, best_pair, all_exact


def _sampled_sub_chunk(args):
    sampler, count, seed_seq, ztol = args
    rng = np.random.default_rng(seed_seq)
    vals = np.empty(count, dtype=float)
    best = -1.0
    best_idx = -1
    best_pair = None
    for t in range(count):
        a = sampler(rng)
        b = sampler(rng)
        d = pair_sub_defect(a, b, ztol=ztol).defect
        vals[t] = d
        if d > best:
            best, best_idx, best_pair = d, t, (a, b)
    return vals, best, best_idx, best_pair, False


def _chunk_sizes(total: int, parts: int) -> list[int]:
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


# ---------------------------------------------------------------------------
# measurements

def measure_asm(
    closure: GroupClosure,
    workers: int = 1,
    bins: int = DEFAULT_BINS,
    collect_pairs: bool = False,
) -> AsmReport:
    """Exhaustive maximum defect over all ordered pairs of a complete closure."""
    if not closure.complete:
        raise IncompleteClosureError(
            "closure is incomplete; exhaustive measurement would only be a "
            "lower bound — use the sampled mode instead")
    elements = closure.elements
    n = len(elements)
    spectra = [e.spectrum() for e in elements]
    cay = closure.cayley_table()

    if all(s.exact for s in spectra):
        scale = 1
        for s in spectra:
            c = s.common_denominator()
            scale = scale * c // math.gcd(scale, c)
        reps = [s.int_angles(scale) for s in spectra]
        rep_ids: dict = {}
        uniq_reps: list = []
        sid = np.empty(n, dtype=np.int64)
        for i, r in enumerate(reps):
            j = rep_ids.get(r)
            if j is None:
                j = len(uniq_reps)
                rep_ids[r] = j
                uniq_reps.append(r)
            sid[i] = j
        ns = len(uniq_reps)
        tri = (sid[:, None] * ns + sid[None, :]) * ns + sid[cay]
        uniq_tri, inv = np.unique(tri, return_inverse=True)
        decoded = []
        for t in uniq_tri:
            t = int(t)
            ia, rem = divmod(t, ns * ns)
            ib, iab = divmod(rem, ns)
            decoded.append((uniq_reps[ia], uniq_reps[ib], uniq_reps[iab]))
        eff = workers if len(decoded) >= PARALLEL_MIN_TASKS else 1
        sizes = _chunk_sizes(len(decoded), eff)
        chunks = []
        off = 0
        for s in sizes:
            chunks.append((decoded[off:off + s], scale))
            off += s
        tri_defects = np.array(
            [d for part in _map_chunks(_exact_triples_chunk, chunks, eff)
             for d in part],
            dtype=np.int64)
        per_pair = tri_defects[inv].reshape(n, n)
        flat = int(per_pair.argmax())
        i, j = divmod(flat, n)
        eps_exact = Fraction(int(per_pair[i, j]), scale)
        values = per_pair.astype(float) / scale
        worst = pair_defect(elements[i], elements[j], pair=("elements", i, j))
        exact = True
    else:
        angles = [s.angles() for s in spectra]
        eff = workers if n * n >= PARALLEL_MIN_PAIRS else 1
        sizes = _chunk_sizes(n, eff)
        chunks = []
        off = 0
        for s in sizes:
            chunks.append((angles, cay[off:off + s], off))
            off += s
        values = np.concatenate(_map_chunks(_float_rows_chunk, chunks, eff))
        flat = int(values.argmax())
        i, j = divmod(flat, n)
        eps_exact = None
        worst = pair_defect(elements[i], elements[j], pair=("elements", i, j))
        exact = False

    rows = None
    if collect_pairs:
        grid = values.reshape(n, n)
        rows = [(i, j, float(grid[i, j])) for i in range(n) for j in range(n)]
    return AsmReport(
        kind="asm",
        mode="exhaustive",
        bound="attained",
        epsilon=float(values.max()) if eps_exact is None else float(eps_exact),
        epsilon_exact=eps_exact,
        exact=exact,
        pair_total=n * n,
        sample_count=None,
        seed=None,
        group_order=n,
        worst=worst,
        histogram=_make_histogram(values, bins, 0.5),
        pair_rows=rows,
    )


def _merge_sampled(parts, offsets):
    values = np.concatenate([p[0] for p in parts])
    best = -1.0
    best_idx = -1
    best_pair = None
    all_exact = True
    for off, (vals, b, bi, bp, ex) in zip(offsets, parts):
        if not ex:
            all_exact = False
        if bp is not None and b > best:
            best, best_idx, best_pair = b, off + bi, bp
    return values, best_idx, best_pair, all_exact


def measure_asm_sampled(
    sampler: Callable,
    pair_count: int,
    seed: int,
    workers: int = 1,
    bins: int = DEFAULT_BINS,
    collect_pairs: bool = False,
) -> AsmReport:
    """Sampled lower bound on the defect: draws pair_count independent pairs
    from the seeded sampler.  With several workers the seed space is split
    deterministically, one spawned stream per worker."""
    if pair_count < 1:
        raise ValueError("need at least one pair")
    sizes = _chunk_sizes(pair_count, SAMPLE_CHUNKS)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    chunks = [(sampler, c, s) for c, s in zip(sizes, seeds)]
    eff = workers if pair_count >= PARALLEL_MIN_PAIRS else 1
    parts = _map_chunks(_sampled_asm_chunk, chunks, eff)
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    values, best_idx, best_pair, all_exact = _merge_sampled(parts, offsets)
    worst = pair_defect(best_pair[0], best_pair[1], pair=("sampled", int(best_idx)))
    eps_exact = worst.defect_exact if all_exact else None
    rows = [(int(t), -1, float(v)) for t, v in enumerate(values)] if collect_pairs else None
    return AsmReport(
        kind="asm",
        mode="sampled",
        bound="lower",
        epsilon=float(values.max()),
        epsilon_exact=eps_exact,
        exact=all_exact,
        pair_total=pair_count,
        sample_count=pair_count,
        seed=seed,
        group_order=None,
        worst=worst,
        histogram=_make_histogram(values, bins, 0.5),
        pair_rows=rows,
    )


def measure_sub(
    source,
    pair_count: Optional[int] = None,
    seed: Optional[int] = None,
    workers: int = 1,
    bins: int = DEFAULT_BINS,
    ztol: float = SUB_ZERO_TOL,
    collect_pairs: bool = False,
) -> AsmReport:
    """Sub defect over a finite element list (exhaustive ordered pairs) or a
    seeded sampler (pair_count pairs).  Zero eigenvalues are excluded; the
    report says so."""
    if callable(source):
        if pair_count is None or seed is None:
            raise ValueError("sampled mode needs pair_count and seed")
        sizes = _chunk_sizes(pair_count, SAMPLE_CHUNKS)
        seeds = np.random.SeedSequence(seed).spawn(len(sizes))
        chunks = [(source, c, s, ztol) for c, s in zip(sizes, seeds)]
        eff = workers if pair_count >= PARALLEL_MIN_PAIRS else 1
        parts = _map_chunks(_sampled_sub_chunk, chunks, eff)
        offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
        values, best_idx, best_pair, _ = _merge_sampled(parts, offsets)
        worst = pair_sub_defect(best_pair[0], best_pair[1],
                                pair=("sampled", int(best_idx)), ztol=ztol)
        rows = [(int(t), -1, float(v)) for t, v in enumerate(values)] if collect_pairs else None
        return AsmReport(
            kind="sub",
            mode="sampled",
            bound="lower",
            epsilon=float(values.max()),
            epsilon_exact=None,
            exact=False,
            pair_total=pair_count,
            sample_count=pair_count,
            seed=seed,
            group_order=None,
            worst=worst,
            histogram=_make_histogram(values, bins, None),
            gamma_convention="nonzero",
            pair_rows=rows,
        )
    elements = list(source)
    n = len(elements)
    if n == 0:
        raise ValueError("empty element list")
    values = np.empty(n * n, dtype=float)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            values[i * n + j] = pair_sub_defect(a, b, ztol=ztol).defect
    flat = int(values.argmax())
    i, j = divmod(flat, n)
    worst = pair_sub_defect(elements[i], elements[j], pair=("elements", i, j), ztol=ztol)
    rows = ([(i, j, float(values[i * n + j])) for i in range(n) for j in range(n)]
            if collect_pairs else None)
    return AsmReport(
        kind="sub",
        mode="exhaustive",
        bound="attained",
        epsilon=float(values.max()),
        epsilon_exact=None,
        exact=False,
        pair_total=n * n,
        sample_count=None,
        seed=None,
        group_order=n,
        worst=worst,
        histogram=_make_histogram(values, bins, None),
        gamma_convention="nonzero",
        pair_rows=rows,
    )


def conversion_check(eps: Union[Fraction, float]):
    """Both conversion factors for a measured level.

    An eps-level in argument units guarantees chord level 2*pi*eps; a chord
    level eps guarantees argument level eps/2.  Returns ``(2*pi*eps, eps/2)``
    with the second entry exact when the input is a Fraction.
    """
    sub_bound = 2.0 * math.pi * float(eps)
    asm_bound = eps / 2 if isinstance(eps, Fraction) else float(eps) / 2.0
    return sub_bound, asm_bound
