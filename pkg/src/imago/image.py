"""Exhaustive images of word maps and their exact ratios.

Two strategies give the same set:

``naive``
    evaluate the word on every tuple in G^k.
``pruned``
    let the first variable run over conjugacy-class representatives only,
    then close the result under conjugation.  Valid because
    w(h g1 h^-1, ..., h gk h^-1) = h w(g1, ..., gk) h^-1.

On fast groups (see ``imago.groups``) tuples are processed in numpy chunks of
element ids and the image is a boolean mask over ids.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import CapExceeded, ImagoError
from .groups import format_group_spec, get_group
from .words import format_word

__all__ = ["ImageReport", "image", "image_mask", "ratio", "scan", "tuple_count"]

STRATEGIES = ("naive", "pruned")
_CHUNK = 1 << 18


@dataclass(frozen=True)
class ImageReport:
    spec: object
    word: object
    order: int
    image_size: int
    ratio: Fraction
    strategy: str

    def as_dict(self):
        return {
            "spec": str(self.spec),
            "word": str(self.word),
            "order": str(self.order),
            "image_size": str(self.image_size),
            "ratio": {"num": str(self.ratio.numerator), "den": str(self.ratio.denominator)},
            "ratio_float": float(self.ratio),
            "strategy": self.strategy,
        }


@dataclass(frozen=True)
class ScanError:
    """A scan row whose computation failed; kept in place of a report."""

    spec: object
    word: object
    error: str

    def as_dict(self):
        return {"spec": str(self.spec), "word": str(self.word), "error": self.error}


def _radices(g, k, strategy):
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "naive":
        first = g.order
    elif g.fast:
        first = len(g.class_rep_ids())
    else:
        first = len(g.class_reps())
    return [first] + [g.order] * (k - 1)


def tuple_count(w, g, strategy="pruned"):
    k = len(w.generators())
    if k == 0:
        return 1
    return prod(_radices(g, k, strategy))


def _check_caps(w, g, strategy, limits):
    g.check_enumerable()
    need = tuple_count(w, g, strategy)
    if need > limits.work_cap:
        raise CapExceeded(
            f"image of {format_word(w)} on {format_group_spec(g.spec)}", need, limits.work_cap
        )
    return need


def _eval_chunk(w, g, gens, cands, radices, lo, hi):
    flat = np.arange(lo, hi, dtype=np.int64)
    values = {}
    stride = 1
    for gen, cand, n in reversed(list(zip(gens, cands, radices))):
        digit = (flat // stride) % n
        values[gen] = digit if cand is None else cand[digit]
        stride *= n
    powers = {}
    acc = np.zeros(hi - lo, dtype=np.int64)
    for gen, e in w.syllables:
        key = (gen, e)
        if key not in powers:
            powers[key] = g.pow_ids(values[gen], e)
        acc = g.mul_ids(acc, powers[key])
    mask = np.zeros(g.order, dtype=bool)
    mask[acc] = True
    return mask


def _mask_fast(w, g, strategy, workers):
    gens = w.generators()
    if not gens:
        mask = np.zeros(g.order, dtype=bool)
        mask[0] = True
        return mask
    radices = _radices(g, len(gens), strategy)
    first = g.class_rep_ids() if strategy == "pruned" else None
    cands = [first] + [None] * (len(gens) - 1)
    total = prod(radices)
    bounds = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def job(b):
        return _eval_chunk(w, g, gens, cands, radices, *b)

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, bounds))
    else:
        parts = [job(b) for b in bounds]
    mask = np.logical_or.reduce(parts)
    if strategy == "pruned":
        labels = g.class_labels()
        mask = np.isin(labels, np.unique(labels[mask]))
    return mask


def _eval_raw(w, g, lookup):
    acc = g.identity
    for gen, e in w.syllables:
        acc = g.mul(acc, g.pow(lookup[gen], e))
    return acc


def _set_structural(w, g, strategy, workers):
    gens = w.generators()
    if not gens:
        return {g.identity}
    elems = g.elements()
    firsts = g.class_reps() if strategy == "pruned" else elems

    def job(chunk):
        out = set()
        for head in chunk:
            for rest in itertools.product(elems, repeat=len(gens) - 1):
                out.add(_eval_raw(w, g, dict(zip(gens, (head,) + rest))))
        return out

    n_jobs = max(1, min(workers, len(firsts)))
    chunks = [firsts[i::n_jobs] for i in range(n_jobs)]
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(job, chunks))
    else:
        parts = [job(chunks[0])]
    result = set().union(*parts)
    if strategy == "pruned":
        keys = {g.class_key(x) for x in result}
        result = {x for x in elems if g.class_key(x) in keys}
    return result


def image_mask(w, spec, strategy="pruned", limits=DEFAULT_LIMITS, workers=1):
    """Boolean mask over element ids of a fast group; None if the group is not fast."""
    g = get_group(spec, limits)
    _check_caps(w, g, strategy, limits)
    if not g.fast:
        return None
    return _mask_fast(w, g, strategy, workers)


def _image_size(w, g, strategy, limits, workers):
    _check_caps(w, g, strategy, limits)
    if g.fast:
        return int(_mask_fast(w, g, strategy, workers).sum())
    return len(_set_structural(w, g, strategy, workers))


def image(w, spec, strategy="pruned", limits=DEFAULT_LIMITS, workers=1):
    """The set w(G) = { w(t) : t in G^k } as a frozenset of group elements."""
    g = get_group(spec, limits)
    _check_caps(w, g, strategy, limits)
    if g.fast:
        mask = _mask_fast(w, g, strategy, workers)
        return frozenset(g.element(i) for i in np.flatnonzero(mask))
    return frozenset(_set_structural(w, g, strategy, workers))


def ratio(w, spec, strategy="pruned", limits=DEFAULT_LIMITS, workers=1):
    g = get_group(spec, limits)
    size = _image_size(w, g, strategy, limits, workers)
    return ImageReport(g.spec, w, g.order, size, Fraction(size, g.order), strategy)


def scan(words, specs, strategy="pruned", limits=DEFAULT_LIMITS, workers=1):
    """Ratios for every (word, spec) pair, word-major.  Failures become ScanError rows."""
    rows = []
    for w in words:
        for s in specs:
            try:
                rows.append(ratio(w, s, strategy, limits, workers))
            except (ImagoError, ValueError) as exc:
                rows.append(ScanError(s, w, str(exc)))
    return rows
