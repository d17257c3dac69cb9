"""Instance difficulty measures, seeded generators, and benchmark sweeps.

The per-symbol imbalance min(n_a, m_a - n_a) drives how hard an instance
is for the engine; the generator manufactures instances whose imbalance
profile is controlled, and the bench harness times the engine on them
and records memo usage against the predicted bound.
"""

import csv
import gc
import json
import random
import statistics
import string
import time
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from .engine import correction_distance, memo_bound
from .indexing import AlphabetMap, build_alphabet
from .oracles import (
    DEFAULT_COMBINATION_BUDGET,
    DEFAULT_STATE_BUDGET,
    matching_distance,
    ucs_distance,
)
from .scripts import apply_script


class InfeasibleProfile(ValueError):
    """The requested generator profile contradicts the requested sizes."""


@dataclass(frozen=True)
class InstanceStats:
    """Difficulty profile of one (source, target) pair."""

    n: int
    m: int
    d: int
    n_counts: Tuple[int, ...]
    m_counts: Tuple[int, ...]
    g_per_symbol: Tuple[int, ...]
    g: int
    sigma_plus: Tuple[int, ...]
    s: int
    predicted_state_bound: int
    feasible: bool
    alphabet: AlphabetMap


def instance_stats(source: Sequence, target: Sequence) -> InstanceStats:
    """Compute sizes, per-symbol counts and imbalances, and the memo bound."""
    alphabet = build_alphabet(source, target)
    d = alphabet.d
    src_counter = Counter(source)
    tgt_counter = Counter(target)
    n_counts = tuple(src_counter.get(sym, 0) for sym in alphabet.external_symbols)
    m_counts = tuple(tgt_counter.get(sym, 0) for sym in alphabet.external_symbols)
    g_per_symbol = tuple(min(na, ma - na) for na, ma in zip(n_counts, m_counts))
    s = sum(1 for g in g_per_symbol if g > 0)
    if d and s == d:
        # every code contributes, except one smallest-imbalance code
        dropped = min(range(1, d + 1), key=lambda a: (g_per_symbol[a - 1], a))
        sigma_plus = tuple(a for a in range(1, d + 1) if a != dropped)
    else:
        sigma_plus = tuple(a for a in range(1, d + 1) if g_per_symbol[a - 1] > 0)
    return InstanceStats(
        n=len(source),
        m=len(target),
        d=d,
        n_counts=n_counts,
        m_counts=m_counts,
        g_per_symbol=g_per_symbol,
        g=max(g_per_symbol, default=0),
        sigma_plus=sigma_plus,
        s=s,
        predicted_state_bound=memo_bound(len(source), g_per_symbol, m_counts),
        feasible=all(na <= ma for na, ma in zip(n_counts, m_counts)),
        alphabet=alphabet,
    )


PROFILES = ("zero-g", "balanced-g", "max-g", "custom")

_SYMBOL_POOL = string.ascii_lowercase + string.ascii_uppercase + string.digits


def _symbol(index: int) -> str:
    if index < len(_SYMBOL_POOL):
        return _SYMBOL_POOL[index]
    return chr(0x100 + index - len(_SYMBOL_POOL))


@dataclass(frozen=True)
class GeneratorSpec:
    """Requested shape of one synthetic instance."""

    d: int
    n: int
    m: int
    profile: str = "balanced-g"
    seed: int = 0
    g_targets: Optional[Tuple[int, ...]] = None


def _composition(rng: random.Random, total: int, parts: int) -> List[int]:
    """Split ``total`` into ``parts`` positive summands uniformly at random."""
    if parts == 0:
        if total:
            raise InfeasibleProfile(f"cannot split {total} into zero parts")
        return []
    if total < parts:
        raise InfeasibleProfile(f"cannot split {total} into {parts} positive parts")
    if parts == 1:
        return [total]
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    edges = [0] + cuts + [total]
    return [b - a for a, b in zip(edges, edges[1:])]


def _g_after(nc: int, mc: int) -> int:
    return min(nc, mc - nc)


def _nudge_counts(rng: random.Random, n_counts: List[int], m_counts: List[int],
                  target_sum: int, maximize_g: bool) -> None:
    """Adjust n_counts in +-1 steps until they sum to target_sum.

    With ``maximize_g`` each step picks the move that keeps the global
    imbalance, then the total imbalance, as high as possible; otherwise a
    random movable index is taken.
    """
    d = len(n_counts)
    diff = target_sum - sum(n_counts)
    while diff != 0:
        step = 1 if diff > 0 else -1
        movable = [
            idx for idx in range(d)
            if (0 <= n_counts[idx] + step <= m_counts[idx])
        ]
        if not movable:
            raise InfeasibleProfile("cannot reach the requested source length")
        if maximize_g:
            def score(idx):
                trial = n_counts.copy()
                trial[idx] += step
                gs = [_g_after(nc, mc) for nc, mc in zip(trial, m_counts)]
                return (max(gs), sum(gs))
            best = max(score(idx) for idx in movable)
            choice = rng.choice([idx for idx in movable if score(idx) == best])
        else:
            choice = rng.choice(movable)
        n_counts[choice] += step
        diff -= step


def _profile_counts(rng: random.Random, spec: GeneratorSpec) -> Tuple[List[int], List[int]]:
    d, n, m = spec.d, spec.n, spec.m
    if spec.profile == "zero-g":
        # pick which codes are fully present in the source; the rest are absent
        if n == 0:
            full = 0
        else:
            lo = max(1, d - (m - n))
            hi = min(d if m == n else d - 1, n)
            if lo > hi:
                raise InfeasibleProfile(
                    f"no zero-imbalance split of n={n}, m={m} over {d} symbols"
                )
            full = rng.randint(lo, hi)
        full_codes = set(rng.sample(range(d), full))
        source_parts = _composition(rng, n, full)
        rest_parts = _composition(rng, m - n, d - full)
        n_counts = [0] * d
        m_counts = [0] * d
        src_it = iter(source_parts)
        rest_it = iter(rest_parts)
        for idx in range(d):
            if idx in full_codes:
                part = next(src_it)
                n_counts[idx] = part
                m_counts[idx] = part
            else:
                m_counts[idx] = next(rest_it)
        return n_counts, m_counts
    m_counts = _composition(rng, m, d)
    if spec.profile == "max-g":
        n_counts = [mc // 2 for mc in m_counts]
        _nudge_counts(rng, n_counts, m_counts, n, maximize_g=True)
        return n_counts, m_counts
    if spec.profile == "balanced-g":
        n_counts = []
        for mc in m_counts:
            mode = rng.choice(("absent", "full", "half"))
            n_counts.append(0 if mode == "absent" else mc if mode == "full" else mc // 2)
        _nudge_counts(rng, n_counts, m_counts, n, maximize_g=False)
        return n_counts, m_counts
    if spec.profile == "custom":
        return _custom_counts(rng, spec)
    raise InfeasibleProfile(f"unknown profile {spec.profile!r}")


def _custom_counts(rng: random.Random, spec: GeneratorSpec) -> Tuple[List[int], List[int]]:
    """Realize per-symbol imbalance targets within +-1.

    Every symbol sits at either its low point (the target itself) or its
    high point (count minus target); both realize the target exactly, and
    a final one-unit nudge per distinct symbol absorbs the remainder while
    moving each imbalance by at most one.
    """
    d, n, m = spec.d, spec.n, spec.m
    targets = spec.g_targets
    if targets is None or len(targets) != d:
        raise InfeasibleProfile("custom profile needs one imbalance target per symbol")
    if any(t < 0 for t in targets):
        raise InfeasibleProfile("imbalance targets must be non-negative")
    minimum = [max(1, 2 * t) for t in targets]
    extra = m - sum(minimum)
    if extra < 0:
        raise InfeasibleProfile("imbalance targets do not fit the target length")
    for _attempt in range(100):
        m_counts = minimum.copy()
        for _ in range(extra):
            m_counts[rng.randrange(d)] += 1
        lows = list(targets)
        highs = [mc - t for t, mc in zip(targets, m_counts)]
        gap, mask = _closest_choice(rng, lows, highs, n)
        if abs(gap) > d:
            continue
        n_counts = [
            highs[idx] if mask >> idx & 1 else lows[idx] for idx in range(d)
        ]
        order = list(range(d))
        rng.shuffle(order)
        step = 1 if gap > 0 else -1
        for idx in order:
            if gap == 0:
                break
            if 0 <= n_counts[idx] + step <= m_counts[idx]:
                n_counts[idx] += step
                gap -= step
        if gap == 0:
            return n_counts, m_counts
    raise InfeasibleProfile("could not realize the imbalance targets within +-1")


def _closest_choice(rng: random.Random, lows: List[int], highs: List[int],
                    wanted: int) -> Tuple[int, int]:
    """Pick low or high per symbol so the sum lands nearest ``wanted``.

    Returns (remaining gap, chosen bitmask).  Exact for small alphabets,
    greedy beyond that.
    """
    d = len(lows)
    base = sum(lows)
    deltas = [h - l for l, h in zip(lows, highs)]
    if d <= 12:
        best = None
        for mask in range(1 << d):
            total = base + sum(deltas[idx] for idx in range(d) if mask >> idx & 1)
            gap = wanted - total
            if best is None or abs(gap) < abs(best[0]):
                best = (gap, mask)
        return best
    order = sorted(range(d), key=lambda idx: -deltas[idx])
    rng.shuffle(order)
    mask = 0
    total = base
    for idx in order:
        if abs(wanted - (total + deltas[idx])) <= abs(wanted - total):
            mask |= 1 << idx
            total += deltas[idx]
    return wanted - total, mask


def generate_instance(spec: GeneratorSpec) -> Tuple[str, str]:
    """Build a feasible (source, target) pair realizing the profile.

    The target is a uniformly random arrangement of the drawn per-symbol
    counts; the source keeps a random subset of the target's occurrences
    in order and is then locally shuffled so that swaps do real work.
    The same spec always produces the same pair.
    """
    if spec.d < 1:
        raise InfeasibleProfile("need at least one symbol")
    if not 0 <= spec.n <= spec.m:
        raise InfeasibleProfile("need 0 <= n <= m")
    if spec.m < spec.d:
        raise InfeasibleProfile("target too short to use every symbol")
    if spec.profile not in PROFILES:
        raise InfeasibleProfile(f"unknown profile {spec.profile!r}")
    rng = random.Random(spec.seed)
    n_counts, m_counts = _profile_counts(rng, spec)
    target_list: List[str] = []
    for idx, cnt in enumerate(m_counts):
        target_list.extend(_symbol(idx) * cnt)
    rng.shuffle(target_list)
    occurrences: dict = {}
    for pos, sym in enumerate(target_list):
        occurrences.setdefault(sym, []).append(pos)
    kept: List[int] = []
    for idx, cnt in enumerate(n_counts):
        if cnt:
            kept.extend(rng.sample(occurrences[_symbol(idx)], cnt))
    kept.sort()
    source_list = [target_list[pos] for pos in kept]
    if len(source_list) > 1:
        # bounded local shuffles; counts are untouched so the pair stays feasible
        for _ in range(len(source_list)):
            pos = rng.randrange(len(source_list) - 1)
            if source_list[pos] != source_list[pos + 1]:
                source_list[pos], source_list[pos + 1] = source_list[pos + 1], source_list[pos]
    return "".join(source_list), "".join(target_list)


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark measurement; wall time is the median over repeats."""

    d: int
    n: int
    m: int
    g: int
    s: int
    profile: str
    seed: int
    distance: Optional[int]
    memo_entries: int
    predicted_bound: int
    wall_time_ns: int
    error: Optional[str] = None


CSV_COLUMNS = (
    "d", "n", "m", "g", "s", "profile", "seed",
    "distance", "memo_entries", "predicted_bound", "wall_time_ns",
)


def run_bench(
    specs: Iterable[GeneratorSpec],
    csv_path: Optional[str] = None,
    json_path: Optional[str] = None,
    repeats: int = 5,
) -> List[BenchRecord]:
    """Generate, solve, and time every spec; optionally write CSV and JSON.

    Each instance is solved ``repeats`` times on a fresh computation (no
    warm memo survives between runs) and the median wall time is kept.
    A failing instance produces a record with its error message instead
    of aborting the sweep.
    """
    records: List[BenchRecord] = []
    for spec in specs:
        try:
            source, target = generate_instance(spec)
            stats = instance_stats(source, target)
            result = None
            runs = []
            for _ in range(max(1, repeats)):
                # a clean heap keeps runs comparable: no collection debt
                # from earlier instances lands inside the timed region
                gc.collect()
                t0 = time.perf_counter_ns()
                result = correction_distance(source, target)
                runs.append(time.perf_counter_ns() - t0)
            if result.memo_entries > stats.predicted_state_bound:
                raise RuntimeError(
                    f"memo entries {result.memo_entries} exceed the bound "
                    f"{stats.predicted_state_bound}"
                )
            records.append(BenchRecord(
                d=stats.d, n=stats.n, m=stats.m, g=stats.g, s=stats.s,
                profile=spec.profile, seed=spec.seed,
                distance=result.distance.value if result.distance.is_finite else None,
                memo_entries=result.memo_entries,
                predicted_bound=stats.predicted_state_bound,
                wall_time_ns=int(statistics.median(runs)),
            ))
        except Exception as exc:
            records.append(BenchRecord(
                d=spec.d, n=spec.n, m=spec.m, g=0, s=0,
                profile=spec.profile, seed=spec.seed,
                distance=None, memo_entries=0, predicted_bound=0,
                wall_time_ns=0, error=str(exc),
            ))
    if csv_path is not None:
        with open(csv_path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_COLUMNS)
            for rec in records:
                writer.writerow([_csv_cell(rec, column) for column in CSV_COLUMNS])
    if json_path is not None:
        with open(json_path, "w") as handle:
            json.dump([_json_record(rec) for rec in records], handle, indent=2)
            handle.write("\n")
    return records


def _csv_cell(record: BenchRecord, column: str):
    value = getattr(record, column)
    if column == "distance" and value is None:
        return "error" if record.error else "unreachable"
    return value


def _json_record(record: BenchRecord) -> dict:
    data = {column: getattr(record, column) for column in CSV_COLUMNS}
    if record.error:
        data["error"] = record.error
    return data


@dataclass(frozen=True)
class EquivalenceReport:
    """Result of sweeping engine and oracles over many instances."""

    pairs: int
    mismatches: Tuple[Tuple[str, str, str, str, str], ...]
    script_failures: Tuple[Tuple[str, str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.script_failures


def _all_strings(alphabet: str, max_len: int):
    for length in range(max_len + 1):
        for tup in product(alphabet, repeat=length):
            yield "".join(tup)


def exhaustive_oracle_check(
    max_n: int = 4,
    max_m: int = 6,
    alphabet_size: int = 2,
    state_budget: int = DEFAULT_STATE_BUDGET,
    combination_budget: int = DEFAULT_COMBINATION_BUDGET,
) -> EquivalenceReport:
    """Compare the engine against both oracles on every small pair.

    Also audits the reconstructed script of every feasible pair.  This is
    the trust anchor the rest of the test suite leans on.
    """
    alphabet = _SYMBOL_POOL[:alphabet_size]
    mismatches = []
    script_failures = []
    pairs = 0
    for target in _all_strings(alphabet, max_m):
        for source in _all_strings(alphabet, max_n):
            pairs += 1
            result = correction_distance(source, target, with_script=True)
            ucs = ucs_distance(source, target, state_budget=state_budget)
            matching = matching_distance(source, target,
                                         combination_budget=combination_budget)
            if not (result.distance == ucs == matching):
                mismatches.append(
                    (source, target, repr(result.distance), repr(ucs), repr(matching))
                )
                continue
            if result.distance.is_finite:
                replayed = apply_script(source, result.script)
                if (replayed != target
                        or len(result.script) != result.distance.value
                        or result.script.insert_count != len(target) - len(source)):
                    script_failures.append((source, target, repr(result.script)))
    return EquivalenceReport(pairs, tuple(mismatches), tuple(script_failures))
