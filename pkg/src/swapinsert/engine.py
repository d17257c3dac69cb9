"""Correction distance for insert + adjacent-swap editing, with scripts.

The computation scans the source and target left to right.  A scan state
(i, j, c) reads: target positions before j are already produced, source
positions before i are already consumed, and for each symbol code a,
``c[a-1]`` of the remaining source occurrences of a are spoken for by
swap moves decided earlier and must be skipped when reached.  Four rules
reduce a state: skip a spoken-for source symbol, match equal heads,
insert the target head, or commit the nearest free source occurrence of
the target head to a leftward swap move.

States are memoized under a compressed reversible key (StateCodec).
Instances whose per-symbol imbalance is zero everywhere never branch, so
they run as a plain scan with no memo at all; that is what makes the
equal-length, swap-only case effectively linear.

Evaluation uses an explicit work stack instead of native recursion: the
reduction depth grows with n + m and would overflow the interpreter
stack on large inputs.
"""

from dataclasses import dataclass, replace
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .cost import Cost
from .indexing import IndexedString, build_alphabet, index_string
from .scripts import Delete, Insert, Script, Swap

State = Tuple[int, int, Tuple[int, ...]]


class ScriptUnavailable(ValueError):
    """No correction script exists because the distance is unreachable."""


class MalformedStateKey(ValueError):
    """A state key fails validation against its instance."""


class StateKey(NamedTuple):
    """Compressed memo key for one scan state.

    ``r`` stores one bounded coordinate per imbalanced symbol code (all
    but one of them when every code is imbalanced, in which case ``p``
    names the reordered slot of a zero counter that was dropped).  The
    target position is recovered as i + k + sum(r).
    """

    p: Optional[int]
    i: int
    k: int
    r: Tuple[int, ...]


def memo_bound(n: int, g_by_code: Sequence[int], m_by_code: Sequence[int]) -> int:
    """Upper bound on distinct memo entries for an instance's key space.

    Zero when no symbol is imbalanced: such instances are evaluated
    without a memo.
    """
    positives = sorted(g for g in g_by_code if g > 0)
    s = len(positives)
    if s == 0:
        return 0
    d = len(g_by_code)
    span = 1 + sum(m - g for g, m in zip(g_by_code, m_by_code))
    if s == d:
        prod = 1
        for g in positives[1:]:
            prod *= g + 1
        return d * (n + 1) * span * prod
    prod = 1
    for g in positives:
        prod *= g + 1
    return (n + 1) * span * prod


def _check_common_alphabet(a: IndexedString, b: IndexedString) -> None:
    if a.alphabet is b.alphabet:
        return
    if a.alphabet.external_symbols != b.alphabet.external_symbols:
        raise ValueError("source and target must be indexed over a common alphabet map")


class StateCodec:
    """Reversible compression of scan states for one (source, target) pair.

    Symbol codes are reordered so imbalanced codes come first with growing
    imbalance; balanced codes carry no key information, which is what
    keeps the key space within the adaptive bound.  Both directions run
    in O(d).
    """

    def __init__(self, source: IndexedString, target: IndexedString) -> None:
        _check_common_alphabet(source, target)
        self.source = source
        self.target = target
        self.n = len(source)
        self.m = len(target)
        d = source.alphabet.d
        self.d = d
        self.n_counts = tuple(source.per_symbol_count)
        self.m_counts = tuple(target.per_symbol_count)
        if any(na > ma for na, ma in zip(self.n_counts, self.m_counts)):
            raise ValueError("state keys are only defined for feasible pairs")
        self.g = tuple(min(na, ma - na) for na, ma in zip(self.n_counts, self.m_counts))
        self.reordering = tuple(
            sorted(range(1, d + 1), key=lambda a: (self.g[a - 1] <= 0, self.g[a - 1], a))
        )
        self.s = sum(1 for g in self.g if g > 0)
        # the dropped-coordinate packing only applies when every code is
        # imbalanced, which presumes a non-empty alphabet
        self.full = self.s == d and d > 0
        self.use_counter = tuple(
            na <= ma - na for na, ma in zip(self.n_counts, self.m_counts)
        )

    def encode(self, i: int, j: int, c: Sequence[int]) -> StateKey:
        """Pack a reachable state (i, j, c) into its key."""
        d = self.d
        if len(c) != d:
            raise ValueError(f"counter vector must have {d} entries")
        if not 1 <= i <= self.n + 1 or not 1 <= j <= self.m + 1:
            raise ValueError(f"state ({i}, {j}) outside the scan range")
        rank_s = self.source.rank_table
        rank_l = self.target.rank_table
        use_counter = self.use_counter
        xs = [0] * d
        for idx in range(d):
            if use_counter[idx]:
                xs[idx] = c[idx]
            else:
                xs[idx] = rank_l[idx][j - 1] - rank_s[idx][i - 1] - c[idx]
        order = self.reordering
        if self.full:
            p = None
            for slot in range(d):
                if c[order[slot] - 1] == 0:
                    p = slot + 1
                    break
            if p is None:
                raise ValueError("no zero counter: state is not reachable")
            r = tuple(xs[order[slot] - 1] for slot in range(d) if slot != p - 1)
        else:
            p = None
            r = tuple(xs[order[slot] - 1] for slot in range(self.s))
        return StateKey(p, i, (j - i) - sum(r), r)

    def decode(self, key: StateKey) -> State:
        """Unpack a key back into (i, j, c); malformed keys are rejected."""
        d = self.d
        expected_r = d - 1 if self.full else self.s
        if not isinstance(key.r, tuple) or len(key.r) != expected_r:
            raise MalformedStateKey(f"expected {expected_r} stored coordinates")
        if self.full:
            if key.p is None or not 1 <= key.p <= d:
                raise MalformedStateKey("zero-counter slot must be in [1..d]")
        elif key.p is not None:
            raise MalformedStateKey("zero-counter slot only applies when every code is imbalanced")
        if not 1 <= key.i <= self.n + 1:
            raise MalformedStateKey(f"source position {key.i} outside [1..{self.n + 1}]")
        if any(v < 0 for v in key.r):
            raise MalformedStateKey("stored coordinates must be non-negative")
        j = key.i + key.k + sum(key.r)
        if not 1 <= j <= self.m + 1:
            raise MalformedStateKey(f"recovered target position {j} outside [1..{self.m + 1}]")
        order = self.reordering
        xs: List[Optional[int]] = [0] * d
        if self.full:
            taken = iter(key.r)
            for slot in range(d):
                xs[order[slot] - 1] = None if slot == key.p - 1 else next(taken)
        else:
            for slot in range(self.s):
                xs[order[slot] - 1] = key.r[slot]
        rank_s = self.source.rank_table
        rank_l = self.target.rank_table
        c = [0] * d
        i = key.i
        for idx in range(d):
            x = xs[idx]
            q = rank_l[idx][j - 1] - rank_s[idx][i - 1]
            if x is None:
                ca = 0
            elif x > max(self.g[idx], 0):
                raise MalformedStateKey(
                    f"coordinate {x} for code {idx + 1} exceeds its imbalance"
                )
            elif self.use_counter[idx]:
                ca = x
            else:
                ca = q - x
            if not 0 <= ca <= self.n_counts[idx]:
                raise MalformedStateKey(f"counter {ca} for code {idx + 1} out of range")
            c[idx] = ca
        if d and min(c) != 0:
            raise MalformedStateKey("no counter is zero")
        return (i, j, tuple(c))


def encode_state(codec: StateCodec, i: int, j: int, c: Sequence[int]) -> StateKey:
    """Functional form of StateCodec.encode."""
    return codec.encode(i, j, c)


def decode_state(key: StateKey, codec: StateCodec) -> State:
    """Functional form of StateCodec.decode; the codec is the context."""
    return codec.decode(key)


@dataclass(frozen=True)
class EngineResult:
    """Outcome of one distance computation.

    ``reordering`` and ``imbalanced_count`` describe the key packing used;
    ``state_bound`` is the instance's memo-size bound, which
    ``memo_entries`` never exceeds.  ``states`` holds every evaluated
    (i, j, c) when the computation ran with state recording on.
    """

    distance: Cost
    memo_entries: int
    script: Optional[Script] = None
    reordering: Tuple[int, ...] = ()
    imbalanced_count: int = 0
    state_bound: int = 0
    states: Optional[Tuple[State, ...]] = None


class _Computation:
    """Single-use evaluation context; owns its memo exclusively."""

    def __init__(self, source: IndexedString, target: IndexedString,
                 record_states: bool = False) -> None:
        self.source = source
        self.target = target
        self.n = len(source)
        self.m = len(target)
        self.codec = StateCodec(source, target)
        self.memo: Optional[dict] = {} if self.codec.s > 0 else None
        self.states: Optional[List[State]] = [] if record_states else None

    def _moves(self, i: int, j: int, c: Tuple[int, ...]):
        """Transitions out of a non-boundary state as (kind, edge, child)."""
        source, target = self.source, self.target
        a = source.symbols[i - 1]
        if c[a - 1] > 0:
            # this source symbol was spoken for by an earlier swap commitment
            lowered = list(c)
            lowered[a - 1] -= 1
            return [("skip", 0, (i + 1, j, tuple(lowered)))]
        b = target.symbols[j - 1]
        if a == b:
            return [("match", 0, (i + 1, j + 1, c))]
        moves = []
        idx = b - 1
        cb = c[idx]
        rank_s = source.rank_table
        row_b = rank_s[idx]
        if cb == 0:
            # inserting b keeps the child feasible only while the target
            # still needs more b's than the source suffix can supply
            row_lb = target.rank_table[idx]
            if row_b[self.n] - row_b[i - 1] < row_lb[self.m] - row_lb[j - 1]:
                moves.append(("insert", 1, (i, j + 1, c)))
        occurrences = source.select_table[idx]
        kth = row_b[i] + cb + 1
        if kth <= len(occurrences):
            r = occurrences[kth - 1]
            ignored_before = 0
            for t in range(self.codec.d):
                ct = c[t]
                if ct:
                    inside = rank_s[t][r] - rank_s[t][i - 1]
                    ignored_before += ct if ct < inside else inside
            raised = list(c)
            raised[idx] += 1
            moves.append(("swap", (r - i) - ignored_before, (i, j + 1, tuple(raised))))
        return moves

    def evaluate_state(self, i: int, j: int, c: Tuple[int, ...]) -> Optional[int]:
        """Value of one scan state: an int cost, or None when unreachable.

        Uses the computation's memo when the instance carries one, and a
        scratch table otherwise.
        """
        return self._solve_memoized((i, j, c))

    def _solve_memoized(self, start: State) -> Optional[int]:
        memo = self.memo if self.memo is not None else {}
        encode = self.codec.encode
        n, m = self.n, self.m
        record = self.states
        stack = [(False, start, None, None)]
        while stack:
            combining, state, key, moves = stack.pop()
            if combining:
                best = None
                for _kind, edge, _child, child_key in moves:
                    value = memo[child_key]
                    if value is not None:
                        total = edge + value
                        if best is None or total < best:
                            best = total
                memo[key] = best
                continue
            i, j, c = state
            key = encode(i, j, c)
            if key in memo:
                continue
            if record is not None:
                record.append(state)
            if i == n + 1:
                memo[key] = (m - j + 1) if not any(c) else None
                continue
            if j == m + 1:
                memo[key] = 0 if sum(c) == n - i + 1 else None
                continue
            expanded = [
                (kind, edge, child, encode(*child))
                for kind, edge, child in self._moves(i, j, c)
            ]
            stack.append((True, state, key, expanded))
            for _kind, _edge, child, child_key in expanded:
                if child_key not in memo:
                    stack.append((False, child, None, None))
        return memo[encode(*start)]

    def _solve_chain(self, start: State) -> Optional[int]:
        # With no imbalanced symbol at most one rule ever applies, so the
        # whole evaluation is one forward scan and needs no memo.
        n, m, d = self.n, self.m, self.codec.d
        s_syms = self.source.symbols
        l_syms = self.target.symbols
        rank_s = self.source.rank_table
        rank_l = self.target.rank_table
        select_s = self.source.select_table
        counts_s = self.source.per_symbol_count
        counts_l = self.target.per_symbol_count
        record = self.states
        i, j, c_tuple = start
        c = list(c_tuple)
        remaining = sum(c)
        total = 0
        while True:
            if record is not None:
                record.append((i, j, tuple(c)))
            if i == n + 1:
                return total + (m - j + 1) if remaining == 0 else None
            if j == m + 1:
                return total if remaining == n - i + 1 else None
            a = s_syms[i - 1]
            ca = c[a - 1]
            if ca > 0:
                c[a - 1] = ca - 1
                remaining -= 1
                i += 1
                continue
            b = l_syms[j - 1]
            if a == b:
                i += 1
                j += 1
                continue
            idx = b - 1
            cb = c[idx]
            row_b = rank_s[idx]
            insert_ok = False
            if cb == 0:
                insert_ok = (counts_s[idx] - row_b[i - 1]
                             < counts_l[idx] - rank_l[idx][j - 1])
            occurrences = select_s[idx]
            kth = row_b[i] + cb + 1
            if kth <= len(occurrences):
                if insert_ok:
                    raise RuntimeError(
                        "branching state reached in a zero-imbalance instance"
                    )
                r = occurrences[kth - 1]
                ignored_before = 0
                if remaining:
                    for t in range(d):
                        ct = c[t]
                        if ct:
                            inside = rank_s[t][r] - rank_s[t][i - 1]
                            ignored_before += ct if ct < inside else inside
                total += (r - i) - ignored_before
                c[idx] = cb + 1
                remaining += 1
                j += 1
            elif insert_ok:
                total += 1
                j += 1
            else:
                return None

    def solve(self) -> Optional[int]:
        start = (1, 1, (0,) * self.codec.d)
        if self.memo is None:
            return self._solve_chain(start)
        return self._solve_memoized(start)

    def reconstruct(self) -> Script:
        """Rebuild one optimal script by replaying decisions off the memo.

        Target positions are produced left to right; a swap commitment of
        the source occurrence at position r becomes an immediate run of
        adjacent swaps walking it down to the boundary.  Ties between the
        insert and swap branches go to the insertion.
        """
        raw_of = self.source.alphabet.raw_of
        l_syms = self.target.symbols
        memo = self.memo
        encode = self.codec.encode if memo is not None else None
        n, m = self.n, self.m
        ops: List = []
        i, j, c = 1, 1, (0,) * self.codec.d
        while True:
            if i == n + 1:
                ops.extend(Insert(pos, raw_of(l_syms[pos - 1])) for pos in range(j, m + 1))
                break
            if j == m + 1:
                break
            moves = self._moves(i, j, c)
            if not moves:
                raise RuntimeError("optimal path hit a dead end during reconstruction")
            if len(moves) == 1:
                kind, edge, child = moves[0]
            else:
                # _moves lists the insert branch first
                totals = []
                for _kind, edge, child in moves:
                    value = memo[encode(*child)]
                    totals.append(None if value is None else edge + value)
                ins_total, swap_total = totals
                if swap_total is None or (ins_total is not None and ins_total <= swap_total):
                    kind, edge, child = moves[0]
                else:
                    kind, edge, child = moves[1]
            if kind == "insert":
                ops.append(Insert(j, raw_of(l_syms[j - 1])))
            elif kind == "swap":
                ops.extend(Swap(pos) for pos in range(j + edge - 1, j - 1, -1))
            i, j, c = child
        return Script(tuple(ops))


def feasible(source: IndexedString, target: IndexedString) -> bool:
    """True when no symbol occurs more often in the source than the target."""
    _check_common_alphabet(source, target)
    return all(na <= ma for na, ma in zip(source.per_symbol_count, target.per_symbol_count))


def _run(source: IndexedString, target: IndexedString, with_script: bool,
         record_states: bool) -> EngineResult:
    _check_common_alphabet(source, target)
    if not feasible(source, target):
        # detected from the counts alone, before any state is evaluated
        return EngineResult(distance=Cost.unreachable(), memo_entries=0)
    comp = _Computation(source, target, record_states=record_states)
    value = comp.solve()
    entries = len(comp.memo) if comp.memo is not None else 0
    bound = memo_bound(comp.n, comp.codec.g, comp.codec.m_counts)
    if entries > bound:
        raise RuntimeError(
            f"internal error: {entries} memo entries exceed the bound {bound}"
        )
    script = None
    if with_script and value is not None:
        script = comp.reconstruct()
        if len(script) != value:
            raise RuntimeError(
                f"internal error: script cost {len(script)} != distance {value}"
            )
    return EngineResult(
        distance=Cost.finite(value) if value is not None else Cost.unreachable(),
        memo_entries=entries,
        script=script,
        reordering=comp.codec.reordering,
        imbalanced_count=comp.codec.s,
        state_bound=bound,
        states=tuple(comp.states) if comp.states is not None else None,
    )


def distance(source: IndexedString, target: IndexedString,
             record_states: bool = False) -> EngineResult:
    """Minimum number of insertions plus adjacent swaps turning source into target.

    Unreachable exactly when some symbol occurs more often in the source
    than in the target.
    """
    return _run(source, target, with_script=False, record_states=record_states)


def distance_with_script(source: IndexedString, target: IndexedString,
                         record_states: bool = False) -> EngineResult:
    """Like distance(), but also reconstructs one optimal correction script."""
    if not feasible(source, target):
        raise ScriptUnavailable("the distance is unreachable, no script exists")
    return _run(source, target, with_script=True, record_states=record_states)


def weighted_distance(source: IndexedString, target: IndexedString,
                      c_ins, c_swap) -> Cost:
    """Cheapest weighted correction cost for per-operation prices.

    Every minimal correction uses exactly m - n insertions, so insertions
    and swaps never trade off against each other and the unweighted
    optimum fixes both operation counts.
    """
    if c_ins < 0 or c_swap < 0:
        raise ValueError("weights must be non-negative")
    result = distance(source, target)
    if not result.distance.is_finite:
        return Cost.unreachable()
    inserts = len(target) - len(source)
    swaps = result.distance.value - inserts
    return Cost.finite(c_ins * inserts + c_swap * swaps)


def swap_delete_distance(long_string: IndexedString, short_string: IndexedString) -> EngineResult:
    """Distance from ``long_string`` to ``short_string`` with deletes and swaps.

    Mirrors the insert-based computation in the opposite direction: the
    reconstructed script is reversed, and every insertion is undone as a
    deletion at the same position.
    """
    _check_common_alphabet(long_string, short_string)
    if not feasible(short_string, long_string):
        return EngineResult(distance=Cost.unreachable(), memo_entries=0)
    result = _run(short_string, long_string, with_script=True, record_states=False)
    mirrored = tuple(
        Delete(op.position) if isinstance(op, Insert) else op
        for op in reversed(result.script.ops)
    )
    return replace(result, script=Script(mirrored))


def correction_distance(source: Sequence, target: Sequence,
                        with_script: bool = False,
                        record_states: bool = False) -> EngineResult:
    """Distance between raw strings; builds the alphabet map and indexes.

    With ``with_script`` the script is included whenever the distance is
    finite (an unreachable pair simply comes back without one).
    """
    alphabet = build_alphabet(source, target)
    return _run(
        index_string(source, alphabet),
        index_string(target, alphabet),
        with_script=with_script,
        record_states=record_states,
    )


def swap_delete_correction(source: Sequence, target: Sequence) -> EngineResult:
    """Swap-delete distance between raw strings (source is the longer side)."""
    alphabet = build_alphabet(target, source)
    return swap_delete_distance(
        index_string(source, alphabet),
        index_string(target, alphabet),
    )
