"""Finite-state encoder from arbitrary message blocks to irreducible words.

States are the irreducible words of length m.  Two states x, x' are
joined by an edge when the concatenation xx' is irreducible, so any walk
through the graph spells out one long irreducible word (a square spans
at most 2k <= m + 1 symbols and therefore never touches three states).
Each step consumes one block of ell base-q message symbols, interpreted
as a number j in [1, q**ell], and moves to the j-th neighbor of the
current state in lexicographic order.  This is well defined whenever
q**ell <= delta_min_degree(m), the minimum out-degree of the graph.

Two interchangeable backends:

* "rank" walks neighbor lists digit by digit via extension counts on the
  boundary window, so nothing is materialized (O(m) big-int operations
  per step);
* "lookup" materializes the full edge table once and indexes into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .enumeration import (
    FseParams,
    count_extensions,
    count_irr,
    delta_min_degree,
    extension_index,
    iter_extensions,
    kth_extension,
)
from .errors import (
    CapacityError,
    CorruptInputError,
    DomainError,
    NotAnEdgeError,
    UnlabeledEdgeError,
)
from .words import DupSystem, Word, is_irreducible


def _require_state(x: Word, params: FseParams) -> None:
    if x.q != params.sys.q:
        raise DomainError(
            f"word alphabet q={x.q} does not match system q={params.sys.q}"
        )
    if len(x) != params.m:
        raise DomainError(f"state must have length m={params.m}, got {len(x)}")
    if not is_irreducible(x, params.sys.k):
        raise DomainError(f"state {x} is not irreducible for k = {params.sys.k}")


def neighbors(x: Word, params: FseParams) -> list[Word]:
    """All states x' with x..x' irreducible, in lexicographic order."""
    _require_state(x, params)
    return list(iter_extensions(x, params.m, params.sys))


def nth_neighbor(x: Word, j: int, params: FseParams) -> Word:
    """The j-th neighbor of x (1-indexed, lexicographic) without
    materializing the list: symbols are chosen digit by digit, counting
    completions through the boundary window."""
    _require_state(x, params)
    total = count_extensions(x, params.m, params.sys)
    if not 1 <= j <= total:
        raise DomainError(f"neighbor index {j} outside [1, {total}]")
    return kth_extension(x, params.m, j, params.sys)


def neighbor_index(x: Word, x_next: Word, params: FseParams) -> int:
    """Position of x_next among x's neighbors; the inverse of nth_neighbor.

    Raises NotAnEdgeError when x..x_next is reducible and
    UnlabeledEdgeError when the edge exists but its position exceeds
    q**ell (such edges carry no message block).
    """
    _require_state(x, params)
    _require_state(x_next, params)
    try:
        idx = extension_index(x, x_next, params.sys)
    except DomainError as e:
        raise NotAnEdgeError(str(e)) from None
    if idx > params.sys.q**params.ell:
        raise UnlabeledEdgeError(
            f"edge index {idx} exceeds the labeled range {params.sys.q**params.ell}"
        )
    return idx


class EdgeLabelTable:
    """Materialized encoder graph: full lex-ordered neighbor list per state.

    Labels are implicit: the j-th entry of a row (1-indexed) is the
    neighbor reached on message value j - 1, valid for j <= q**ell.
    Entries beyond q**ell exist as edges but carry no label.
    """

    def __init__(self, params: FseParams, rows: dict[Word, tuple[Word, ...]]):
        self.params = params
        self.rows = rows

    def states(self) -> list[Word]:
        return list(self.rows)

    def neighbors_of(self, x: Word) -> tuple[Word, ...]:
        return self.rows[x]

    def labeled_neighbors_of(self, x: Word) -> tuple[Word, ...]:
        return self.rows[x][: self.params.sys.q**self.params.ell]


def build_lookup_table(params: FseParams, state_limit: int = 200_000) -> EdgeLabelTable:
    """Materialize every state's neighbor list (lexicographic rows).

    Refuses (CapacityError) when the state count exceeds state_limit;
    use the rank backend instead at large m.
    """
    sys = params.sys
    n_states = count_irr(params.m, sys)
    if n_states > state_limit:
        raise CapacityError(
            f"{n_states} states exceed the materialization limit {state_limit}"
        )
    empty = Word((), sys.q)
    rows: dict[Word, tuple[Word, ...]] = {}
    for state in iter_extensions(empty, params.m, sys):
        rows[state] = tuple(iter_extensions(state, params.m, sys))
    return EdgeLabelTable(params, rows)


def _block_value(block: Word, params: FseParams) -> int:
    if block.q != params.sys.q:
        raise DomainError(
            f"block alphabet q={block.q} does not match system q={params.sys.q}"
        )
    if len(block) != params.ell:
        raise DomainError(f"blocks must have length ell={params.ell}, got {len(block)}")
    v = 0
    for s in block.symbols:
        v = v * params.sys.q + s
    return v


def _value_block(v: int, params: FseParams) -> Word:
    q = params.sys.q
    digits = [0] * params.ell
    for pos in range(params.ell - 1, -1, -1):
        v, digits[pos] = divmod(v, q)
    return Word(tuple(digits), q)


class FseCodec:
    """A ready-to-run (ell, m) encoder/decoder pair.

    The start state is the lexicographically least irreducible word of
    length m.  Construction verifies q**ell <= delta_min_degree(m), the
    condition that makes every message block encodable from every state.
    """

    def __init__(
        self,
        params: FseParams,
        backend: str = "rank",
        state_limit: int = 200_000,
    ):
        if backend not in ("rank", "lookup"):
            raise DomainError(f"backend must be 'rank' or 'lookup', got {backend!r}")
        sys = params.sys
        degree = delta_min_degree(params.m, sys)
        if sys.q**params.ell > degree:
            raise DomainError(
                f"q**ell = {sys.q**params.ell} exceeds the minimum out-degree "
                f"{degree} at m = {params.m}; no labeling exists"
            )
        self.params = params
        self.backend = backend
        self.start_state = kth_extension(Word((), sys.q), params.m, 1, sys)
        self.table: Optional[EdgeLabelTable] = None
        if backend == "lookup":
            self.table = build_lookup_table(params, state_limit)

    def _step(self, state: Word, j: int) -> Word:
        if self.table is not None:
            return self.table.rows[state][j - 1]
        return kth_extension(state, self.params.m, j, self.params.sys)

    def _index(self, state: Word, nxt: Word) -> int:
        if self.table is not None:
            try:
                return self.table.rows[state].index(nxt) + 1
            except ValueError:
                raise NotAnEdgeError(f"{nxt} is not a neighbor of {state}") from None
        idx = extension_index(state, nxt, self.params.sys)
        return idx

    def encode(self, blocks: Sequence[Word]) -> Word:
        """Concatenate the states visited while consuming the blocks."""
        params = self.params
        state = self.start_state
        out: list[int] = []
        for block in blocks:
            j = _block_value(block, params) + 1
            state = self._step(state, j)
            out.extend(state.symbols)
        return Word(tuple(out), params.sys.q)

    def decode(self, x: Word) -> list[Word]:
        """Invert encode; raises CorruptInputError on damaged input."""
        params = self.params
        m = params.m
        if x.q != params.sys.q:
            raise DomainError(
                f"word alphabet q={x.q} does not match system q={params.sys.q}"
            )
        if len(x) % m != 0:
            raise CorruptInputError(
                f"length {len(x)} is not a multiple of the state length {m}"
            )
        labeled = params.sys.q**params.ell
        state = self.start_state
        blocks: list[Word] = []
        for b in range(len(x) // m):
            chunk = Word(x.symbols[b * m:(b + 1) * m], x.q)
            try:
                idx = self._index(state, chunk)
            except (DomainError, NotAnEdgeError) as e:
                raise CorruptInputError(f"state {b + 1}: {e}") from None
            if idx > labeled:
                raise CorruptInputError(
                    f"state {b + 1}: edge index {idx} exceeds the labeled range {labeled}"
                )
            blocks.append(_value_block(idx - 1, params))
            state = chunk
        return blocks


def encode_stream(blocks: Sequence[Word], params: FseParams) -> Word:
    """One-shot encode with the rank backend."""
    return FseCodec(params).encode(blocks)


def decode_stream(x: Word, params: FseParams) -> list[Word]:
    """One-shot decode with the rank backend."""
    return FseCodec(params).decode(x)
