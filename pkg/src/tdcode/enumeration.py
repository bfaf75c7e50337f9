"""Exact enumeration for irreducible words.

Provides arbitrary-precision counts of irreducible words (total and
prefix-constrained), minimum out-degrees of the irreducible-word overlap
graph, asymptotic growth rates, and encoder parameter selection.

The workhorse is a suffix-window dynamic program: a square that ends at
a freshly appended symbol spans at most the last 2k symbols, so the
number of valid length-r extensions of a word depends only on its last
min(len, 2k-1) symbols.  States are the irreducible words of length at
most 2k-1; one table of per-state extension counts serves prefix
counting, lexicographic unranking, neighbor indexing, and out-degree
minimization alike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError
from .words import DupSystem, Word, is_irreducible

# ------------------------------------------------------------------ totals


class CountTable:
    """Memoized counts I(n) of irreducible words for one system.

    Base values cover n <= 3 (k = 2) resp. n <= 5 (k = 3); beyond that
    the counts satisfy a constant-coefficient linear recursion.  Values
    are exact integers.
    """

    def __init__(self, sys: DupSystem):
        self.sys = sys
        q = sys.q
        if sys.k == 2:
            self._values = [1, q, q * (q - 1), q * (q - 1) ** 2]
        else:
            self._values = [
                1,
                q,
                q * (q - 1),
                q * (q - 1) ** 2,
                q * q * (q - 1) * (q - 2),
                q * (q - 1) * (q - 2) * (q * q - q - 1),
            ]
        self._cumulative = [0]

    def count(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"word length must be >= 0, got {n}")
        v = self._values
        q = self.sys.q
        if self.sys.k == 2:
            while len(v) <= n:
                v.append((q - 2) * (v[-1] + v[-2]))
        else:
            while len(v) <= n:
                v.append((q - 2) * v[-1] + (q - 3) * v[-2] + (q - 2) * v[-3])
        return v[n]

    def cumulative(self, n: int) -> int:
        """Sum of count(i) for i = 1..n."""
        self.count(max(n, 0))
        c = self._cumulative
        while len(c) <= n:
            c.append(c[-1] + self._values[len(c)])
        return c[n] if n >= 0 else 0


_count_tables: dict[DupSystem, CountTable] = {}


def count_table(sys: DupSystem) -> CountTable:
    table = _count_tables.get(sys)
    if table is None:
        table = _count_tables[sys] = CountTable(sys)
    return table


def count_irr(n: int, sys: DupSystem) -> int:
    """Number of irreducible words of length n over {0..q-1}, exact."""
    return count_table(sys).count(n)


def code_size(n: int, sys: DupSystem) -> int:
    """Size of the length-n run-padded code: sum of count_irr(i) for i <= n."""
    if n < 1:
        raise DomainError(f"codeword length must be >= 1, got {n}")
    return count_table(sys).cumulative(n)


# -------------------------------------------------------------- window DP


def _append_ok(w: tuple[int, ...], c: int, k: int) -> bool:
    # reject iff some square of half-length t <= k ends at the new symbol
    full = w + (c,)
    n = len(full)
    for t in range(1, k + 1):
        if n >= 2 * t and full[n - 2 * t:n - t] == full[n - t:]:
            return False
    return True


class _WindowDP:
    """Extension-count table over suffix windows for one system."""

    def __init__(self, sys: DupSystem):
        self.sys = sys
        self.width = 2 * sys.k - 1
        q, k = sys.q, sys.k
        states: list[tuple[int, ...]] = []
        index: dict[tuple[int, ...], int] = {}
        stack: list[tuple[int, ...]] = [()]
        while stack:
            w = stack.pop()
            if w in index:
                continue
            index[w] = len(states)
            states.append(w)
            if len(w) < self.width:
                for c in range(q):
                    if _append_ok(w, c, k):
                        stack.append(w + (c,))
        self.states = states
        self.index = index
        trans: list[list[int]] = []
        for w in states:
            row = []
            for c in range(q):
                if _append_ok(w, c, k):
                    nxt = w + (c,)
                    if len(nxt) > self.width:
                        nxt = nxt[1:]
                    row.append(index[nxt])
                else:
                    row.append(-1)
            trans.append(row)
        self.trans = trans
        self.layers: list[list[int]] = [[1] * len(states)]

    def ensure_layers(self, r: int) -> None:
        layers = self.layers
        while len(layers) <= r:
            prev = layers[-1]
            layers.append(
                [sum(prev[t] for t in row if t >= 0) for row in self.trans]
            )

    def window_sid(self, symbols: tuple[int, ...]) -> int:
        w = symbols if len(symbols) <= self.width else symbols[-self.width:]
        sid = self.index.get(w)
        if sid is None:
            raise DomainError(f"suffix {w} is not irreducible")
        return sid

    def count(self, sid: int, r: int) -> int:
        self.ensure_layers(r)
        return self.layers[r][sid]


_dps: dict[DupSystem, _WindowDP] = {}


def _dp(sys: DupSystem) -> _WindowDP:
    dp = _dps.get(sys)
    if dp is None:
        dp = _dps[sys] = _WindowDP(sys)
    return dp


def count_extensions(x: Word, r: int, sys: DupSystem) -> int:
    """Number of length-r words y such that x..y has no square ending in y.

    For irreducible x this is exactly the number of irreducible words of
    length len(x) + r that extend x.  Every such y is itself irreducible.
    """
    if x.q != sys.q:
        raise DomainError(f"word alphabet q={x.q} does not match system q={sys.q}")
    if r < 0:
        raise DomainError(f"extension length must be >= 0, got {r}")
    dp = _dp(sys)
    return dp.count(dp.window_sid(x.symbols), r)


def kth_extension(x: Word, r: int, j: int, sys: DupSystem) -> Word:
    """The j-th (1-indexed, lexicographic) valid length-r extension of x."""
    dp = _dp(sys)
    sid = dp.window_sid(x.symbols)
    total = dp.count(sid, r)
    if not 1 <= j <= total:
        raise DomainError(f"extension index {j} outside [1, {total}]")
    out = []
    for d in range(r):
        rem = r - d - 1
        row = dp.trans[sid]
        for c in range(sys.q):
            nxt = row[c]
            if nxt < 0:
                continue
            cnt = dp.layers[rem][nxt]
            if j <= cnt:
                out.append(c)
                sid = nxt
                break
            j -= cnt
    return Word(tuple(out), sys.q)


def extension_index(x: Word, y: Word, sys: DupSystem) -> int:
    """Position of y (1-indexed) in the lex order of valid extensions of x."""
    if y.q != sys.q:
        raise DomainError(f"word alphabet q={y.q} does not match system q={sys.q}")
    dp = _dp(sys)
    sid = dp.window_sid(x.symbols)
    r = len(y)
    dp.ensure_layers(r)
    idx = 1
    for d, c in enumerate(y.symbols):
        rem = r - d - 1
        row = dp.trans[sid]
        for smaller in range(c):
            nxt = row[smaller]
            if nxt >= 0:
                idx += dp.layers[rem][nxt]
        sid = row[c]
        if sid < 0:
            raise DomainError(
                f"{y} is not a valid extension of {x}: square ends at offset {d}"
            )
    return idx


def iter_extensions(x: Word, r: int, sys: DupSystem) -> Iterator[Word]:
    """Yield all valid length-r extensions of x in lexicographic order."""
    dp = _dp(sys)
    start = dp.window_sid(x.symbols)
    q = sys.q

    def walk(sid: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == r:
            yield prefix
            return
        row = dp.trans[sid]
        for c in range(q):
            if row[c] >= 0:
                yield from walk(row[c], prefix + (c,))

    for syms in walk(start, ()):
        yield Word(syms, sys.q)


# -------------------------------------------------------- prefix counting


def count_irr_prefix(p: Word, n: int, sys: DupSystem) -> int:
    """Number of irreducible length-n words that start with p (0 if p is not
    irreducible)."""
    if p.q != sys.q:
        raise DomainError(f"prefix alphabet q={p.q} does not match system q={sys.q}")
    if len(p) < 1:
        raise DomainError("prefix must be nonempty")
    if n < len(p):
        raise DomainError(f"target length {n} shorter than the prefix ({len(p)})")
    if not is_irreducible(p, sys.k):
        return 0
    return count_extensions(p, n - len(p), sys)


class PrefixCountTable:
    """Counts of irreducible length-n words extending one fixed prefix."""

    def __init__(self, prefix: Word, sys: DupSystem):
        if prefix.q != sys.q:
            raise DomainError("prefix alphabet does not match the system")
        if len(prefix) < 1:
            raise DomainError("prefix must be nonempty")
        self.prefix = prefix
        self.sys = sys
        self._irreducible = is_irreducible(prefix, sys.k)

    def count(self, n: int) -> int:
        if n < len(self.prefix):
            raise DomainError(
                f"target length {n} shorter than the prefix ({len(self.prefix)})"
            )
        if not self._irreducible:
            return 0
        return count_extensions(self.prefix, n - len(self.prefix), self.sys)


# ------------------------------------------------------- minimum out-degree


_delta_cache: dict[DupSystem, dict[int, int]] = {}


def _delta_bases(sys: DupSystem) -> range:
    # recursion needs the previous 2 (k=2) resp. 3 (k=3) values, starting
    # at the smallest legal state length m = 2k-1
    return range(2 * sys.k - 1, 2 * sys.k - 1 + (2 if sys.k == 2 else 3))


def delta_min_degree(m: int, sys: DupSystem) -> int:
    """Minimum over irreducible x of length m of the number of irreducible
    words x' of length m with x..x' irreducible (the encoder out-degree).

    Base values are computed exactly as a minimum of extension counts
    over suffix windows; larger m follows the same linear recursion as
    the total counts.
    """
    width = 2 * sys.k - 1
    if m < width:
        raise DomainError(f"state length must be >= {width}, got {m}")
    cache = _delta_cache.setdefault(sys, {})
    got = cache.get(m)
    if got is not None:
        return got
    bases = _delta_bases(sys)
    if m in bases or any(b not in cache for b in bases):
        dp = _dp(sys)
        dp.ensure_layers(bases[-1])
        full = [sid for sid, w in enumerate(dp.states) if len(w) == width]
        for b in bases:
            cache.setdefault(b, min(dp.layers[b][sid] for sid in full))
        if m in cache:
            return cache[m]
    q = sys.q
    top = max(b for b in cache)
    vals = {b: cache[b] for b in cache}
    for i in range(top + 1, m + 1):
        if sys.k == 2:
            vals[i] = (q - 2) * (vals[i - 1] + vals[i - 2])
        else:
            vals[i] = (q - 2) * vals[i - 1] + (q - 3) * vals[i - 2] + (q - 2) * vals[i - 3]
        cache[i] = vals[i]
    return cache[m]


def delta_closed_form(m: int, sys: DupSystem) -> Optional[int]:
    """Closed-form expressions for the base out-degree values, where known.

    Returns None when no closed form covers (m, k).  The k = 3, m = 7
    expression is known to disagree with exhaustive counting; see
    delta_closed_form_report.
    """
    q = sys.q
    if sys.k == 2:
        if m == 3:
            return q * (q - 2) ** 2
        if m == 4:
            return (q - 2) ** 2 * (q * q - q - 1)
    else:
        if m == 5:
            return (q - 2) * (q * q - 2 * q - 1) ** 2
        if m == 6:
            return (q - 1) * (q**5 - 6 * q**4 + 9 * q**3 + 4 * q**2 - 8 * q - 9)
        if m == 7:
            return (q - 2) * (q**6 - 6 * q**4 + 9 * q**3 + 4 * q**2 - 8 * q - 10 * q + 3)
    return None


def delta_closed_form_report(sys: DupSystem) -> list[dict]:
    """Compare computed base out-degrees against their closed forms."""
    report = []
    for m in _delta_bases(sys):
        computed = delta_min_degree(m, sys)
        stated = delta_closed_form(m, sys)
        report.append(
            {
                "m": m,
                "computed": computed,
                "closed_form": stated,
                "agrees": stated == computed,
            }
        )
    return report


# -------------------------------------------------------- rates and params


@dataclass(frozen=True)
class RateInfo:
    """Asymptotic data for one system: growth factor, rate, degree constant."""

    sys: DupSystem
    lam: float  # dominant growth factor of count_irr(n)
    rate: float  # log_q(lam), symbols of information per code symbol
    kappa: float  # largest constant with delta_min_degree(m) >= kappa * lam**m


def _growth_factor(sys: DupSystem) -> float:
    q = sys.q
    if sys.k == 2:
        return (q - 2 + math.sqrt(q * q - 4)) / 2
    # largest real root of x^3 - (q-2)x^2 - (q-3)x - (q-2); it lies in (1, q)
    def f(x: float) -> float:
        return ((x - (q - 2)) * x - (q - 3)) * x - (q - 2)

    lo, hi = 1.0, float(q)
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return (lo + hi) / 2


def asymptotic_rate(sys: DupSystem) -> RateInfo:
    """Growth factor of count_irr, its log_q (the code rate), and kappa."""
    lam = _growth_factor(sys)
    rate = math.log(lam) / math.log(sys.q)
    kappa = min(
        delta_min_degree(m, sys) / lam**m for m in _delta_bases(sys)
    )
    return RateInfo(sys, lam, rate, kappa)


@dataclass(frozen=True)
class FseParams:
    """Parameters of an (ell, m) finite-state encoder: read ell message
    symbols, emit one irreducible length-m state per step."""

    sys: DupSystem
    ell: int
    m: int
    epsilon: Optional[float] = None

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise DomainError(f"block length ell must be >= 1, got {self.ell}")
        if self.m < 2 * self.sys.k - 1:
            raise DomainError(
                f"state length m must be >= {2 * self.sys.k - 1}, got {self.m}"
            )


def choose_params(epsilon: float, sys: DupSystem) -> FseParams:
    """Smallest (ell, m) pair guaranteeing rate >= asymptotic rate - epsilon.

    Requires 0 < epsilon < rate.  The returned parameters satisfy
    q**ell <= delta_min_degree(m) (checked with exact integers) and
    ell/m >= rate - epsilon.
    """
    info = asymptotic_rate(sys)
    c = info.rate
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if epsilon >= c:
        raise DomainError(
            f"epsilon {epsilon} must be below the asymptotic rate {c:.6f}"
        )
    q = sys.q
    log_kappa = math.log(info.kappa) / math.log(q)  # negative
    ell = math.ceil((c - epsilon) * (c - log_kappa) / epsilon)
    m = max(math.ceil((ell - log_kappa) / c), 2 * sys.k - 1)
    # ceil on floats can land one short in principle; the exact check rules
    while q**ell > delta_min_degree(m, sys):
        m += 1
    params = FseParams(sys, ell, m, epsilon)
    if ell / m < c - epsilon:
        raise DomainError(
            f"no admissible encoder at epsilon={epsilon}: got rate {ell}/{m}"
        )
    return params
