"""Exact product-set computation: pi(S), Pi_n(S), product-one witnesses.

Two kernels back every operation:

* an order-free bitmask DP over y-exponent sums, used whenever the support
  lies in <y> (or the group is cyclic) — there every ordering gives the same
  product, so only (copies used, exponent sum) matters;
* a memoized breadth search over states (remaining-counts vector, current
  product) for the general non-abelian case, with one parent pointer per
  state (first reached wins, ties broken by canonical element order) so that
  witnesses are deterministic.

Budgets count visited states; exceeding one raises BudgetExceeded rather than
truncating — exactness is the contract.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

from .groups import Element, GroupSpec, Subgroup, format_element, mul_table, parse_element, stabilizer
from .sequences import Sequence

DEFAULT_BUDGET = 100_000_000


def default_budget() -> int:
    env = os.environ.get("ZEROSUM_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, states: int):
        super().__init__(f"search budget exceeded after {states} states; raise --budget to continue")
        self.states = states


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = limit if limit is not None else default_budget()
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


@dataclass(frozen=True)
class ProductWitness:
    """An ordered arrangement of a subsequence certifying a product value."""

    elements: tuple[Element, ...]
    product: Element

    @property
    def k(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubproductSet:
    """Pi_n(S) together with its full set stabilizer."""

    n: int
    members: frozenset[Element]
    stabilizer: Subgroup


def _is_y_supported(seq: Sequence) -> bool:
    return all(el.eps == 0 for el, _ in seq.counts)


# -- order-free DP over exponent sums -----------------------------------------


class _AdditiveDP:
    """Bounded-multiplicity subset sums over Z_m with witness reconstruction.

    dp[i][k] is the bitmask of reachable sums using k copies drawn from the
    first i support entries.
    """

    def __init__(self, pairs: list[tuple[int, int]], m: int, max_level: int, budget: _Budget):
        self.pairs = pairs  # (residue, count) in canonical order
        self.m = m
        self.max_level = max_level
        full = (1 << m) - 1
        tables = [[1] + [0] * max_level]
        dp = tables[0]
        for res, cnt in pairs:
            budget.spend(max_level + 1)
            ndp = [0] * (max_level + 1)
            for k in range(max_level + 1):
                acc = 0
                for j in range(min(cnt, k) + 1):
                    prev = dp[k - j]
                    if not prev:
                        continue
                    r = (res * j) % m
                    acc |= ((prev << r) | (prev >> (m - r))) & full if r else prev
                ndp[k] = acc
            tables.append(ndp)
            dp = ndp
        self.tables = tables

    def reachable(self, k: int) -> int:
        return self.tables[-1][k]

    def hits(self, k: int, target: int) -> bool:
        return bool(self.tables[-1][k] >> target & 1)

    def pick(self, k: int, target: int) -> list[tuple[int, int]]:
        """Copies per support index realizing the target sum at level k."""
        assert self.hits(k, target)
        out = []
        for i in range(len(self.pairs), 0, -1):
            res, cnt = self.pairs[i - 1]
            for j in range(min(cnt, k) + 1):
                want = (target - res * j) % self.m
                if self.tables[i - 1][k - j] >> want & 1:
                    if j:
                        out.append((i - 1, j))
                    k -= j
                    target = want
                    break
            else:  # pragma: no cover - contradicts hits()
                raise AssertionError("DP backtrack failed")
        out.reverse()
        return out


def _additive_dp(seq: Sequence, max_level: int, budget: _Budget) -> _AdditiveDP:
    pairs = [(el.a % seq.group.n, m) for el, m in seq.counts]
    return _AdditiveDP(pairs, seq.group.n, max_level, budget)


def _additive_witness(seq: Sequence, dp: _AdditiveDP, k: int, target_a: int) -> ProductWitness:
    support = seq.support
    picks = dp.pick(k, target_a)
    elements: list[Element] = []
    for idx, copies in picks:
        elements.extend([support[idx]] * copies)
    g = seq.group
    prod = g.identity
    for el in elements:
        prod = g.mul(prod, el)
    assert prod.a == target_a and prod.eps == 0
    return ProductWitness(tuple(elements), prod)


# -- general memoized state search ---------------------------------------------


class _Explorer:
    """Breadth search over (remaining-counts, product) states with parents."""

    def __init__(self, seq: Sequence, budget: _Budget):
        g = seq.group
        self.seq = seq
        self.group = g
        self.support = seq.support
        self.counts = tuple(m for _, m in seq.counts)
        self.table = mul_table(g)
        self.sup_idx = tuple(g.element_index(el) for el in self.support)
        self.identity_idx = g.element_index(g.identity)
        start = (self.counts, self.identity_idx)
        self.parents: dict = {start: None}
        self.levels: list[dict] = [{start: None}]
        self.budget = budget
        budget.spend()

    def run(self, max_level: int, stop: tuple[int, int] | None = None):
        """Expand levels up to max_level; optionally stop early when the
        (level, product-index) target becomes reachable."""
        while len(self.levels) - 1 < max_level:
            level = len(self.levels)
            frontier: dict = {}
            row = self.table
            for (counts, prod) in self.levels[-1]:
                prow = row[prod]
                for i, c in enumerate(counts):
                    if not c:
                        continue
                    nc = counts[:i] + (c - 1,) + counts[i + 1 :]
                    nst = (nc, prow[self.sup_idx[i]])
                    if nst not in self.parents:
                        self.budget.spend()
                        self.parents[nst] = ((counts, prod), i)
                        frontier[nst] = None
                        if stop is not None and level == stop[0] and nst[1] == stop[1]:
                            self.levels.append(frontier)
                            return
            self.levels.append(frontier)
            if not frontier:
                break

    def products_at(self, level: int) -> set[int]:
        if level >= len(self.levels):
            return set()
        return {prod for (_, prod) in self.levels[level]}

    def state_at(self, level: int, prod: int):
        for st in self.levels[level]:
            if st[1] == prod:
                return st
        return None

    def arrange(self, state) -> tuple[Element, ...]:
        path = []
        cur = state
        while self.parents[cur] is not None:
            prev, i = self.parents[cur]
            path.append(self.support[i])
            cur = prev
        path.reverse()
        return tuple(path)


def _estimate_states(seq: Sequence, cap: int) -> int:
    est = seq.group.order
    for _, m in seq.counts:
        est *= m + 1
        if est > cap:
            return cap + 1
    return est


# -- public operations -----------------------------------------------------------


def pi_set(seq: Sequence, budget: int | None = None) -> frozenset[Element]:
    """All products of the full sequence over all orderings."""
    g = seq.group
    if seq.length == 0:
        return frozenset([g.identity])
    if g.is_abelian or _is_y_supported(seq):
        eps = 0
        a = 0
        for el, m in seq.counts:
            eps ^= (el.eps * m) & 1
            a = (a + el.a * m) % g.n
        return frozenset([Element(eps, a)])
    b = _Budget(budget)
    ex = _Explorer(seq, b)
    ex.run(seq.length)
    return frozenset(g.element_at(p) for p in ex.products_at(seq.length))


def products_with_arranger(
    seq: Sequence, budget: int | None = None
) -> tuple[frozenset[Element], Callable[[Element], tuple[Element, ...]]]:
    """pi(S) plus a deterministic arranger: target -> ordered full arrangement."""
    g = seq.group
    b = _Budget(budget)
    if _is_y_supported(seq):
        total = 0
        for el, m in seq.counts:
            total = (total + el.a * m) % g.n
        members = frozenset([Element(0, total)])

        def arrange_y(target: Element) -> tuple[Element, ...]:
            if target not in members:
                raise KeyError(f"{format_element(target)} not in pi(S)")
            return tuple(seq.terms())

        return members, arrange_y

    ex = _Explorer(seq, b)
    ex.run(seq.length)
    members = frozenset(g.element_at(p) for p in ex.products_at(seq.length))

    def arrange(target: Element) -> tuple[Element, ...]:
        st = ex.state_at(seq.length, g.element_index(target))
        if st is None:
            raise KeyError(f"{format_element(target)} not in pi(S)")
        return ex.arrange(st)

    return members, arrange


def subproducts(seq: Sequence, n: int, budget: int | None = None) -> SubproductSet:
    """Pi_n(S): products over all length-n subsequences, with its stabilizer."""
    g = seq.group
    if not 0 <= n <= seq.length:
        raise ValueError(f"subproduct length {n} out of range [0, {seq.length}]")
    b = _Budget(budget)
    if n == 0:
        members = frozenset([g.identity])
    elif _is_y_supported(seq):
        dp = _additive_dp(seq, n, b)
        mask = dp.reachable(n)
        members = frozenset(Element(0, a) for a in range(g.n) if mask >> a & 1)
    else:
        ex = _Explorer(seq, b)
        ex.run(n)
        members = frozenset(g.element_at(p) for p in ex.products_at(n))
    return SubproductSet(n=n, members=members, stabilizer=stabilizer(g, members))


def has_product_one(seq: Sequence, k: int, budget: int | None = None) -> ProductWitness | None:
    """A witness that 1_G lies in Pi_k(S), or None if it does not."""
    return find_arrangement(seq, k, seq.group.identity, budget)


def find_arrangement(
    seq: Sequence, k: int, target: Element, budget: int | None = None
) -> ProductWitness | None:
    """An ordered length-k subsequence multiplying to `target`, or None."""
    g = seq.group
    g.check(target)
    if not 0 <= k <= seq.length:
        raise ValueError(f"arrangement length {k} out of range [0, {seq.length}]")
    if k == 0:
        return ProductWitness((), g.identity) if target == g.identity else None
    x_len = sum(m for el, m in seq.counts if el.eps == 1)
    if x_len == 1 and target.eps == 0:
        # products with a y-part value use an even number of x-terms, so the
        # lone x-term can never participate
        ypart = seq.y_part()
        return find_arrangement(ypart, k, target, budget) if k <= ypart.length else None
    b = _Budget(budget)
    if _is_y_supported(seq):
        if target.eps != 0:
            return None
        dp = _additive_dp(seq, k, b)
        if not dp.hits(k, target.a):
            return None
        w = _additive_witness(seq, dp, k, target.a)
    else:
        ex = _Explorer(seq, b)
        tgt = g.element_index(target)
        ex.run(k, stop=(k, tgt))
        st = ex.state_at(k, tgt)
        if st is None:
            return None
        w = ProductWitness(ex.arrange(st), target)
    if target == g.identity:
        _assert_cyclic_shifts(g, w.elements)
    return w


def product_one_lengths(seq: Sequence, budget: int | None = None) -> list[int]:
    """All k >= 1 with 1_G in Pi_k(S)."""
    g = seq.group
    b = _Budget(budget)
    out = []
    if _is_y_supported(seq):
        dp = _additive_dp(seq, seq.length, b)
        for k in range(1, seq.length + 1):
            if dp.hits(k, 0):
                out.append(k)
    else:
        ex = _Explorer(seq, b)
        ex.run(seq.length)
        ident = g.element_index(g.identity)
        for k in range(1, seq.length + 1):
            if ident in ex.products_at(k):
                out.append(k)
    return out


def _assert_cyclic_shifts(g: GroupSpec, elements: tuple[Element, ...]) -> None:
    # A product-one ordering stays product-one under every cyclic rotation.
    k = len(elements)
    for i in range(k):
        prod = g.identity
        for j in range(k):
            prod = g.mul(prod, elements[(i + j) % k])
        assert prod == g.identity, "cyclic shift of a product-one witness failed"


# -- independent verifier --------------------------------------------------------


def verify_witness(
    seq: Sequence, witness: ProductWitness, target: Element | None = None
) -> tuple[bool, str]:
    """Check a witness without any shared search machinery.

    Returns (ok, reason); reason is "ok", "not-a-subsequence", or
    "wrong-product".
    """
    g = seq.group
    target = witness.product if target is None else target
    needed: dict[Element, int] = {}
    for el in witness.elements:
        if not g.contains(el):
            return False, "not-a-subsequence"
        needed[el] = needed.get(el, 0) + 1
    for el, m in needed.items():
        if m > seq.multiplicity(el):
            return False, "not-a-subsequence"
    prod = g.identity
    for el in witness.elements:
        prod = g.mul(prod, el)
    if prod != target:
        return False, "wrong-product"
    return True, "ok"


# -- certificate lines -----------------------------------------------------------


def format_witness_line(w: ProductWitness) -> str:
    body = " ".join(format_element(el) for el in w.elements)
    return f"witness k={w.k} target={format_element(w.product)} : {body}"


def parse_witness_line(text: str, g: GroupSpec) -> ProductWitness:
    head, sep, body = text.partition(":")
    if not sep:
        raise ValueError("witness line must contain ':'")
    fields = head.split()
    if len(fields) != 3 or fields[0] != "witness":
        raise ValueError("witness line must start with 'witness k=<int> target=<element>'")
    if not fields[1].startswith("k=") or not fields[2].startswith("target="):
        raise ValueError("witness line must carry k= and target= fields")
    k = int(fields[1][2:])
    target = parse_element(fields[2][len("target="):], g)
    elements = tuple(parse_element(tok, g) for tok in body.split())
    if len(elements) != k:
        raise ValueError(f"witness claims k={k} but lists {len(elements)} elements")
    return ProductWitness(elements, target)
