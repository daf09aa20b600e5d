"""Reproduction suites: seeded end-to-end checks of every headline claim.

Each criterion function returns a CriterionResult with a stable name, a
pass/fail flag, and a short detail string; suites bundle them for the CLI.
All randomness flows from one explicit seed, and per-trial seeds are derived
by index so results are independent of worker scheduling under --jobs.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .groups import Element, GroupSpec, mk_cyclic, mk_metacyclic, format_group
from .sequences import Sequence, canonical_key
from .products import has_product_one, subproducts, verify_witness
from .bounds import dgm_check
from .constants import (
    TEMPLATE_CYCLIC,
    TEMPLATE_D6,
    TEMPLATE_METACYCLIC,
    check_template,
    classify_extremal,
    davenport_constant,
    enumerate_free,
    gao_constant,
    template_instances,
)
from .witnesses import WitnessSearchExhausted, find_big_product_one, singleton_pi_structure

D6 = mk_metacyclic(3, 2)
G30 = mk_metacyclic(15, 11)
G42 = mk_metacyclic(21, 8)  # n2 = 7: s = -1 (mod 3), s = +1 (mod 7)
DEFAULT_SEED = 42


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    lines: list[str] = field(default_factory=list)


def _parallel_map(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 4))))


# -- exact constants -------------------------------------------------------------------


def crit_gao_cyclic() -> CriterionResult:
    rows = []
    ok = True
    for n in range(2, 7):
        value = gao_constant(mk_cyclic(n)).value
        good = value == 2 * n - 1
        ok &= good
        rows.append(f"gao group=\"cyclic n={n}\" value={value} expect={2 * n - 1}")
    return CriterionResult("gao-cyclic", ok, "E(C_n) = 2n-1 for n in [2,6]", rows)


def crit_gao_d6() -> CriterionResult:
    rep = gao_constant(D6)
    rows = [f"gao group=\"{format_group(D6)}\" value={rep.value} expect=9"]
    return CriterionResult("gao-d6", rep.value == 9, "E(D6) = 9 by orbit-pruned enumeration", rows)


def crit_identity() -> CriterionResult:
    rows = []
    ok = True
    for g in [mk_cyclic(n) for n in range(2, 7)] + [D6]:
        e = gao_constant(g).value
        d = davenport_constant(g).value
        good = e == d + g.order
        ok &= good
        rows.append(f"identity group=\"{format_group(g)}\" gao={e} davenport={d} holds={str(good).lower()}")
    return CriterionResult("constant-identity", ok, "E(G) = d(G) + |G| wherever both are exact", rows)


# -- extremal classifications ------------------------------------------------------------


def crit_inverse_cyclic() -> CriterionResult:
    ok = True
    rows = []
    for n in (3, 4, 5):
        g = mk_cyclic(n)
        free = enumerate_free(g, 3 * n - 2, 2 * n, prune=False)
        free_keys = {canonical_key(s) for s in free}
        tmpl_keys = {canonical_key(s) for s in template_instances(g, TEMPLATE_CYCLIC)}
        good = free_keys == tmpl_keys
        ok &= good
        rows.append(f"inverse group=\"cyclic n={n}\" free={len(free_keys)} template={len(tmpl_keys)} equal={str(good).lower()}")
    return CriterionResult(
        "inverse-cyclic", ok, "2n-product-one-free length-(3n-2) sequences = two-block template set", rows
    )


def crit_inverse_d6() -> CriterionResult:
    fams = classify_extremal(D6, 8, 6)
    names = {f.template for f in fams}
    good_names = names == {TEMPLATE_METACYCLIC, TEMPLATE_D6}
    free_keys = set()
    for f in fams:
        for rep in f.representatives:
            from .constants import orbit_sequences

            free_keys |= {canonical_key(s) for s in orbit_sequences(rep)}
    tmpl_keys = {canonical_key(s) for s in template_instances(D6, TEMPLATE_METACYCLIC)}
    tmpl_keys |= {canonical_key(s) for s in template_instances(D6, TEMPLATE_D6)}
    good = good_names and free_keys == tmpl_keys
    rows = [
        f"inverse group=\"{format_group(D6)}\" families={','.join(sorted(names))} "
        f"free={len(free_keys)} template={len(tmpl_keys)} equal={str(good).lower()}"
    ]
    return CriterionResult("inverse-d6", good, "6-product-one-free length-8 sequences: exactly the two families", rows)


# -- the 9*n2 threshold and its extremal shapes ------------------------------------------


def _template_sequence(g: GroupSpec, n2: int, t1: int, t2: int, t3: int) -> Sequence:
    return Sequence.from_counts(
        g,
        [
            (Element(0, t1 % g.n), 6 * n2 - 1),
            (Element(0, t2 % g.n), 3 * n2 - 1),
            (Element(1, t3 % g.n), 1),
        ],
    )


def crit_lower_direction(seed: int = DEFAULT_SEED, per_group: int = 24) -> CriterionResult:
    rng = random.Random(seed)
    ok = True
    rows = []
    for g, n2 in ((G30, 5), (G42, 7)):
        n = g.n
        free_params, busy_params = [], []
        while len(free_params) < per_group or len(busy_params) < per_group:
            t1, t2, t3 = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            d = math.gcd(t1 - t2, n)
            if d == 1 and len(free_params) < per_group:
                free_params.append((t1, t2, t3))
            elif d > 1 and len(busy_params) < per_group:
                busy_params.append((t1, t2, t3))
        free_ok = 0
        for t1, t2, t3 in free_params:
            s = _template_sequence(g, n2, t1, t2, t3)
            if has_product_one(s, 6 * n2) is None:
                free_ok += 1
        busy_ok = 0
        for t1, t2, t3 in busy_params:
            s = _template_sequence(g, n2, t1, t2, t3)
            w = has_product_one(s, 6 * n2)
            if w is not None and verify_witness(s, w)[0]:
                busy_ok += 1
        good = free_ok == per_group and busy_ok == per_group
        ok &= good
        rows.append(
            f"lower group=\"{format_group(g)}\" free_confirmed={free_ok}/{per_group} "
            f"witnessed={busy_ok}/{per_group}"
        )
    return CriterionResult(
        "lower-direction", ok, "template sequences are 6n2-product-one free iff gcd(t1-t2,3n2)=1", rows
    )


def _upper_trial(args) -> tuple[bool, str]:
    seed, adversarial = args
    rng = random.Random(seed)
    els = G30.elements()
    if adversarial:
        t2 = rng.randrange(15)
        t1 = next(t for t in itertools.count(t2 + 1) if math.gcd(t - t2, 15) == 1) % 15
        terms = (
            [Element(0, t1)] * 29 + [Element(0, t2)] * 14 + [Element(1, rng.randrange(15))]
        )
        for _ in range(rng.randrange(1, 5)):
            terms[rng.randrange(len(terms))] = els[rng.randrange(len(els))]
        terms.append(els[rng.randrange(len(els))])
    else:
        terms = [els[rng.randrange(len(els))] for _ in range(45)]
    s = Sequence.from_terms(G30, terms)
    trace: list[str] = []
    try:
        w = find_big_product_one(s, trace=trace)
    except Exception as exc:  # noqa: BLE001 - tallied, not hidden
        return False, type(exc).__name__
    ok, reason = verify_witness(s, w)
    if not ok or w.k != 30:
        return False, reason
    rung = trace[-1].split("rung=")[1].split()[0]
    return True, rung


def crit_upper_sampled(
    seed: int = DEFAULT_SEED, trials: int = 1000, adversarial: int = 100, jobs: int = 1
) -> CriterionResult:
    args = [(seed * 1_000_003 + i, False) for i in range(trials)]
    args += [(seed * 2_000_003 + i, True) for i in range(adversarial)]
    results = _parallel_map(_upper_trial, args, jobs)
    failures = [r for r in results if not r[0]]
    rungs: dict[str, int] = {}
    for okflag, label in results:
        if okflag:
            rungs[label] = rungs.get(label, 0) + 1
    rows = [
        f"upper trials={trials} adversarial={adversarial} failures={len(failures)} "
        + " ".join(f"rung_{k.replace('-', '_')}={v}" for k, v in sorted(rungs.items()))
    ]
    return CriterionResult(
        "upper-sampled",
        not failures,
        f"verified 6n2-witness on all {trials}+{adversarial} seeded length-9n2 samples",
        rows,
    )


def _inverse_trial(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    els = G30.elements()
    while True:
        s = Sequence.from_terms(G30, (els[rng.randrange(len(els))] for _ in range(44)))
        if check_template(s) is None:
            break
    trace: list[str] = []
    try:
        w = find_big_product_one(s, trace=trace)
    except WitnessSearchExhausted:
        # a free non-template sequence at this length would be a brand-new
        # extremal shape; surface it loudly
        return False, "free-non-template"
    except Exception as exc:  # noqa: BLE001
        return False, type(exc).__name__
    ok, reason = verify_witness(s, w)
    if not ok or w.k != 30:
        return False, reason
    return True, trace[-1].split("rung=")[1].split()[0]


def crit_inverse_sampled(seed: int = DEFAULT_SEED, trials: int = 1000, jobs: int = 1) -> CriterionResult:
    results = _parallel_map(_inverse_trial, [seed * 3_000_017 + i for i in range(trials)], jobs)
    failures = [label for okflag, label in results if not okflag]
    rungs: dict[str, int] = {}
    for okflag, label in results:
        if okflag:
            rungs[label] = rungs.get(label, 0) + 1
    rows = [
        f"inverse-sampled trials={trials} failures={len(failures)} "
        + " ".join(f"rung_{k.replace('-', '_')}={v}" for k, v in sorted(rungs.items()))
    ]
    return CriterionResult(
        "inverse-sampled",
        not failures,
        "every non-template length-(9n2-1) sample yields a verified 6n2-witness",
        rows,
    )


# -- singleton product-set structure -----------------------------------------------------


def _structure_instance(rng: random.Random) -> tuple[Sequence, int]:
    """A length-5 sequence over G30 with singleton pi landing in a coset clause."""
    n1, n2 = 3, 5
    clause = rng.choice((1, 2))
    x_count = rng.choice((2, 4)) if clause == 1 else rng.choice((1, 3, 5))
    r = rng.randrange(n1)
    terms = [Element(1, (r + n1 * rng.randrange(n2)) % 15) for _ in range(x_count)]
    terms += [Element(0, (n1 * rng.randrange(n2)) % 15) for _ in range(n2 - x_count)]
    from .products import pi_set

    for delta in range(n2):
        cand = list(terms)
        el = cand[-1]
        cand[-1] = Element(el.eps, (el.a + n1 * delta) % 15)
        seq = Sequence.from_terms(G30, cand)
        pset = pi_set(seq)
        if len(pset) == 1 and next(iter(pset)).a % n2 == 0:
            return seq, clause
    raise AssertionError("mod-n2 adjustment must land within n2 tries")


def crit_structure(seed: int = DEFAULT_SEED, trials: int = 1000) -> CriterionResult:
    rng = random.Random(seed)
    bad = 0
    per_clause = {1: 0, 2: 0}
    for _ in range(trials):
        seq, clause = _structure_instance(rng)
        report = singleton_pi_structure(seq)
        if report.clause != clause or not report.holds:
            bad += 1
        else:
            per_clause[clause] += 1
    rows = [f"structure trials={trials} clause1={per_clause[1]} clause2={per_clause[2]} failures={bad}"]
    return CriterionResult(
        "singleton-structure", bad == 0, "coset-clause conclusions hold on all constructed singleton-pi inputs", rows
    )


# -- engine cross-checks ------------------------------------------------------------------


def _dgm_trial(seed: int) -> bool:
    rng = random.Random(seed)
    m = rng.randrange(2, 31)
    g = mk_cyclic(m)
    length = rng.randrange(1, 21)
    seq = Sequence.from_terms(g, (Element(0, rng.randrange(m)) for _ in range(length)))
    n = rng.randrange(1, length + 1)
    return dgm_check(seq, n).holds


def crit_dgm(seed: int = DEFAULT_SEED, trials: int = 10_000, jobs: int = 1) -> CriterionResult:
    results = _parallel_map(_dgm_trial, [seed * 5_000_011 + i for i in range(trials)], jobs)
    violations = results.count(False)
    rows = [f"dgm-fuzz trials={trials} violations={violations}"]
    return CriterionResult(
        "dgm-bound", violations == 0, "subproduct lower bound holds on all seeded abelian instances", rows
    )


_SMALL_GROUPS = (
    [mk_cyclic(n) for n in range(2, 11)]
    + [mk_metacyclic(3, 2), mk_metacyclic(3, 1), mk_metacyclic(4, 3), mk_metacyclic(4, 1),
       mk_metacyclic(5, 4), mk_metacyclic(5, 1)]
)


def _oracle_trial(seed: int) -> bool:
    rng = random.Random(seed)
    g = _SMALL_GROUPS[rng.randrange(len(_SMALL_GROUPS))]
    els = g.elements()
    length = rng.randrange(1, 10)
    terms = [els[rng.randrange(len(els))] for _ in range(length)]
    seq = Sequence.from_terms(g, terms)
    n = rng.randrange(0, length + 1)
    got = sorted(subproducts(seq, n).members)
    expected = set()
    for arrangement in itertools.permutations(terms, n):
        prod = g.identity
        for el in arrangement:
            prod = g.mul(prod, el)
        expected.add(prod)
    return got == sorted(expected)


def crit_oracle(seed: int = DEFAULT_SEED, trials: int = 1000, jobs: int = 1) -> CriterionResult:
    results = _parallel_map(_oracle_trial, [seed * 7_000_003 + i for i in range(trials)], jobs)
    bad = results.count(False)
    rows = [f"oracle trials={trials} mismatches={bad}"]
    return CriterionResult(
        "oracle-equivalence", bad == 0, "subproducts matches the factorial-enumeration oracle", rows
    )


# -- suites ------------------------------------------------------------------------------


def run_suite(name: str, seed: int = DEFAULT_SEED, jobs: int = 1) -> list[CriterionResult]:
    if name == "cyclic":
        return [crit_gao_cyclic(), crit_inverse_cyclic(), crit_identity()]
    if name == "d6":
        return [crit_gao_d6(), crit_inverse_d6()]
    if name == "main-theorem":
        return [
            crit_lower_direction(seed),
            crit_upper_sampled(seed, jobs=jobs),
            crit_inverse_sampled(seed, jobs=jobs),
            crit_structure(seed),
        ]
    if name == "dgm":
        return [crit_dgm(seed, jobs=jobs), crit_oracle(seed, jobs=jobs)]
    if name == "all":
        out = []
        for part in ("cyclic", "d6", "main-theorem", "dgm"):
            out.extend(run_suite(part, seed, jobs))
        return out
    raise ValueError(f"unknown suite {name!r} (choose cyclic, d6, main-theorem, dgm, all)")


SUITE_NAMES = ("cyclic", "d6", "main-theorem", "dgm", "all")
