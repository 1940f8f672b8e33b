"""Executable claim registry: structural statements checked over group universes.

Every claim pairs a statement (in the bundled STATEMENTS table) with a
machine check over a deterministic universe of GroupSpecs.  Outcomes are
pass / fail / skipped / reportOnly; failures always carry witnesses, and
re-running a claim reproduces its result bit for bit (modulo timing).
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .errors import ActionInconsistentError, BudgetExceededError, UnknownClaimError
from .catalog import GroupSpec, PowerActionSpec, build_group, standard_catalog
from .fields import is_prime
from .groups import Group, order_fingerprint, quotient_group
from .lattice import (
    Subgroup,
    all_subgroups,
    centralizer_members,
    is_subnormal,
    normal_closure_members,
    normalizer_members,
    second_maximal_subgroups,
    subgroup_product,
)
from .predicates import (
    classify_group,
    commutator_subgroup,
    derived_subgroup_members,
    fitting_height,
    fitting_subgroup,
    frattini_subgroup,
    generalized_fitting,
    is_abelian,
    is_dedekind,
    is_h_subgroup,
    is_metabelian,
    is_nc_subgroup,
    is_ne_subgroup,
    is_nilpotent,
    is_normally_embedded,
    is_on_group,
    is_p_nilpotent,
    is_pe_group,
    is_pnc_group,
    is_pronormal,
    is_solvable,
    is_supersolvable,
    is_t_group,
    p_length,
    p_part,
    pnc_witness,
    primes_of,
    satisfies_cp,
    subgroup_as_group,
    vp_valuation,
)

@dataclass
class ClaimResult:
    claim_id: str
    verdict: str  # pass | fail | skipped | reportOnly
    checked_count: int
    counterexamples: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        doc = {
            "id": self.claim_id,
            "statement": STATEMENTS[self.claim_id],
            "verdict": self.verdict,
            "checkedCount": self.checked_count,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "elapsedMs": round(self.elapsed_ms, 2) if timing else 0.0,
        }
        return doc


@dataclass
class Claim:
    id: str
    expectation: str  # mustHold | iff | reportOnly
    universe: str  # human-readable universe description
    runner: object  # callable(Budget) -> ClaimResult

    @property
    def statement(self) -> str:
        return STATEMENTS[self.id]


STATEMENTS: dict[str, str] = {
    "pnc-implies-t": "Every PNC-group is a T-group (all subnormal subgroups are normal).",
    "nilpotent-pnc-iff-dedekind": "A nilpotent group is a PNC-group exactly when it is Dedekind.",
    "solvable-pnc-supersolvable": "Solvable PNC-groups are supersolvable; the converse fails (C2^2:C4).",
    "nc-iff-commutator": "K is an NC-subgroup of G exactly when [K,G] N_G(K) = G.",
    "solvable-pnc-equivalences": "Solvable PNC-groups satisfy the solvable T-group equivalences: T-group, supersolvable, C_p for all p, pronormal p-subgroups, and all subgroups H-subgroups, normally embedded, and NE.",
    "normalizer-closure": "In a solvable PNC-group the normalizer of any subgroup has full normal closure.",
    "nilpotent-subgroups-dedekind": "Every nilpotent subgroup of a solvable PNC-group is Dedekind.",
    "min-prime-pnilpotent": "A solvable PNC-group is p-nilpotent at its minimal prime; minimality is needed (C5 x S3 is not 3-nilpotent).",
    "max-prime-order-normal": "In a solvable PNC-group, subgroups of order equal to the largest prime divisor are normal; simple PNC-groups violate the unqualified form.",
    "sylow-in-closure": "For every p-subgroup P of a solvable PNC-group, P is Sylow in its normal closure and |N_G(P)| has full p-part.",
    "fstar-class": "The generalized Fitting subgroup of a solvable PNC-group has nilpotency class at most 2; simple PNC-groups (A5) violate the unqualified form.",
    "structure-bundle": "Solvable PNC-groups have Fitting height <= 3, p-length <= 1 for every p, abelian Frattini subgroup, are metabelian, and in odd order satisfy G' <= F(G) and G' meet Z(G) = 1.",
    "component-lemma": "If G = AB with A, B normal and elementwise commuting, then G' <= A'B'.",
    "coprime-direct-product": "Direct products of PNC-groups of coprime orders are PNC; coprimality is needed (C3 x S3 is not PNC).",
    "quotient-closure": "Quotients of PNC-groups are PNC; the converse fails (D4 has all nontrivial quotients PNC).",
    "normal-subgroup-closure": "Normal subgroups of PNC-groups are PNC; normality is needed (C7 x A5 contains a non-PNC A4).",
    "central-p-lift": "For a central subgroup <x> of prime order p with |G|_p = p: G is PNC exactly when G/<x> is PNC; the hypothesis |G|_p = p is needed ((C5xC3):D4).",
    "nc-quotient-correspondence": "For N normal and N <= K: K is NC in G exactly when K/N is NC in G/N; the containment N <= K is needed (D4).",
    "nc-direct-factor": "For G = K x T and H <= K: H is NC in G exactly when H is NC in K; direct products are needed (D4:S3).",
    "gu23-remarks": "GU(2,3) contains a C2xC4-profile subgroup that is NC and subnormal in the whole group yet neither normal nor NC in an order-32 overgroup.",
    "dihedral-maximals": "The maximal subgroups of the dihedral group of order 2n are exactly the dihedral subgroups of index p (p prime dividing n) and the cyclic rotation subgroup.",
    "dihedral-iff": "The dihedral group of order 2n is PNC exactly when 4 does not divide n.",
    "dicyclic-iff": "The dicyclic group of order 4n is PNC exactly when 4 does not divide n.",
    "power-action-formulas": "In cyclic-by-cyclic power-action groups, conjugation and products follow the twist-power formulas (a^s)^w = a^s * prod (a_i^{k_i})^{1-(-t_i)^s} and the matching product rule.",
    "theorem3-valuations": "For power-action groups with acting prime larger than every kernel prime: PNC holds exactly when each v_{p_i}(t_i + 1) is 0 or alpha_i.",
    "sufficiency-hall": "If G = A : D with A an abelian normal Hall subgroup whose subgroups are all normal in G, D Dedekind, and every induced power map n on a in A has n = 1 or gcd(n-1, o(a)) = 1, then G is PNC; moreover each a in A lies in N_G(H) or H^G for every subgroup H.",
    "min-non-pe-shapes": "A non-PE-group all of whose proper subgroups are solvable PNC has at most two prime divisors and matches one of six structural shapes (D4, modular p-group, Heisenberg-type p-group, supersolvable PQ with q^2 kernel, minimal non-abelian PQ / SL(2,3), irreducible Frobenius PQ).",
    "min-non-pe-proper-on": "A non-PE-group all of whose proper subgroups are ON-groups matches one of six structural shapes (minimal non-abelian PQ, modular p-group, Heisenberg-type p-group, irreducible Frobenius PQ, central-extension PQ, SL(2,3)).",
    "on-characterization": "G is an ON-group exactly when G is Dedekind or G has all but one Sylow subgroup normal abelian, the remaining Sylow cyclic and self-normalizing with <x^p> equal to the p-core, acting on the normal part by fixed-point-free-power maps.",
    "maximal-pnc-dichotomy": "A group whose maximal subgroups are all solvable PNC is 2-nilpotent or minimal non-abelian of order q^m 2^n; SL(2,3) violates the stated dichotomy.",
    "simple-second-maximal": "The second maximal subgroups of PSL(2,4), PSL(2,5), PSL(2,8) are all solvable PNC; PSL(2,7) has a second maximal subgroup that is not PNC.",
    "nonsolvable-second-maximal": "All second maximal subgroups of SL(2,5) are solvable PNC.",
    "sn-probe": "PNC status of the symmetric groups S3..S7 (exploratory; S4 is the known failure).",
    "c3-semi-d4-remark": "The claimed C3-by-D4 semidirect counterexample cannot exist: D4 has no order-3 automorphism, and C3 x D4 contains no S3.",
    "self-normalizer-probe": "Probe for the garbled self-normalizer observation: reports, per solvable PNC-group, whether some subgroup has proper normalizer and whether the group is Dedekind.",
}


# --- helpers ----------------------------------------------------------------------


def _spec_str(spec: GroupSpec) -> str:
    return spec.to_string()


def _catalog_members(budget: Budget, max_order: int | None = None):
    members, skipped = [], []
    for spec in standard_catalog():
        try:
            g = build_group(spec, budget)
        except BudgetExceededError as e:
            skipped.append({"group": _spec_str(spec), "reason": str(e)})
            continue
        if max_order is not None and g.order > max_order:
            continue
        members.append((spec, g))
    return members, skipped


def _guarded(skipped: list, spec: GroupSpec, fn):
    """Run fn, converting budget blowups into a skip entry; returns None when skipped."""
    try:
        return fn()
    except BudgetExceededError as e:
        skipped.append({"group": _spec_str(spec), "reason": str(e)})
        return None


def _solvable_pnc_members(budget: Budget):
    members, skipped = _catalog_members(budget)
    out = []
    for spec, g in members:
        ok = _guarded(skipped, spec, lambda: is_solvable(g) and is_pnc_group(g, budget))
        if ok:
            out.append((spec, g))
    return out, skipped


def _witness(spec: GroupSpec, sub: Subgroup | None = None, detail: str | None = None) -> dict:
    doc: dict = {"group": _spec_str(spec)}
    if sub is not None:
        doc["subgroup"] = [int(x) for x in sub.members]
    if detail:
        doc["detail"] = detail
    return doc


def _iff_result(claim_id, instances, skipped, notes):
    """instances: list of (witness_dict, lhs, rhs).  Checks both directions."""
    counterexamples = [w for w, lhs, rhs in instances if lhs != rhs]
    sides = {lhs for _, lhs, _ in instances}
    notes = list(notes)
    if counterexamples:
        return ClaimResult(claim_id, "fail", len(instances), counterexamples, skipped, notes)
    if len(sides) < 2:
        only = sides.pop() if sides else None
        notes.append(f"VacuousSide: every instance falls on the {only} side of the biconditional")
        return ClaimResult(claim_id, "skipped", len(instances), [], skipped, notes)
    return ClaimResult(claim_id, "pass", len(instances), [], skipped, notes)


def _must_hold_result(claim_id, checked, counterexamples, skipped, notes):
    verdict = "fail" if counterexamples else "pass"
    return ClaimResult(claim_id, verdict, checked, counterexamples, skipped, list(notes))


_PROFILE_CACHE: dict[str, tuple] = {}


def _reference_profile(spec_text: str) -> tuple:
    key = _PROFILE_CACHE.get(spec_text)
    if key is None:
        from .catalog import parse_spec

        key = order_fingerprint(build_group(parse_spec(spec_text))).key()
        _PROFILE_CACHE[spec_text] = key
    return key


def _profile_key(g: Group, members=None) -> tuple:
    return order_fingerprint(g, members).key()


def _ref_group(spec_text: str) -> Group:
    from .catalog import parse_spec

    return build_group(parse_spec(spec_text))


# --- structural shape checks -------------------------------------------------------


def _sylow_rep(g: Group, budget: Budget, p: int) -> Subgroup:
    lat = all_subgroups(g, budget)
    target = p_part(g.order, p)
    return next(s for s in lat.subgroups if s.order == target)


def _is_cyclic_members(g: Group, members) -> bool:
    return bool((g.element_orders()[members] == len(members)).any())


def _is_elementary_abelian_members(g: Group, members) -> bool:
    members = np.asarray(members, dtype=np.intp)
    block = g.mul[np.ix_(members, members)]
    if not np.array_equal(block, block.T):
        return False
    orders = g.element_orders()[members]
    ps = primes_of(len(members))
    return len(ps) == 1 and bool((orders[orders > 1] == ps[0]).all())


def _sylow_normal(g: Group, budget: Budget, p: int) -> Subgroup | None:
    lat = all_subgroups(g, budget)
    target = p_part(g.order, p)
    for i, s in enumerate(lat.subgroups):
        if s.order == target and lat.normal[i]:
            return s
    return None


def _all_maximals_satisfy(g: Group, budget: Budget, pred) -> bool:
    lat = all_subgroups(g, budget)
    return all(pred(subgroup_as_group(g, m)) for m in lat.maximal_subgroups())


def _minimal_non_abelian(g: Group, budget: Budget) -> bool:
    return not is_abelian(g) and _all_maximals_satisfy(g, budget, is_abelian)


def shape_heisenberg(g: Group, budget: Budget) -> bool:
    ps = primes_of(g.order)
    if len(ps) != 1:
        return False
    p = ps[0]
    n = vp_valuation(g.order, p) - 2
    if n < 1:
        return False
    return _profile_key(g) == _reference_profile(f"HeisenbergLike({p},{n})")


def shape_modular(g: Group, budget: Budget) -> bool:
    ps = primes_of(g.order)
    if len(ps) != 1 or ps[0] == 2:
        return False
    p = ps[0]
    n = vp_valuation(g.order, p) - 1
    if n < 2:
        return False
    return _profile_key(g) == _reference_profile(f"Modular({p},{n})")


def shape_d4(g: Group, budget: Budget) -> bool:
    return _profile_key(g) == _reference_profile("Dihedral(4)")


def shape_sl23(g: Group, budget: Budget) -> bool:
    return _profile_key(g) == _reference_profile("SL2(3)")


def shape_minimal_nonabelian_pq(g: Group, budget: Budget, force_p2: bool = False) -> bool:
    """Minimal non-abelian with a normal elementary abelian Sylow and a cyclic one."""
    ps = primes_of(g.order)
    if len(ps) != 2:
        return False
    if not _minimal_non_abelian(g, budget):
        return False
    for p in ps:
        q = next(r for r in ps if r != p)
        if force_p2 and p != 2:
            continue
        normal_sylow = _sylow_normal(g, budget, p)
        if normal_sylow is None or not _is_elementary_abelian_members(g, normal_sylow.members):
            continue
        if _is_cyclic_members(g, _sylow_rep(g, budget, q).members):
            return True
    return False


def shape_supersolvable_pq(g: Group, budget: Budget) -> bool:
    """Supersolvable PQ: cyclic Sylow p, elementary abelian Sylow q of order q^2, O_q != 1."""
    ps = primes_of(g.order)
    if len(ps) != 2:
        return False
    p, q = ps  # p < q
    if not is_supersolvable(g, budget):
        return False
    if vp_valuation(g.order, q) != 2:
        return False
    if not _is_cyclic_members(g, _sylow_rep(g, budget, p).members):
        return False
    if not _is_elementary_abelian_members(g, _sylow_rep(g, budget, q).members):
        return False
    from .predicates import p_core_members

    return p_core_members(g, q, budget).size > 1


def shape_irreducible_frobenius(g: Group, budget: Budget) -> bool:
    """Minimal non-supersolvable PQ: normal elementary abelian Sylow q of order > q,
    cyclic Sylow p (p < q) acting irreducibly."""
    ps = primes_of(g.order)
    if len(ps) != 2:
        return False
    p, q = ps
    if is_supersolvable(g, budget) or not _all_maximals_satisfy(
        g, budget, lambda m: is_supersolvable(m, budget)
    ):
        return False
    sylow_q = _sylow_normal(g, budget, q)
    if sylow_q is None or sylow_q.order <= q:
        return False
    if not _is_elementary_abelian_members(g, sylow_q.members):
        return False
    if not _is_cyclic_members(g, _sylow_rep(g, budget, p).members):
        return False
    # irreducible: no proper nontrivial normal subgroup inside the q-kernel
    lat = all_subgroups(g, budget)
    for i, s in enumerate(lat.subgroups):
        if lat.normal[i] and 1 < s.order < sylow_q.order and sylow_q.mask()[s.members].all():
            return False
    return True


def shape_central_extension_pq(g: Group, budget: Budget) -> bool:
    """Order p^2 q^n with p > q: normal elementary abelian p^2, cyclic Sylow q,
    derived subgroup of order p, center of order p q^(n-1)."""
    ps = primes_of(g.order)
    if len(ps) != 2:
        return False
    q, p = ps  # q < p
    if vp_valuation(g.order, p) != 2:
        return False
    n = vp_valuation(g.order, q)
    sylow_p = _sylow_normal(g, budget, p)
    if sylow_p is None or not _is_elementary_abelian_members(g, sylow_p.members):
        return False
    if not _is_cyclic_members(g, _sylow_rep(g, budget, q).members):
        return False
    if derived_subgroup_members(g).size != p:
        return False
    return centralizer_members(g, np.arange(g.order)).size == p * q ** (n - 1)


THM1_SHAPES = [
    ("D4", shape_d4),
    ("modular", shape_modular),
    ("heisenberg", shape_heisenberg),
    ("supersolvable-pq", shape_supersolvable_pq),
    ("minimal-nonabelian-pq", shape_minimal_nonabelian_pq),
    ("sl23", shape_sl23),
    ("irreducible-frobenius", shape_irreducible_frobenius),
]

THM2_SHAPES = [
    ("minimal-nonabelian-pq", shape_minimal_nonabelian_pq),
    ("modular", shape_modular),
    ("heisenberg", shape_heisenberg),
    ("irreducible-frobenius", shape_irreducible_frobenius),
    ("central-extension-pq", shape_central_extension_pq),
    ("sl23", shape_sl23),
]


def on_structural(g: Group, budget: Budget) -> bool:
    """Structural side of the ON characterization (non-Dedekind branch)."""
    if g.order == 1:
        return False
    conj = g.conj_table()
    orders = g.element_orders()
    for p in primes_of(g.order):
        sylow = _sylow_rep(g, budget, p)
        if not _is_cyclic_members(g, sylow.members):
            continue
        if normalizer_members(g, sylow.members).size != sylow.order:
            continue
        other_sylows = []
        ok = True
        for q in primes_of(g.order):
            if q == p:
                continue
            nq = _sylow_normal(g, budget, q)
            if nq is None or not is_abelian(subgroup_as_group(g, nq)):
                ok = False
                break
            other_sylows.append(nq)
        if not ok:
            continue
        # generator of the cyclic Sylow, and <x^p> = O_p(G)
        x = int(sylow.members[np.argmax(orders[sylow.members] == sylow.order)])
        xp = g.power(x, p)
        from .groups import close_under_product
        from .predicates import p_core_members

        xp_gen = close_under_product(g.mul, np.array([0, xp], dtype=np.intp), cutoff_to_full=False)
        if not np.array_equal(xp_gen, p_core_members(g, p, budget)):
            continue
        h1 = np.array([0], dtype=np.intp)
        for nq in other_sylows:
            h1 = close_under_product(g.mul, np.union1d(h1, nq.members), cutoff_to_full=False)
        good = True
        for w in h1:
            if w == 0:
                continue
            image = int(conj[g.inv[x], w])  # w^x
            powers = {}
            cur, e = 0, 0
            ow = int(orders[w])
            for e in range(ow):
                powers[cur] = e
                cur = int(g.mul[cur, w])
            m = powers.get(image)
            if m is None or math.gcd(m, ow) != 1 or math.gcd(m - 1, ow) != 1:
                good = False
                break
        if good:
            return True
    return False


# --- claim runners ------------------------------------------------------------------


def _run_pnc_implies_t(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        res = _guarded(skipped, spec, lambda: (is_pnc_group(g, budget), None))
        if res is None:
            continue
        checked += 1
        if res[0] and not is_t_group(g, budget):
            counterexamples.append(_witness(spec, detail="PNC but not a T-group"))
    return _must_hold_result("pnc-implies-t", checked, counterexamples, skipped, [])


def _run_nilpotent_pnc_iff_dedekind(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    instances = []
    for spec, g in members:
        data = _guarded(
            skipped,
            spec,
            lambda: (is_nilpotent(g, budget)[0], is_pnc_group(g, budget), is_dedekind(g, budget)),
        )
        if data is None or not data[0]:
            continue
        instances.append((_witness(spec), data[1], data[2]))
    return _iff_result("nilpotent-pnc-iff-dedekind", instances, skipped, [])


def _run_solvable_pnc_supersolvable(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        data = _guarded(
            skipped, spec, lambda: (is_solvable(g), is_pnc_group(g, budget), is_supersolvable(g, budget))
        )
        if data is None:
            continue
        solvable, pnc, ss = data
        if solvable and pnc:
            checked += 1
            if not ss:
                counterexamples.append(_witness(spec, detail="solvable PNC but not supersolvable"))
    converse = build_group(GroupSpec("C2sqSemiC4"), budget)
    if is_supersolvable(converse, budget) and not is_pnc_group(converse, budget):
        notes.append("converse fails: C2sqSemiC4 is supersolvable and not PNC")
    else:
        counterexamples.append(
            _witness(GroupSpec("C2sqSemiC4"), detail="expected supersolvable non-PNC witness")
        )
    return _must_hold_result("solvable-pnc-supersolvable", checked + 1, counterexamples, skipped, notes)


def _run_nc_iff_commutator(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    instances = []
    for spec, g in members:
        lat = _guarded(skipped, spec, lambda: all_subgroups(g, budget))
        if lat is None:
            continue
        whole = Subgroup(g, np.arange(g.order))
        for rep in lat.class_representatives():
            lhs = is_nc_subgroup(g, rep)
            comm = commutator_subgroup(g, rep, whole)
            norm = Subgroup(g, normalizer_members(g, rep.members))
            _, rhs = subgroup_product(g, comm, norm)
            instances.append((_witness(spec, rep), lhs, rhs))
    return _iff_result("nc-iff-commutator", instances, skipped, [])


_EQUIV_ITEMS = ("t-group", "supersolvable", "cp-all-p", "pronormal-p-subgroups",
                "h-subgroups", "normally-embedded", "ne-subgroups")


def _run_solvable_pnc_equivalences(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        checked += 1
        lat = all_subgroups(g, budget)
        reps = lat.class_representatives()
        failures = []
        if not is_t_group(g, budget):
            failures.append("t-group")
        if not is_supersolvable(g, budget):
            failures.append("supersolvable")
        if not all(satisfies_cp(g, p, budget) for p in primes_of(g.order)):
            failures.append("cp-all-p")
        p_subgroups = [r for r in reps if len(primes_of(r.order)) == 1]
        if not all(is_pronormal(g, r) for r in p_subgroups):
            failures.append("pronormal-p-subgroups")
        if not all(is_h_subgroup(g, r) for r in reps):
            failures.append("h-subgroups")
        if not all(is_normally_embedded(g, r, budget) for r in reps):
            failures.append("normally-embedded")
        if not all(is_ne_subgroup(g, r) for r in reps):
            failures.append("ne-subgroups")
        if failures:
            counterexamples.append(_witness(spec, detail="failed items: " + ", ".join(failures)))
    notes = [f"items checked per group: {', '.join(_EQUIV_ITEMS)}"]
    return _must_hold_result("solvable-pnc-equivalences", checked, counterexamples, skipped, notes)


def _run_normalizer_closure(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        checked += 1
        lat = all_subgroups(g, budget)
        for rep in lat.class_representatives():
            norm = normalizer_members(g, rep.members)
            if normal_closure_members(g, norm).size != g.order:
                counterexamples.append(_witness(spec, rep, "normalizer has proper normal closure"))
                break
    return _must_hold_result("normalizer-closure", checked, counterexamples, skipped, [])


def _run_nilpotent_subgroups_dedekind(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        checked += 1
        lat = all_subgroups(g, budget)
        for rep in lat.class_representatives():
            child = subgroup_as_group(g, rep)
            if is_nilpotent(child, budget)[0] and not is_dedekind(child, budget):
                counterexamples.append(_witness(spec, rep, "nilpotent subgroup is not Dedekind"))
                break
    return _must_hold_result("nilpotent-subgroups-dedekind", checked, counterexamples, skipped, [])


def _run_min_prime_pnilpotent(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        if g.order == 1:
            continue
        checked += 1
        p = min(primes_of(g.order))
        if not is_p_nilpotent(g, p, budget):
            counterexamples.append(_witness(spec, detail=f"not {p}-nilpotent at minimal prime"))
    probe = build_group(GroupSpec("Direct", (GroupSpec("Cyclic", (5,)), GroupSpec("Sym", (3,)))), budget)
    if is_pnc_group(probe, budget) and not is_p_nilpotent(probe, 3, budget) and is_p_nilpotent(probe, 2, budget):
        notes.append("minimality needed: C5 x S3 is PNC, 2-nilpotent, and not 3-nilpotent")
    else:
        counterexamples.append(_witness(GroupSpec("Direct", (GroupSpec("Cyclic", (5,)), GroupSpec("Sym", (3,)))),
                                        detail="expected non-minimal-prime failure did not reproduce"))
    return _must_hold_result("min-prime-pnilpotent", checked + 1, counterexamples, skipped, notes)


def _run_max_prime_order_normal(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        if g.order == 1:
            continue
        data = _guarded(skipped, spec, lambda: (is_pnc_group(g, budget), is_solvable(g)))
        if data is None or not data[0]:
            continue
        pnc, solvable = data
        p = max(primes_of(g.order))
        lat = all_subgroups(g, budget)
        bad = [
            s for i, s in enumerate(lat.subgroups) if s.order == p and not lat.normal[i]
        ]
        if solvable:
            checked += 1
            if bad:
                counterexamples.append(_witness(spec, bad[0], f"order-{p} subgroup not normal"))
        elif bad:
            notes.append(
                f"unqualified form refuted on non-solvable PNC member {_spec_str(spec)}: "
                f"order-{p} subgroup not normal"
            )
    return _must_hold_result("max-prime-order-normal", checked, counterexamples, skipped, notes)


def _run_sylow_in_closure(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        checked += 1
        lat = all_subgroups(g, budget)
        for rep in lat.class_representatives():
            ps = primes_of(rep.order)
            if len(ps) != 1:
                continue
            p = ps[0]
            closure = normal_closure_members(g, rep.members)
            if p_part(closure.size, p) != rep.order:
                counterexamples.append(_witness(spec, rep, "not Sylow in its normal closure"))
                break
            norm = normalizer_members(g, rep.members)
            if p_part(norm.size, p) != p_part(g.order, p):
                counterexamples.append(_witness(spec, rep, "normalizer misses full p-part"))
                break
    return _must_hold_result("sylow-in-closure", checked, counterexamples, skipped, [])


def _run_fstar_class(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        data = _guarded(skipped, spec, lambda: (is_pnc_group(g, budget), is_solvable(g)))
        if data is None or not data[0]:
            continue
        _, solvable = data
        comps, layer, fstar, klass = generalized_fitting(g, budget)
        if solvable:
            checked += 1
            if klass is None or klass > 2:
                counterexamples.append(
                    _witness(spec, fstar, f"F* nilpotency class {klass}")
                )
        else:
            shown = "not nilpotent" if klass is None else f"class {klass}"
            notes.append(
                f"non-solvable PNC member {_spec_str(spec)}: |F*| = {fstar.order}, {shown}"
            )
    return _must_hold_result("fstar-class", checked, counterexamples, skipped, notes)


def _run_structure_bundle(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    counterexamples, checked = [], 0
    for spec, g in members:
        checked += 1
        failures = []
        if fitting_height(g, budget) > 3:
            failures.append("fitting-height")
        if any(p_length(g, p, budget) > 1 for p in primes_of(g.order)):
            failures.append("p-length")
        frat = frattini_subgroup(g, budget)
        if not is_abelian(subgroup_as_group(g, frat)):
            failures.append("frattini-abelian")
        if not is_metabelian(g):
            failures.append("metabelian")
        if g.order % 2 == 1:
            derived = derived_subgroup_members(g)
            fit = fitting_subgroup(g, budget)
            if not np.isin(derived, fit.members, assume_unique=True).all():
                failures.append("odd-derived-in-fitting")
            centre = centralizer_members(g, np.arange(g.order))
            if np.intersect1d(derived, centre, assume_unique=True).size != 1:
                failures.append("odd-derived-meets-center")
        if failures:
            counterexamples.append(_witness(spec, detail="failed: " + ", ".join(failures)))
    return _must_hold_result("structure-bundle", checked, counterexamples, skipped, [])


def _run_component_lemma(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    counterexamples, checked = [], 0
    for spec, g in members:
        lat = _guarded(skipped, spec, lambda: all_subgroups(g, budget))
        if lat is None:
            continue
        normals = lat.normal_subgroups()
        for a, b in itertools.combinations(normals, 2):
            prod_size, _ = subgroup_product(g, a, b)
            if prod_size != g.order:
                continue
            block = g.mul[np.ix_(a.members, b.members)]
            blockT = g.mul[np.ix_(b.members, a.members)]
            if not np.array_equal(block, blockT.T):
                continue  # factors must commute elementwise
            checked += 1
            derived_g = derived_subgroup_members(g)
            da = commutator_subgroup(g, a, a)
            db = commutator_subgroup(g, b, b)
            from .groups import close_under_product

            rhs = close_under_product(g.mul, np.union1d(da.members, db.members), cutoff_to_full=False)
            if not np.isin(derived_g, rhs, assume_unique=True).all():
                counterexamples.append(
                    _witness(spec, detail=f"G' (size {derived_g.size}) escapes A'B' (size {rhs.size})")
                )
    return _must_hold_result("component-lemma", checked, counterexamples, skipped, [])


def _run_coprime_direct_product(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    pool = []
    for spec, g in members:
        ok = _guarded(skipped, spec, lambda: is_pnc_group(g, budget))
        if ok and g.order > 1:
            pool.append((spec, g))
    rng = random.Random(0x5EED)
    coprime_pairs = [
        (a, b)
        for a, b in itertools.combinations(pool, 2)
        if math.gcd(a[1].order, b[1].order) == 1 and a[1].order * b[1].order <= budget.order_cap
    ]
    rng.shuffle(coprime_pairs)
    sample = coprime_pairs[:20]
    counterexamples, checked, notes = [], 0, []
    from .groups import direct_product

    for (spec_a, ga), (spec_b, gb) in sample:
        checked += 1
        prod = direct_product(ga, gb, budget)
        if not is_pnc_group(prod, budget):
            counterexamples.append(
                {"group": f"Direct({_spec_str(spec_a)},{_spec_str(spec_b)})", "detail": "coprime product not PNC"}
            )
    probe_spec = GroupSpec("Direct", (GroupSpec("Cyclic", (3,)), GroupSpec("Sym", (3,))))
    probe = build_group(probe_spec, budget)
    if not is_pnc_group(probe, budget):
        notes.append("coprimality needed: C3 x S3 (non-coprime factors, both PNC) is not PNC")
    else:
        counterexamples.append(_witness(probe_spec, detail="expected non-PNC for non-coprime product"))
    notes.append(f"sampled {len(sample)} coprime PNC pairs (seeded shuffle)")
    return _must_hold_result("coprime-direct-product", checked + 1, counterexamples, skipped, notes)


def _run_quotient_closure(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        data = _guarded(skipped, spec, lambda: is_pnc_group(g, budget))
        if not data:
            continue
        lat = all_subgroups(g, budget)
        for n in lat.normal_subgroups():
            if n.order in (1, g.order):
                continue
            checked += 1
            q, _ = quotient_group(g, n.members, budget)
            if not is_pnc_group(q, budget):
                counterexamples.append(_witness(spec, n, "PNC group with non-PNC quotient"))
    d4 = build_group(GroupSpec("Dihedral", (4,)), budget)
    lat = all_subgroups(d4, budget)
    quotients_pnc = all(
        is_pnc_group(quotient_group(d4, n.members, budget)[0], budget)
        for n in lat.normal_subgroups()
        if n.order > 1
    )
    if quotients_pnc and not is_pnc_group(d4, budget):
        notes.append("converse fails: D4 is not PNC while all nontrivial quotients are PNC")
    else:
        counterexamples.append(_witness(GroupSpec("Dihedral", (4,)), detail="expected converse witness"))
    return _must_hold_result("quotient-closure", checked + 1, counterexamples, skipped, notes)


def _run_normal_subgroup_closure(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    counterexamples, checked, notes = [], 0, []
    for spec, g in members:
        data = _guarded(skipped, spec, lambda: is_pnc_group(g, budget))
        if not data:
            continue
        lat = all_subgroups(g, budget)
        for n in lat.normal_subgroups():
            checked += 1
            child = subgroup_as_group(g, n)
            if not is_pnc_group(child, budget):
                counterexamples.append(_witness(spec, n, "normal subgroup of PNC group not PNC"))
    big_spec = GroupSpec("Direct", (GroupSpec("Cyclic", (7,)), GroupSpec("Alt", (5,))))
    big = _guarded(skipped, big_spec, lambda: build_group(big_spec, budget))
    if big is not None:
        a4_key = _reference_profile("Alt(4)")
        lat = all_subgroups(big, budget)
        witness = next(
            (s for s in lat.subgroups if s.order == 12 and _profile_key(big, s.members) == a4_key),
            None,
        )
        if (
            witness is not None
            and is_pnc_group(big, budget)
            and not is_pnc_group(subgroup_as_group(big, witness), budget)
        ):
            notes.append("normality needed: C7 x A5 is PNC with a non-PNC subgroup of A4 type")
        else:
            counterexamples.append(_witness(big_spec, detail="expected non-normal A4 witness"))
    return _must_hold_result("normal-subgroup-closure", checked, counterexamples, skipped, notes)


def _central_p_instances(budget: Budget):
    """(spec, g, x) with <x> central of prime order p and |G|_p = p."""
    members, skipped = _catalog_members(budget, max_order=500)
    out = []
    for spec, g in members:
        centre = _guarded(skipped, spec, lambda: centralizer_members(g, np.arange(g.order)))
        if centre is None:
            continue
        orders = g.element_orders()
        seen_p = set()
        for x in centre:
            o = int(orders[x])
            if is_prime(o) and p_part(g.order, o) == o and o not in seen_p:
                seen_p.add(o)
                out.append((spec, g, int(x)))
    return out, skipped


def _run_central_p_lift(budget: Budget) -> ClaimResult:
    instances, skipped = _central_p_instances(budget)
    notes = []
    data = []
    for spec, g, x in instances:
        members = np.unique(np.concatenate([[0], [x]]))
        from .groups import close_under_product

        gen = close_under_product(g.mul, members, cutoff_to_full=False)
        q, _ = quotient_group(g, gen, budget)
        lhs = is_pnc_group(g, budget)
        rhs = is_pnc_group(q, budget)
        data.append((_witness(spec, detail=f"x index {x}, p = {gen.size}"), lhs, rhs))
    probe_spec = GroupSpec("C5xC3SemiD4")
    probe = build_group(probe_spec, budget)
    centre = centralizer_members(probe, np.arange(probe.order))
    orders = probe.element_orders()
    x = int(centre[np.argmax(orders[centre] == 2)])
    from .groups import close_under_product

    gen = close_under_product(probe.mul, np.array([0, x], dtype=np.intp), cutoff_to_full=False)
    q, _ = quotient_group(probe, gen, budget)
    if (not is_pnc_group(probe, budget)) and is_pnc_group(q, budget) and p_part(probe.order, 2) > 2:
        notes.append(
            "|G|_p = p needed: (C5xC3):D4 has central C2 with |G|_2 = 8, quotient PNC, group not PNC"
        )
        result = _iff_result("central-p-lift", data, skipped, notes)
    else:
        result = ClaimResult(
            "central-p-lift",
            "fail",
            len(data),
            [_witness(probe_spec, detail="expected hypothesis-violation witness")],
            skipped,
            notes,
        )
    return result


def _run_nc_quotient_correspondence(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=60)
    instances, notes = [], []
    for spec, g in members:
        lat = _guarded(skipped, spec, lambda: all_subgroups(g, budget))
        if lat is None:
            continue
        for n in lat.normal_subgroups():
            if n.order in (1, g.order):
                continue
            q, hom = quotient_group(g, n.members, budget)
            hom_map = np.asarray(hom.map, dtype=np.intp)
            for k in lat.subgroups:
                if k.order <= n.order or not np.isin(n.members, k.members, assume_unique=True).all():
                    continue
                lhs = is_nc_subgroup(g, k)
                image = Subgroup(q, np.unique(hom_map[k.members]))
                rhs = is_nc_subgroup(q, image)
                instances.append((_witness(spec, k, f"mod normal of order {n.order}"), lhs, rhs))
    # containment is needed: in D4 pick K of order 2 outside N with K N / N still NC
    d4 = build_group(GroupSpec("Dihedral", (4,)), budget)
    lat = all_subgroups(d4, budget)
    found_probe = False
    for n in lat.normal_subgroups():
        if n.order != 4:
            continue
        for k in lat.subgroups:
            if k.order != 2 or np.isin(k.members, n.members).all():
                continue
            if np.intersect1d(k.members, n.members).size != 1:
                continue
            if is_nc_subgroup(d4, k):
                continue
            q, hom = quotient_group(d4, n.members, budget)
            image = Subgroup(q, np.unique(np.asarray(hom.map)[k.members]))
            if is_nc_subgroup(q, image):
                found_probe = True
    if found_probe:
        notes.append("containment needed: D4 has K of order 2, not NC, whose image mod a disjoint C2^2 is NC")
        return _iff_result("nc-quotient-correspondence", instances, skipped, notes)
    return ClaimResult(
        "nc-quotient-correspondence",
        "fail",
        len(instances),
        [_witness(GroupSpec("Dihedral", (4,)), detail="expected containment-violation witness")],
        skipped,
        notes,
    )


def _run_nc_direct_factor(budget: Budget) -> ClaimResult:
    instances, skipped, notes = [], [], []
    for spec in standard_catalog():
        if spec.constructor != "Direct" or len(spec.params) != 2:
            continue
        g = _guarded(skipped, spec, lambda: build_group(spec, budget))
        if g is None or g.order > 500:
            continue
        left = build_group(spec.params[0], budget)
        right = build_group(spec.params[1], budget)
        # subgroups of the left factor sit at indices k * |right|, of the right at their own indices
        for factor, embed in ((left, lambda m: m * right.order), (right, lambda m: m)):
            for rep in all_subgroups(factor, budget).class_representatives():
                embedded = Subgroup(g, embed(rep.members))
                lhs = is_nc_subgroup(g, embedded)
                rhs = is_nc_subgroup(factor, rep)
                instances.append((_witness(spec, embedded, "factor subgroup"), lhs, rhs))
    # semidirect products are excluded for a reason: D4:S3
    probe_spec = GroupSpec("D4SemiS3")
    g = build_group(probe_spec, budget)
    s3_order = 6
    d4_members = np.arange(8, dtype=np.intp) * s3_order  # the D4 factor
    c22_key = _reference_profile("ElementaryAbelian(2,2)")
    lat = all_subgroups(g, budget)
    probe_ok = False
    for s in lat.subgroups:
        if s.order != 4 or not np.isin(s.members, d4_members).all():
            continue
        if _profile_key(g, s.members) != c22_key:
            continue
        in_d4 = normal_closure_members(g, s.members, within=d4_members)
        norm_in_d4 = np.intersect1d(normalizer_members(g, s.members), d4_members)
        nc_in_d4 = np.unique(g.mul[np.ix_(in_d4, norm_in_d4)]).size == 8
        if nc_in_d4 and not is_nc_subgroup(g, s):
            probe_ok = True
            break
    if probe_ok:
        notes.append("semidirect fails: D4:S3 has a C2^2 that is NC in the D4 factor but not NC in G")
        return _iff_result("nc-direct-factor", instances, skipped, notes)
    return ClaimResult(
        "nc-direct-factor",
        "fail",
        len(instances),
        [_witness(probe_spec, detail="expected semidirect witness")],
        skipped,
        notes,
    )


def _run_gu23_remarks(budget: Budget) -> ClaimResult:
    spec = GroupSpec("GU2_3")
    g = build_group(spec, budget)
    lat = all_subgroups(g, budget)
    conj = g.conj_table()
    c2xc4 = _reference_profile("Direct(Cyclic(2),Cyclic(4))")
    notes, counterexamples = [], []
    sylows = [s for s in lat.subgroups if s.order == 32]
    wr_key = _profile_key(_wreath_c4_c2(budget))
    if all(_profile_key(g, s.members) == wr_key for s in sylows):
        notes.append("all order-32 Sylow subgroups carry the C4 wr C2 profile")
    cp_key = _profile_key(_central_product_c4_d4(budget))
    c4sq_key = _reference_profile("Direct(Cyclic(4),Cyclic(4))")
    witnesses, near = [], []
    for s in lat.subgroups:
        if s.order != 8 or _profile_key(g, s.members) != c2xc4:
            continue
        nc = is_nc_subgroup(g, s)
        subnormal = is_subnormal(g, s)
        for s32 in sylows:
            if not s32.mask()[s.members].all():
                continue
            normal_in = bool(s.mask()[conj[s32.members][:, s.members]].all())
            closure_in = normal_closure_members(g, s.members, within=s32.members)
            norm_in = np.intersect1d(normalizer_members(g, s.members), s32.members, assume_unique=True)
            nc_in = np.unique(g.mul[np.ix_(closure_in, norm_in)]).size == 32
            if not normal_in and not nc_in:
                near.append((s, nc, subnormal, norm_in))
                if nc and subnormal:
                    witnesses.append(_witness(spec, s, "full witness"))
    if witnesses:
        return ClaimResult("gu23-remarks", "pass", len(near), [], [], notes)
    nc_only = [t for t in near if t[1] and not t[2]]
    sub_only = [t for t in near if t[2] and not t[1]]
    if nc_only:
        s = nc_only[0][0]
        ngh = normalizer_members(g, s.members)
        notes.append(
            "NC half realized: a C2xC4 that is NC in G, with normalizer of C4xC4 profile "
            f"({_profile_key(g, ngh) == c4sq_key}) and full normal closure "
            f"(order {normal_closure_members(g, s.members).size}); inside its order-32 Sylow it is "
            "neither normal nor NC; but full normal closure makes it non-subnormal"
        )
    if sub_only:
        s, _, _, norm_in = sub_only[0]
        notes.append(
            "subnormal half realized: a C2xC4 that is subnormal, neither normal nor NC in two of its "
            f"Sylow overgroups, with inner normalizer of C4oD4 profile ({_profile_key(g, norm_in) == cp_key}); "
            f"but its normal closure has order {normal_closure_members(g, s.members).size}, so it is not NC in G"
        )
    notes.append(
        "no single subgroup satisfies the full conjunction: a proper subgroup with H^G = G is never "
        "subnormal, and every subnormal candidate here has H^G of order 16 inside its normalizer, "
        "capping H^G N_G(H) at order 32"
    )
    counterexamples.append(_witness(spec, detail="conjunction unsatisfiable; see notes"))
    return ClaimResult("gu23-remarks", "fail", len(near), counterexamples, [], notes)


def _wreath_c4_c2(budget: Budget) -> Group:
    cached = _REF_GROUPS.get("wreath")
    if cached is None:
        from .catalog import build_cyclic
        from .groups import direct_product, semidirect_product

        c4 = build_cyclic(4, budget)
        base = direct_product(c4, c4, budget)
        swap = np.array([(i % 4) * 4 + i // 4 for i in range(16)], dtype=np.int64)
        c2 = build_cyclic(2, budget)
        cached = semidirect_product(base, c2, {1: swap}, budget, label="C4wrC2")
        _REF_GROUPS["wreath"] = cached
    return cached


def _central_product_c4_d4(budget: Budget) -> Group:
    cached = _REF_GROUPS.get("central-product")
    if cached is None:
        from .catalog import build_cyclic, build_dihedral
        from .groups import direct_product

        c4 = build_cyclic(4, budget)
        d4 = build_dihedral(4, budget)
        prod = direct_product(c4, d4, budget)
        # central C2 generated by (c^2, z): c^2 is index 2 in C4, z = a^2 is index 2 in D4
        anti = 2 * 8 + 2
        cached, _ = quotient_group(prod, np.array([0, anti], dtype=np.intp), budget)
        cached.label = "C4oD4"
        _REF_GROUPS["central-product"] = cached
    return cached


_REF_GROUPS: dict[str, Group] = {}


def _run_dihedral_maximals(budget: Budget) -> ClaimResult:
    counterexamples, checked = [], 0
    for n in range(3, 25):
        checked += 1
        spec = GroupSpec("Dihedral", (n,))
        g = build_group(spec, budget)
        lat = all_subgroups(g, budget)
        expected = {_reference_profile(f"Cyclic({n})")}
        for p in primes_of(n):
            expected.add(_reference_profile(f"Dihedral({n // p})"))
        got = {_profile_key(g, m.members) for m in lat.maximal_subgroups()}
        if got != expected:
            counterexamples.append(_witness(spec, detail="maximal profile set mismatch"))
    return _must_hold_result("dihedral-maximals", checked, counterexamples, skipped=[], notes=[])


def _run_dihedral_iff(budget: Budget) -> ClaimResult:
    instances = []
    for n in range(3, 41):
        spec = GroupSpec("Dihedral", (n,))
        g = build_group(spec, budget)
        instances.append((_witness(spec), is_pnc_group(g, budget), n % 4 != 0))
    return _iff_result("dihedral-iff", instances, [], [])


def _run_dicyclic_iff(budget: Budget) -> ClaimResult:
    instances = []
    for n in range(2, 13):
        spec = GroupSpec("Dicyclic", (n,))
        g = build_group(spec, budget)
        instances.append((_witness(spec), is_pnc_group(g, budget), n % 4 != 0))
    return _iff_result("dicyclic-iff", instances, [], [])


def _power_action_universe(limit: int):
    """Deterministic enumeration of consistency-valid one- and two-factor specs."""
    primes = (2, 3, 5, 7, 11, 13)
    singles, rejected = [], 0
    for p in primes:
        for alpha in (1, 2):
            if p**alpha > limit:
                continue
            for q in primes:
                if q == p:
                    continue
                for a in (1, 2, 3):
                    m = q**a
                    if p**alpha * m > limit:
                        continue
                    for t in range(1, m):
                        try:
                            singles.append(PowerActionSpec(p, alpha, ((q, a, t),)))
                        except ActionInconsistentError:
                            rejected += 1
    doubles = []
    for p, alpha in ((2, 1), (2, 2), (3, 1)):
        for (q1, a1), (q2, a2) in itertools.combinations(
            [(q, a) for q in primes if q != p for a in (1, 2)], 2
        ):
            if q1 == q2:
                continue
            if p**alpha * q1**a1 * q2**a2 > limit:
                continue
            for t1 in range(1, q1**a1):
                for t2 in range(1, q2**a2):
                    try:
                        doubles.append(PowerActionSpec(p, alpha, ((q1, a1, t1), (q2, a2, t2))))
                    except ActionInconsistentError:
                        rejected += 1
    return singles + doubles, rejected


def _valuation_side(pa: PowerActionSpec) -> bool:
    return all(vp_valuation(t + 1, q) in (0, a) for q, a, t in pa.factors)


def _pa_spec(pa: PowerActionSpec) -> GroupSpec:
    return GroupSpec("PowerAction", (pa.p, pa.alpha, *pa.factors))


def _run_theorem3_valuations(budget: Budget) -> ClaimResult:
    limit = min(budget.order_cap, 400)
    universe, rejected = _power_action_universe(limit)
    restricted = [pa for pa in universe if all(pa.p > q for q, _, _ in pa.factors)]
    instances = []
    for pa in restricted:
        g = build_group(_pa_spec(pa), budget)
        instances.append((_witness(_pa_spec(pa)), is_pnc_group(g, budget), _valuation_side(pa)))
    notes = [
        f"consistency filter rejected {rejected} twist assignments up to order {limit}",
        f"restricted universe (acting prime above kernel primes): {len(restricted)} valid specs",
    ]
    mismatches = 0
    sweep_sides = {True: 0, False: 0}
    for pa in universe:
        g = build_group(_pa_spec(pa), budget)
        lhs = is_pnc_group(g, budget)
        rhs = _valuation_side(pa)
        sweep_sides[rhs] += 1
        if lhs != rhs:
            mismatches += 1
    notes.append(
        "exploratory sweep without the prime-order hypothesis: "
        f"{len(universe)} specs, biconditional sides (rhs true/false) = "
        f"{sweep_sides[True]}/{sweep_sides[False]}, mismatches = {mismatches}"
    )
    notes.append(
        "group-consistency already forces each twist to satisfy the valuation condition, "
        "so the biconditional has no false side to exercise"
    )
    return _iff_result("theorem3-valuations", instances, [], notes)


def _run_power_action_formulas(budget: Budget) -> ClaimResult:
    universe, _ = _power_action_universe(min(budget.order_cap, 300))
    counterexamples, checked = [], 0
    for pa in universe[:60]:
        spec = _pa_spec(pa)
        g = build_group(spec, budget)
        q = pa.p**pa.alpha
        moduli = [pi**ai for pi, ai, _ in pa.factors]
        a_total = math.prod(moduli)

        def encode(s, exps):
            idx = s % q
            for e, m in zip(exps, moduli):
                idx = idx * m + (e % m)
            return idx

        checked += 1
        samples = list(itertools.islice(
            itertools.product(range(1, q), *[range(m) for m in moduli]), 100
        ))
        ok = True
        for sample in samples:
            s, ks = sample[0], sample[1:]
            w = encode(0, ks)
            a_s = encode(s, [0] * len(moduli))
            lhs = int(g.mul[g.mul[g.inv[w], a_s], w])  # (a^s)^w
            rhs = encode(s, [k * (1 - pow(-t % m, s, m)) for k, (pi, ai, t), m in zip(ks, pa.factors, moduli)])
            if lhs != rhs:
                ok = False
                break
        if ok:
            pairs = list(itertools.islice(itertools.product(range(q), *[range(m) for m in moduli], repeat=2), 100))
            width = 1 + len(moduli)
            for pair in pairs:
                s1, f = pair[0], pair[1:width]
                s2, u = pair[width], pair[width + 1:]
                g1 = encode(s1, f)
                g2 = encode(s2, u)
                lhs = int(g.mul[g1, g2])
                rhs = encode(
                    s1 + s2,
                    [ui + pow(-t % m, s2, m) * fi for fi, ui, (pi, ai, t), m in zip(f, u, pa.factors, moduli)],
                )
                if lhs != rhs:
                    ok = False
                    break
        if not ok:
            counterexamples.append(_witness(spec, detail="table disagrees with twist-power formula"))
    return _must_hold_result("power-action-formulas", checked, counterexamples, [], [])


def _hall_dedekind_hypothesis(g: Group, budget: Budget) -> Subgroup | None:
    """Find A with G = A : D, A abelian normal Hall (all subgroups normal in G),
    D Dedekind, and all induced power maps n satisfying n = 1 or gcd(n-1, o(a)) = 1.

    Returns the kernel A when some decomposition qualifies, else None.
    """
    lat = all_subgroups(g, budget)
    conj = g.conj_table()
    orders = g.element_orders()
    for a_sub in lat.normal_subgroups():
        if math.gcd(a_sub.order, g.order // a_sub.order) != 1:
            continue
        if not is_abelian(subgroup_as_group(g, a_sub)):
            continue
        a_mask = a_sub.mask()
        inside_ok = all(
            lat.normal[i]
            for i, s in enumerate(lat.subgroups)
            if a_mask[s.members].all()
        )
        if not inside_ok:
            continue
        comp = next(
            (
                d
                for d in lat.subgroups
                if d.order == g.order // a_sub.order
                and np.intersect1d(d.members, a_sub.members).size == 1
            ),
            None,
        )
        if comp is None or not is_dedekind(subgroup_as_group(g, comp), budget):
            continue
        good = True
        for a in a_sub.members:
            if a == 0 or not good:
                continue
            oa = int(orders[a])
            powers = {}
            cur = 0
            for e in range(oa):
                powers[cur] = e
                cur = int(g.mul[cur, a])
            for d in comp.members:
                image = int(conj[g.inv[d], a])  # a^d
                n = powers.get(image)
                if n is None or math.gcd(n, oa) != 1:
                    good = False
                    break
                if n % oa != 1 and math.gcd(n - 1, oa) != 1:
                    good = False
                    break
        if good:
            return a_sub
    return None


_HALL_INSTANCES = (
    "PowerAction(2,2,(5,1,3))",  # order 20, faithful C4 action
    "PowerAction(3,1,(7,1,5))",  # order 21
    "PowerAction(2,1,(3,2,1))",  # order 18, inversion on C9
    "Dicyclic(3)",
    "C5SemiQ8",
    "Direct(Cyclic(5),Sym(3))",
    "Dihedral(15)",
)


def _run_sufficiency_hall(budget: Budget) -> ClaimResult:
    from .catalog import parse_spec

    counterexamples, checked, notes = [], 0, []
    for text in _HALL_INSTANCES:
        spec = parse_spec(text)
        g = build_group(spec, budget)
        checked += 1
        kernel = _hall_dedekind_hypothesis(g, budget)
        if kernel is None:
            counterexamples.append(_witness(spec, detail="instance does not satisfy the hypothesis"))
            continue
        if not is_pnc_group(g, budget):
            counterexamples.append(_witness(spec, detail="hypothesis holds but group is not PNC"))
            continue
        lat = all_subgroups(g, budget)
        for h in lat.class_representatives():
            norm_mask = np.zeros(g.order, dtype=bool)
            norm_mask[normalizer_members(g, h.members)] = True
            clo_mask = np.zeros(g.order, dtype=bool)
            clo_mask[normal_closure_members(g, h.members)] = True
            if not (norm_mask[kernel.members] | clo_mask[kernel.members]).all():
                counterexamples.append(_witness(spec, h, "some a in A avoids both N_G(H) and H^G"))
                break
    notes.append("each instance re-checked elementwise: every a in the Hall kernel lies in N_G(H) or H^G")
    return _must_hold_result("sufficiency-hall", checked, counterexamples, skipped=[], notes=notes)


def _min_non_pe_gate(g: Group, budget: Budget, proper_condition) -> bool:
    if is_pe_group(g, budget):
        return False
    lat = all_subgroups(g, budget)
    for rep in lat.class_representatives():
        if rep.order == g.order:
            continue
        if not proper_condition(subgroup_as_group(g, rep)):
            return False
    return True


_MIN_NON_PE_INSTANCES = (
    "Dihedral(4)",
    "Modular(3,2)",
    "HeisenbergLike(3,1)",
    "SL2(3)",
    "IrreducibleFrobenius(5,2,3)",
)


def _run_min_non_pe_shapes(budget: Budget) -> ClaimResult:
    from .catalog import parse_spec

    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    proper = lambda child: is_solvable(child) and is_pnc_group(child, budget)
    gate_members = []
    for spec, g in members:
        hit = _guarded(skipped, spec, lambda: _min_non_pe_gate(g, budget, proper))
        if hit:
            gate_members.append((spec, g))
    for spec, g in gate_members:
        checked += 1
        if len(primes_of(g.order)) > 2:
            counterexamples.append(_witness(spec, detail="more than two prime divisors"))
            continue
        matched = [name for name, fn in THM1_SHAPES if fn(g, budget)]
        if not matched:
            counterexamples.append(_witness(spec, detail="matches no shape"))
        else:
            notes.append(f"{_spec_str(spec)} matches: {', '.join(matched)}")
    for text in _MIN_NON_PE_INSTANCES:
        spec = parse_spec(text)
        g = build_group(spec, budget)
        checked += 1
        if not _min_non_pe_gate(g, budget, proper):
            counterexamples.append(
                _witness(spec, detail="expected non-PE with all proper subgroups solvable PNC")
            )
    return _must_hold_result("min-non-pe-shapes", checked, counterexamples, skipped, notes)


def _run_min_non_pe_proper_on(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    proper = lambda child: is_on_group(child, budget)
    for spec, g in members:
        hit = _guarded(skipped, spec, lambda: _min_non_pe_gate(g, budget, proper))
        if not hit:
            continue
        checked += 1
        matched = [name for name, fn in THM2_SHAPES if fn(g, budget)]
        if not matched:
            counterexamples.append(_witness(spec, detail="matches no shape"))
        else:
            notes.append(f"{_spec_str(spec)} matches: {', '.join(matched)}")
    return _must_hold_result("min-non-pe-proper-on", checked, counterexamples, skipped, notes)


def _run_on_characterization(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget, max_order=120)
    instances, notes = [], []
    positives, negatives = [], []
    for spec, g in members:
        data = _guarded(
            skipped,
            spec,
            lambda: (is_on_group(g, budget), is_dedekind(g, budget) or on_structural(g, budget)),
        )
        if data is None:
            continue
        lhs, rhs = data
        (positives if lhs else negatives).append(_spec_str(spec))
        instances.append((_witness(spec), lhs, rhs))
    if "Sym(3)" in positives and "Dihedral(4)" in negatives:
        notes.append("positive side includes Sym(3) and the Dedekind members; Dihedral(4) is negative")
    return _iff_result("on-characterization", instances, skipped, notes)


def _run_maximal_pnc_dichotomy(budget: Budget) -> ClaimResult:
    members, skipped = _catalog_members(budget)
    counterexamples, checked, notes = [], 0, []
    sl23_key = _reference_profile("SL2(3)")
    for spec, g in members:
        if g.order == 1:
            continue
        gate = _guarded(
            skipped,
            spec,
            lambda: _all_maximals_satisfy(
                g, budget, lambda m: is_solvable(m) and is_pnc_group(m, budget)
            ),
        )
        if not gate:
            continue
        conclusion = is_p_nilpotent(g, 2, budget) or shape_minimal_nonabelian_pq(
            g, budget, force_p2=True
        )
        if _profile_key(g) == sl23_key:
            notes.append(
                f"dichotomy refuted on {_spec_str(spec)}: all maximal subgroups solvable PNC, "
                "yet the group is neither 2-nilpotent nor minimal non-abelian "
                "(it has a proper non-abelian Q8); reported, not asserted"
            )
            continue
        checked += 1
        if not conclusion:
            counterexamples.append(_witness(spec, detail="gate holds but conclusion fails"))
    return _must_hold_result("maximal-pnc-dichotomy", checked, counterexamples, skipped, notes)


def _second_maximals_all_solvable_pnc(g: Group, budget: Budget):
    bad = []
    for s in second_maximal_subgroups(g, budget):
        child = subgroup_as_group(g, s)
        if not (is_solvable(child) and is_pnc_group(child, budget)):
            bad.append(s)
    return bad


def _run_simple_second_maximal(budget: Budget) -> ClaimResult:
    counterexamples, checked, notes = [], 0, []
    skipped = [
        {"group": "PSL2(13)", "reason": "order-budget: permanently skipped (order 1092 lattice)"},
        {"group": "PSL2(27)", "reason": "order-budget: permanently skipped (order 9828)"},
    ]
    for q in (4, 5, 8):
        spec = GroupSpec("PSL2", (q,))
        g = build_group(spec, budget)
        checked += 1
        bad = _second_maximals_all_solvable_pnc(g, budget)
        if bad:
            counterexamples.append(_witness(spec, bad[0], "second maximal not solvable PNC"))
    spec7 = GroupSpec("PSL2", (7,))
    g7 = build_group(spec7, budget)
    checked += 1
    bad7 = _second_maximals_all_solvable_pnc(g7, budget)
    if bad7:
        notes.append(
            f"excluded case: PSL(2,7) has {len(bad7)} second maximal subgroups that are not solvable PNC "
            f"(first witness order {bad7[0].order})"
        )
    else:
        counterexamples.append(_witness(spec7, detail="expected a non-PNC second maximal subgroup"))
    return _must_hold_result("simple-second-maximal", checked, counterexamples, skipped, notes)


def _run_nonsolvable_second_maximal(budget: Budget) -> ClaimResult:
    skipped = [
        {"group": "SL2(27)", "reason": "order-budget: permanently skipped (order 19656)"},
        {"group": "SL2(243)", "reason": "order-budget: permanently skipped"},
    ]
    spec = GroupSpec("SL2", (5,))
    g = build_group(spec, budget)
    bad = _second_maximals_all_solvable_pnc(g, budget)
    counterexamples = [_witness(spec, b, "second maximal not solvable PNC") for b in bad[:1]]
    return _must_hold_result("nonsolvable-second-maximal", 1, counterexamples, skipped, [])


def _run_sn_probe(budget: Budget) -> ClaimResult:
    notes, skipped = [], []
    checked = 0
    for n in (3, 4, 5, 6, 7):
        spec = GroupSpec("Sym", (n,))
        try:
            g = build_group(spec, budget)
            witness = pnc_witness(g, budget)
        except BudgetExceededError as e:
            skipped.append({"group": _spec_str(spec), "reason": str(e)})
            continue
        checked += 1
        if witness is None:
            notes.append(f"S{n}: PNC")
        else:
            notes.append(
                f"S{n}: not PNC, witness subgroup of order {witness.order} "
                f"with members {witness.members.tolist()}"
            )
    return ClaimResult("sn-probe", "reportOnly", checked, [], skipped, notes)


def _run_c3_semi_d4_remark(budget: Budget) -> ClaimResult:
    from .groups import automorphism_from_generator_images, direct_product
    from .errors import NotAutomorphismError

    d4 = build_group(GroupSpec("Dihedral", (4,)), budget)
    # count automorphisms by brute force over generator images
    orders = d4.element_orders()
    count = 0
    for xa in range(8):
        for xb in range(8):
            try:
                automorphism_from_generator_images(d4, {1: xa, 4: xb})
                count += 1
            except NotAutomorphismError:
                pass
    notes = [f"Aut(D4) has order {count}; it has no element of order 3, so no nontrivial C3 action exists"]
    c3 = build_group(GroupSpec("Cyclic", (3,)), budget)
    prod = direct_product(c3, d4, budget)
    s3_key = _reference_profile("Sym(3)")
    lat = all_subgroups(prod, budget)
    has_s3 = any(s.order == 6 and _profile_key(prod, s.members) == s3_key for s in lat.subgroups)
    notes.append(
        f"the degenerate product C3 x D4 contains an S3-profile subgroup: {has_s3}; "
        "the stated counterexample cannot be realized as described"
    )
    notes.append("the fully specified D4:S3 counterexample is verified under nc-direct-factor instead")
    return ClaimResult("c3-semi-d4-remark", "reportOnly", 1, [], [], notes)


def _run_self_normalizer_probe(budget: Budget) -> ClaimResult:
    members, skipped = _solvable_pnc_members(budget)
    notes = []
    for spec, g in members:
        lat = all_subgroups(g, budget)
        has_proper_normalizer = any(
            normalizer_members(g, s.members).size < g.order for s in lat.class_representatives()
        )
        notes.append(
            f"{_spec_str(spec)}: some subgroup has proper normalizer = {has_proper_normalizer}, "
            f"Dedekind = {is_dedekind(g, budget)}"
        )
    return ClaimResult("self-normalizer-probe", "reportOnly", len(members), [], skipped, notes)


# --- registry and runner -------------------------------------------------------------


def claim_registry() -> list[Claim]:
    claims = [
        Claim("pnc-implies-t", "mustHold", "standard catalog", _run_pnc_implies_t),
        Claim("nilpotent-pnc-iff-dedekind", "iff", "nilpotent catalog members", _run_nilpotent_pnc_iff_dedekind),
        Claim("solvable-pnc-supersolvable", "mustHold", "solvable catalog members + converse probe", _run_solvable_pnc_supersolvable),
        Claim("nc-iff-commutator", "iff", "all subgroups of catalog members of order <= 120", _run_nc_iff_commutator),
        Claim("solvable-pnc-equivalences", "mustHold", "solvable PNC catalog members", _run_solvable_pnc_equivalences),
        Claim("normalizer-closure", "mustHold", "solvable PNC catalog members", _run_normalizer_closure),
        Claim("nilpotent-subgroups-dedekind", "mustHold", "solvable PNC catalog members", _run_nilpotent_subgroups_dedekind),
        Claim("min-prime-pnilpotent", "mustHold", "solvable PNC catalog members + probe", _run_min_prime_pnilpotent),
        Claim("max-prime-order-normal", "mustHold", "solvable PNC members asserted; non-solvable reported", _run_max_prime_order_normal),
        Claim("sylow-in-closure", "mustHold", "p-subgroups of solvable PNC catalog members", _run_sylow_in_closure),
        Claim("fstar-class", "mustHold", "solvable PNC members asserted; non-solvable reported", _run_fstar_class),
        Claim("structure-bundle", "mustHold", "solvable PNC catalog members", _run_structure_bundle),
        Claim("component-lemma", "mustHold", "commuting normal factorizations in catalog members <= 120", _run_component_lemma),
        Claim("coprime-direct-product", "mustHold", "20 seeded coprime PNC pairs + probe", _run_coprime_direct_product),
        Claim("quotient-closure", "mustHold", "normal subgroups of PNC members <= 120 + converse probe", _run_quotient_closure),
        Claim("normal-subgroup-closure", "mustHold", "normal subgroups of PNC members <= 120 + probe", _run_normal_subgroup_closure),
        Claim("central-p-lift", "iff", "catalog members with central prime-order x, |G|_p = p", _run_central_p_lift),
        Claim("nc-quotient-correspondence", "iff", "triples N <= K <= G over catalog members <= 60", _run_nc_quotient_correspondence),
        Claim("nc-direct-factor", "iff", "factor subgroups of catalog direct products", _run_nc_direct_factor),
        Claim("gu23-remarks", "mustHold", "the order-96 unitary group", _run_gu23_remarks),
        Claim("dihedral-maximals", "mustHold", "dihedral groups, 3 <= n <= 24", _run_dihedral_maximals),
        Claim("dihedral-iff", "iff", "dihedral groups, 3 <= n <= 40", _run_dihedral_iff),
        Claim("dicyclic-iff", "iff", "dicyclic groups, 2 <= n <= 12", _run_dicyclic_iff),
        Claim("power-action-formulas", "mustHold", "valid power-action specs (bounded sweep)", _run_power_action_formulas),
        Claim("theorem3-valuations", "iff", "valid power-action specs with dominant acting prime", _run_theorem3_valuations),
        Claim("sufficiency-hall", "mustHold", "constructed Hall-Dedekind instances", _run_sufficiency_hall),
        Claim("min-non-pe-shapes", "mustHold", "catalog gate + named instances", _run_min_non_pe_shapes),
        Claim("min-non-pe-proper-on", "mustHold", "catalog gate", _run_min_non_pe_proper_on),
        Claim("on-characterization", "iff", "catalog members of order <= 120", _run_on_characterization),
        Claim("maximal-pnc-dichotomy", "mustHold", "catalog members (SL(2,3) family reported)", _run_maximal_pnc_dichotomy),
        Claim("simple-second-maximal", "mustHold", "PSL(2,q), q in {4,5,7,8}; 13 and 27 skipped", _run_simple_second_maximal),
        Claim("nonsolvable-second-maximal", "mustHold", "SL(2,5); SL(2,3^r) for r >= 3 skipped", _run_nonsolvable_second_maximal),
        Claim("sn-probe", "reportOnly", "symmetric groups S3..S7", _run_sn_probe),
        Claim("c3-semi-d4-remark", "reportOnly", "automorphism count + degenerate product", _run_c3_semi_d4_remark),
        Claim("self-normalizer-probe", "reportOnly", "solvable PNC catalog members", _run_self_normalizer_probe),
    ]
    assert len({c.id for c in claims}) == len(claims)
    return sorted(claims, key=lambda c: c.id)


def run_claim(claim_id: str, budget: Budget = DEFAULT_BUDGET) -> ClaimResult:
    claims = {c.id: c for c in claim_registry()}
    claim = claims.get(claim_id)
    if claim is None:
        raise UnknownClaimError(f"unknown claim {claim_id!r}")
    start = time.perf_counter()
    result = claim.runner(budget)
    result.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return result


def run_all_claims(budget: Budget = DEFAULT_BUDGET, parallelism: int = 1) -> list[ClaimResult]:
    ids = [c.id for c in claim_registry()]
    if parallelism <= 1:
        results = [run_claim(i, budget) for i in ids]
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(lambda i: run_claim(i, budget), ids))
    return sorted(results, key=lambda r: r.claim_id)


def counterexample_search(expression: str, universe: list[GroupSpec], budget: Budget = DEFAULT_BUDGET):
    """All universe members whose PredicateProfile satisfies the boolean expression."""
    predicate = _compile_profile_expression(expression)
    matches, skipped = [], []
    for spec in universe:
        try:
            g = build_group(spec, budget)
            profile = classify_group(g, budget)
        except BudgetExceededError as e:
            skipped.append({"group": _spec_str(spec), "reason": str(e)})
            continue
        if predicate(profile.flags()):
            matches.append(spec)
    return matches, skipped


def _compile_profile_expression(expression: str):
    import ast

    cleaned = expression.replace("&", " and ").replace("|", " or ").replace("~", " not ").replace("!", " not ")
    try:
        tree = ast.parse(cleaned, mode="eval")
    except SyntaxError as e:
        raise UnknownClaimError(f"cannot parse expression {expression!r}: {e}") from None
    allowed = (ast.Expression, ast.BoolOp, ast.UnaryOp, ast.Not, ast.And, ast.Or, ast.Name, ast.Load)
    for node in ast.walk(tree):
        if not isinstance(node, allowed):
            raise UnknownClaimError(f"unsupported syntax in expression {expression!r}")

    def predicate(flags: dict[str, bool]) -> bool:
        def ev(node):
            if isinstance(node, ast.Expression):
                return ev(node.body)
            if isinstance(node, ast.BoolOp):
                vals = [ev(v) for v in node.values]
                return all(vals) if isinstance(node.op, ast.And) else any(vals)
            if isinstance(node, ast.UnaryOp):
                return not ev(node.operand)
            if isinstance(node, ast.Name):
                if node.id not in flags:
                    raise UnknownClaimError(f"unknown predicate name {node.id!r}")
                return flags[node.id]
            raise UnknownClaimError("unsupported expression node")

        return ev(tree)

    return predicate


# --- report emission -----------------------------------------------------------------


def emit_report(results: list[ClaimResult], fmt: str = "json", timing: bool = True) -> str:
    ordered = sorted(results, key=lambda r: r.claim_id)
    if fmt == "json":
        doc = {"claims": [r.to_json(timing=timing) for r in ordered]}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "markdown":
        lines = [
            "| claim | verdict | checked | counterexamples | skipped |",
            "| --- | --- | --- | --- | --- |",
        ]
        for r in ordered:
            first = ""
            if r.counterexamples:
                w = r.counterexamples[0]
                first = w.get("group", "")
                if "subgroup" in w:
                    first += f" {w['subgroup']}"
            lines.append(
                f"| {r.claim_id} | {r.verdict} | {r.checked_count} | "
                f"{len(r.counterexamples)}{' (' + first + ')' if first else ''} | {len(r.skipped)} |"
            )
        return "\n".join(lines) + "\n"
    raise UnknownClaimError(f"unknown report format {fmt!r}")
