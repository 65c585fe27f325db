"""The theorem-by-theorem verification battery.

Every check exhaustively tests one identity, bijection contract, expansion
or closed form over all multisets up to a size bound (or all series orders
up to a truncation bound), returning a named pass/fail result with a
minimal counterexample on failure.  The command-line `verify` subcommand
and the acceptance test suite both run these.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable

from .binary import annotate, bstats, dynamic_sets, format_btree, swap_branches
from .counts import fish_count, jaco2_count, plane_tree_count, six_term_count, ternary_identity
from .enumeration import iter_multisets, iter_trees
from .gamma import (
    gamma_expand,
    gamma_expand_poly,
    gamma_from_table,
    is_palindromic,
    is_unimodal,
    reduced_schett,
    slice_poly_coeffs,
)
from .grammar import (
    XYZ,
    derive,
    four_var_coeffs,
    schett_coeffs,
    schett_poly,
    schett_rules,
)
from .jacobi import jacobi_taylor
from .mpoly import MPoly
from .multiset import Multiset, count_trees, parse_multiset, set_multiset, uniform_multiset
from .realroots import real_rooted
from .sequences import euler_numbers
from .series import check_algebraic_eq, format_series, lagrange_series, plane_gf, series_to_poly5, SERIES5_VARS
from .transforms import hat, psi, rho, rho_inv, theta, tilde
from .trees import (
    WTree,
    active_counts,
    format_tree,
    parity_counts,
    parse_tree,
    stats,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _ok(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


# ---------------------------------------------------------------------------
# counting and basic statistics
# ---------------------------------------------------------------------------

def check_counting(max_size: int = 8) -> CheckResult:
    """Product-formula count equals the enumeration, with no duplicates."""
    name = "counting: product formula vs enumeration"
    total = 0
    for m in iter_multisets(max_size):
        want = count_trees(m)
        seen = set()
        got = 0
        for t in iter_trees(m, size_bound=max_size):
            got += 1
            seen.add(t)
        if got != want or len(seen) != want:
            return _fail(name, f"{m}: formula {want}, enumerated {got} ({len(seen)} distinct)")
        total += got
    return _ok(name, f"all M with p <= {max_size} agree ({total} trees)")


def check_stat_invariants(max_size: int = 6) -> CheckResult:
    """Per-tree bookkeeping identities between the statistics."""
    name = "statistics: internal identities"
    trees_seen = 0
    for m in iter_multisets(max_size):
        p = m.size
        leaf_hist: Counter = Counter()
        el_hist: Counter = Counter()
        for t in iter_trees(m, size_bound=max_size):
            sv = stats(t)
            root_deg = len(t.children)
            checks = [
                sv.ee + sv.oe + sv.odd == p + 1,
                (p + 1 - sv.ee) % 2 == 0,
                sv.odd == sum(c for q, c in sv.deg.items() if q % 2 == 1),
                sv.oe == sum(c for q, c in sv.od.items() if q % 2 == 0),
                sv.oe_star == sv.oe,
                sv.act == sv.eact + sv.oact,
                sum(q * c for q, c in sv.deg.items()) == p,
                sv.deg.get(0, 0) == sv.leaf,
                sv.odd_star == sv.odd - (root_deg % 2),
                sv.ee_star == sv.ee - (1 - root_deg % 2),
                sv.oddf == sv.oe + sv.ee_star + (root_deg % 2),
                sv.oo + sv.eo == sv.odd,
                sv.el == sv.ee + sv.eo,
            ]
            if not all(checks):
                return _fail(name, f"tree {format_tree(t)} fails identity #{checks.index(False)}")
            leaf_hist[sv.leaf] += 1
            el_hist[sv.el] += 1
            trees_seen += 1
        if leaf_hist != el_hist:
            return _fail(name, f"{m}: leaf and even-level distributions differ")
    return _ok(name, f"identities + leaf/el equidistribution, p <= {max_size} ({trees_seen} trees)")


# ---------------------------------------------------------------------------
# bijections and involutions on plane trees
# ---------------------------------------------------------------------------

def _deg_od_el(t: WTree) -> tuple[dict[int, int], dict[int, int], int]:
    deg: dict[int, int] = {}
    od: dict[int, int] = {}
    el = 0
    stack = [(t, 0)]
    while stack:
        node, lvl = stack.pop()
        d = len(node[1])
        deg[d] = deg.get(d, 0) + 1
        if lvl & 1:
            od[d] = od.get(d, 0) + 1
        else:
            el += 1
        for c in node[1]:
            stack.append((c, lvl + 1))
    return deg, od, el


def check_hat(max_size: int = 8) -> CheckResult:
    """hat is a bijection with deg_q -> od_(q-1) and leaf -> even-level."""
    name = "hat bijection: degree/odd-level transport"
    total = 0
    for m in iter_multisets(max_size):
        originals = set()
        images = set()
        for t in iter_trees(m, size_bound=max_size):
            h = hat(t)
            originals.add(t)
            images.add(h)
            deg, _, _ = _deg_od_el(t)
            _, od_h, el_h = _deg_od_el(h)
            if deg.get(0, 0) != el_h:
                return _fail(name, f"leaf/el fails on {format_tree(t)}")
            for q, c in deg.items():
                if q >= 1 and c != od_h.get(q - 1, 0):
                    return _fail(name, f"deg_{q} fails on {format_tree(t)} -> {format_tree(h)}")
            for q, c in od_h.items():
                if deg.get(q + 1, 0) != c:
                    return _fail(name, f"od_{q} fails on {format_tree(t)} -> {format_tree(h)}")
            total += 1
        if originals != images:
            return _fail(name, f"{m}: hat is not a bijection")
    return _ok(name, f"bijective with exact transport, p <= {max_size} ({total} trees)")


def check_tilde(max_size: int = 8) -> CheckResult:
    """tilde is an involution swapping odd <-> oe and fixing ee."""
    name = "tilde involution: (odd, oe, ee) -> (oe, odd, ee)"
    table = {
        "0(1(2))": "0(1,2)", "0(1,2)": "0(1(2))",
        "0(1(1))": "0(1,1)", "0(1,1)": "0(1(1))",
        "0": "0", "0(1)": "0(1)",
    }
    for src, dst in table.items():
        if format_tree(tilde(parse_tree(src))) != dst:
            return _fail(name, f"base case {src} -> {dst} violated")
    total = 0
    for m in iter_multisets(max_size):
        for t in iter_trees(m, size_bound=max_size):
            tt = tilde(t)
            if tilde(tt) != t:
                return _fail(name, f"not an involution on {format_tree(t)}")
            ee, oe, odd, _, _, _ = parity_counts(t)
            ee2, oe2, odd2, _, _, _ = parity_counts(tt)
            if (odd, oe, ee) != (oe2, odd2, ee2):
                return _fail(name, f"transport fails on {format_tree(t)} -> {format_tree(tt)}")
            total += 1
    return _ok(name, f"involution with exact transport, p <= {max_size} ({total} trees)")


def check_symmetry(max_size: int = 8) -> CheckResult:
    """The three refined symmetries of the parity generating polynomials."""
    name = "symmetry: joint parity distributions"
    for m in iter_multisets(max_size):
        main: Counter = Counter()
        even_form: Counter = Counter()
        starred: Counter = Counter()
        leaf_hist: Counter = Counter()
        el_hist: Counter = Counter()
        for t in iter_trees(m, size_bound=max_size):
            ee, oe, odd, oo, leaf, root_deg = parity_counts(t)
            main[(ee, oe, odd)] += 1
            eo = odd - oo
            el = ee + eo
            even_form[(ee + oe, oo + el, ee)] += 1
            root_odd = root_deg % 2
            starred[(odd - root_odd, oe, ee - (1 - root_odd))] += 1
            leaf_hist[leaf] += 1
            el_hist[el] += 1
        if main != Counter({(ee, odd, oe): c for (ee, oe, odd), c in main.items()}):
            return _fail(name, f"{m}: x^ee y^oe z^odd is not symmetric in y, z")
        if even_form != Counter({(b, a, c): n for (a, b, c), n in even_form.items()}):
            return _fail(name, f"{m}: even-degree vs oo+el distribution not symmetric")
        if starred != Counter({(c, b, a): n for (a, b, c), n in starred.items()}):
            return _fail(name, f"{m}: root-excluded odd*/ee* distribution not symmetric")
        if leaf_hist != el_hist:
            return _fail(name, f"{m}: leaf and even-level distributions differ")
    return _ok(name, f"three refined symmetries + leaf/el equidistribution, p <= {max_size}")


def check_psi_theta(max_size: int = 6) -> CheckResult:
    """Contracts of the root-subtree variants of tilde and hat."""
    name = "psi/theta: root-excluded transports"
    for m in iter_multisets(max_size):
        origs = set()
        theta_imgs = set()
        for t in iter_trees(m, size_bound=max_size):
            pt = psi(t)
            if psi(pt) != t:
                return _fail(name, f"psi is not an involution on {format_tree(t)}")
            a, b = stats(t), stats(pt)
            if (a.odd_star, a.oe_star, a.ee_star) != (b.ee_star, b.oe_star, b.odd_star):
                return _fail(name, f"psi transport fails on {format_tree(t)}")
            th = theta(t)
            origs.add(t)
            theta_imgs.add(th)
            c = stats(th)
            root_deg_img = len(th.children)
            for d in range(0, m.size // 2 + 1):
                ed_star = c.deg.get(2 * d, 0) - c.od.get(2 * d, 0) - (
                    1 if root_deg_img == 2 * d else 0
                )
                want = ed_star + (1 if root_deg_img == 2 * d + 1 else 0)
                if a.deg.get(2 * d + 1, 0) != want:
                    return _fail(name, f"theta transport fails on {format_tree(t)} at d={d}")
        if origs != theta_imgs:
            return _fail(name, f"{m}: theta is not a bijection")
    return _ok(name, f"psi involution and theta bijection transports, p <= {max_size}")


def check_full_degree(max_size: int = 8) -> CheckResult:
    """Total full-degree-(2d+1) nodes are twice the degree-(2d+1) nodes."""
    name = "full-degree doubling: totals per multiset"
    for m in iter_multisets(max_size):
        full_hist: Counter = Counter()
        deg_hist: Counter = Counter()
        total_oddf = 0
        total_odd = 0
        for t in iter_trees(m, size_bound=max_size):
            stack = [(t, True)]
            while stack:
                node, is_root = stack.pop()
                d = len(node[1])
                fd = d if is_root else d + 1
                full_hist[fd] += 1
                deg_hist[d] += 1
                if fd % 2 == 1:
                    total_oddf += 1
                if d % 2 == 1:
                    total_odd += 1
                stack.extend((c, False) for c in node[1])
        if total_oddf != 2 * total_odd:
            return _fail(name, f"{m}: oddf total {total_oddf} != 2 * {total_odd}")
        for d in range(0, m.size // 2 + 1):
            if full_hist.get(2 * d + 1, 0) != 2 * deg_hist.get(2 * d + 1, 0):
                return _fail(name, f"{m}: full-degree {2*d+1} count mismatch")
    return _ok(name, f"odd full-degree totals double odd degree totals, p <= {max_size}")


def check_euler(max_n: int = 8) -> CheckResult:
    """Increasing trees with no root-excluded ee (resp. odd) nodes are
    counted by the Euler numbers from the sec+tan recurrence."""
    name = "Euler numbers: zero-ee* and zero-odd* increasing trees"
    es = euler_numbers(max_n)
    for n in range(max_n + 1):
        ee_star_zero = 0
        odd_star_zero = 0
        for t in iter_trees(set_multiset(n)):
            ee, oe, odd, _, _, root_deg = parity_counts(t)
            root_odd = root_deg % 2
            if ee - (1 - root_odd) == 0:
                ee_star_zero += 1
            if odd - root_odd == 0:
                odd_star_zero += 1
        if not ee_star_zero == odd_star_zero == es[n]:
            return _fail(
                name,
                f"n={n}: ee*=0 count {ee_star_zero}, odd*=0 count {odd_star_zero}, E_n {es[n]}",
            )
    return _ok(name, f"both counts equal E_n for n <= {max_n} (E_{max_n} = {es[max_n]})")


# ---------------------------------------------------------------------------
# binary trees and the group action
# ---------------------------------------------------------------------------

def check_binary(max_size: int = 6) -> CheckResult:
    """rho round-trips, transports all six statistics, and the binary
    active/dynamic bookkeeping holds."""
    name = "binary correspondence: statistic transport and bookkeeping"
    for m in iter_multisets(max_size):
        for t in iter_trees(m, size_bound=max_size):
            b = rho(t)
            if rho_inv(b) != t:
                return _fail(name, f"round trip fails on {format_tree(t)}")
            sv = stats(t)
            bv = bstats(b)
            if (sv.deg, sv.od, sv.el, sv.odd, sv.oe, sv.ee) != (
                bv.rdeg, bv.rol, bv.ell, bv.ord, bv.oler, bv.eler
            ):
                return _fail(name, f"statistic transport fails on {format_tree(t)}")
            if (sv.act, sv.eact, sv.oact) != (bv.act, bv.eact, bv.oact):
                return _fail(name, f"active-node counts disagree on {format_tree(t)}")
            if not (
                bv.dme == 2 * bv.eact
                and bv.dmo == 2 * bv.oact
                and bv.dme + bv.ndoler == bv.oler
                and bv.dmo + bv.ndord == bv.ord
                and bv.ndoler == bv.ndord
                and m.size + 1 == bv.oler + bv.ord + bv.eler
            ):
                return _fail(name, f"dynamic bookkeeping fails on {format_btree(b)}")
    return _ok(name, f"transport + dynamic identities, p <= {max_size}")


def _index_set(paths: set, path_index: dict) -> frozenset:
    return frozenset(path_index[p] for p in paths)


class _MemberInfo:
    """Cached per-tree data for one orbit member."""

    __slots__ = ("ann", "bv", "labels", "actives", "idx_of", "dyn_even", "dyn_odd")

    def __init__(self, b):
        self.ann = annotate(b)
        self.bv = bstats(b, self.ann)
        self.labels = [self.ann.nodes[q].label for q in self.ann.order]
        self.actives = [self.ann.active[q] for q in self.ann.order]
        self.idx_of = {q: k for k, q in enumerate(self.ann.order)}
        de, do = dynamic_sets(self.ann)
        self.dyn_even = _index_set(de, self.idx_of)
        self.dyn_odd = _index_set(do, self.idx_of)


def _dynamic_transport_ok(cur_info: _MemberInfo, new_info: _MemberInfo, i: int) -> bool:
    """Dynamic pairs move as (u,y) <-> (u,x) or through the ancestor,
    with node identity tracked by the invariant preorder index."""
    ann = cur_info.ann
    pu = ann.order[i]
    node = ann.nodes[pu]
    e1, o1 = cur_info.dyn_even, cur_info.dyn_odd
    e2, o2 = new_info.dyn_even, new_info.dyn_odd
    ix = cur_info.idx_of.get(pu + (0,))
    iy = cur_info.idx_of.get(pu + (1,))
    anc = pu[: len(pu) - ann.trailing_rights[pu] - 1]
    iw = cur_info.idx_of[anc]
    if node.left is not None and node.right is not None:
        return ((i in e1 and iy in e1) == (i in o2 and ix in o2)) and (
            (i in o1 and iy in o1) == (i in e2 and ix in e2)
        )
    if node.left is not None:
        return (i in o1 and iw in o1) and (i in e2 and ix in e2)
    return (i in e1 and iy in e1) and (i in o2 and iw in o2)


def check_action(max_size: int = 8) -> CheckResult:
    """Branch-swap involutions: commutation, preorder invariance, the
    orbit structure, the orbit sum identity, and the gamma cross-check."""
    name = "group action: branch swaps and orbit structure"
    for m in iter_multisets(max_size):
        p = m.size
        seen: set = set()
        rep_table: dict[tuple[int, int], int] = {}
        for t0 in iter_trees(m, size_bound=max_size):
            b0 = rho(t0)
            if b0 in seen:
                continue
            # close the orbit, annotating each member once
            members = {b0: _MemberInfo(b0)}
            frontier = [b0]
            while frontier:
                cur = frontier.pop()
                info = members[cur]
                for i in range(1, p + 1):
                    nb = swap_branches(cur, i, info.ann)
                    if nb not in members:
                        members[nb] = _MemberInfo(nb)
                        frontier.append(nb)
            seen.update(members)

            orbit_hist: Counter = Counter()
            reps = []
            for cur, info in members.items():
                bv = info.bv
                if bv.ndoler != bv.ndord or bv.dme + bv.ndoler != bv.oler or bv.dmo + bv.ndord != bv.ord:
                    return _fail(name, f"dynamic bookkeeping fails on {format_btree(cur)}")
                orbit_hist[(bv.eler, bv.oler, bv.ord)] += 1
                if bv.eact == 0:
                    reps.append((cur, bv))
                active_idx = [i for i in range(1, p + 1) if info.actives[i]]
                swaps = {}
                for i in range(1, p + 1):
                    nb = swap_branches(cur, i, info.ann)
                    if not info.actives[i]:
                        if nb != cur:
                            return _fail(name, f"swap at inactive node {i} moved {format_btree(cur)}")
                        continue
                    swaps[i] = nb
                    new_info = members[nb]
                    if swap_branches(nb, i, new_info.ann) != cur:
                        return _fail(name, f"swap {i} not an involution on {format_btree(cur)}")
                    if new_info.labels != info.labels:
                        return _fail(name, f"preorder changed by swap {i} on {format_btree(cur)}")
                    if new_info.actives != info.actives:
                        return _fail(name, f"active set changed by swap {i} on {format_btree(cur)}")
                    if new_info.bv.eler != bv.eler:
                        return _fail(name, f"eler changed by swap {i} on {format_btree(cur)}")
                    d1 = info.ann.rdeg[info.ann.order[i]] & 1
                    d2 = new_info.ann.rdeg[new_info.ann.order[i]] & 1
                    if d1 == d2:
                        return _fail(name, f"swap {i} kept right-degree parity on {format_btree(cur)}")
                    if not _dynamic_transport_ok(info, new_info, i):
                        return _fail(name, f"dynamic transport fails at {i} on {format_btree(cur)}")
                # identity swaps commute trivially and the active set is
                # invariant, so checking both-active pairs covers commutation
                for ai in range(len(active_idx)):
                    for aj in range(ai + 1, len(active_idx)):
                        i, j = active_idx[ai], active_idx[aj]
                        via_i = swap_branches(swaps[i], j, members[swaps[i]].ann)
                        via_j = swap_branches(swaps[j], i, members[swaps[j]].ann)
                        if via_i != via_j:
                            return _fail(name, f"swaps {i},{j} do not commute on {format_btree(cur)}")

            if len(reps) != 1:
                return _fail(name, f"{m}: orbit with {len(reps)} zero-eact representatives")
            rep, rv = reps[0]
            if len(members) != 2 ** rv.act:
                return _fail(name, f"orbit of {format_btree(rep)} has size {len(members)}")
            if p + 1 != 2 * (rv.ndord + rv.act) + rv.eler:
                return _fail(name, f"size bookkeeping fails on {format_btree(rep)}")
            want_hist: Counter = Counter()
            for k in range(rv.act + 1):
                want_hist[(rv.eler, rv.ndord + 2 * k, rv.ndord + 2 * (rv.act - k))] += comb(rv.act, k)
            if orbit_hist != want_hist:
                return _fail(name, f"orbit sum identity fails on {format_btree(rep)}")
            key = (rv.eler // 2, rv.ndord // 2)
            rep_table[key] = rep_table.get(key, 0) + 1
        if rep_table != gamma_expand(m, size_bound=max_size):
            return _fail(name, f"{m}: gamma table differs from orbit representatives")
    return _ok(name, f"swap laws, orbits and gamma cross-check, p <= {max_size}")


# ---------------------------------------------------------------------------
# grammar, Schett polynomials, gamma expansion
# ---------------------------------------------------------------------------

SCHETT_DISPLAYS = [
    "x",
    "yz",
    "xy^2+xz^2",
    "y^3z+yz^3+4x^2yz",
    "xy^4+14xy^2z^2+xz^4+4x^3y^2+4x^3z^2",
]


def check_schett(max_n: int = 8, dual_max: int = 7) -> CheckResult:
    """Grammar-side properties of the Schett polynomials."""
    name = "Schett polynomials: grammar identities"
    from .gamma import multiset_schett

    for n, want in enumerate(SCHETT_DISPLAYS):
        got = schett_poly(n).canonical_str("grouped")
        if got != want:
            return _fail(name, f"S_{n} prints {got!r}, want {want!r}")
    for n in range(max_n + 1):
        s = schett_poly(n)
        if s.evaluate({"x": 1, "y": 1, "z": 1}) != factorial(n):
            return _fail(name, f"S_{n}(1,1,1) != {n}!")
        if s != s.rename({"y": "z", "z": "y"}):
            return _fail(name, f"S_{n} not symmetric in y, z")
        for (ex, ey, ez), _c in s.terms.items():
            if n % 2 == 0 and not (ex % 2 == 1 and ey % 2 == 0 and ez % 2 == 0):
                return _fail(name, f"S_{n} parity shape broken at {(ex, ey, ez)}")
            if n % 2 == 1 and not (ex % 2 == 0 and ey % 2 == 1 and ez % 2 == 1):
                return _fail(name, f"S_{n} parity shape broken at {(ex, ey, ez)}")
    for n in range(dual_max + 1):
        if multiset_schett(set_multiset(n)) != schett_poly(n):
            return _fail(name, f"grammar and enumeration disagree at n={n}")
    # Leibniz law on pseudorandom polynomials
    rng = random.Random(2024)
    rules = schett_rules()
    for _ in range(25):
        u = MPoly(XYZ, {
            (rng.randrange(3), rng.randrange(3), rng.randrange(3)): rng.randint(-4, 4)
            for _ in range(4)
        })
        v = MPoly(XYZ, {
            (rng.randrange(3), rng.randrange(3), rng.randrange(3)): rng.randint(-4, 4)
            for _ in range(4)
        })
        if derive(rules, u * v) != derive(rules, u) * v + u * derive(rules, v):
            return _fail(name, f"Leibniz law fails on {u}, {v}")
    return _ok(name, f"displays, n!, symmetry, parity shape (n <= {max_n}), dual path (n <= {dual_max}), Leibniz")


def check_st_relations(max_m: int = 4, int_tn_max: int = 7) -> CheckResult:
    """The two-table relations between the three- and four-variable
    grammars, and the tree interpretation of the four-variable table."""
    name = "s/t tables: grammar relations and tree interpretation"
    for mm in range(1, max_m + 1):
        for n in (2 * mm - 1, 2 * mm):
            s = schett_coeffs(n)
            tt = four_var_coeffs(n)
            support = set(s) | {((k[0] + 1) // 2, k[1]) for k in tt}
            for i, j in support:
                sv = s.get((i, j), 0)
                if n % 2 == 1:
                    tv = tt.get((2 * i - 1, j), 0) + tt.get((2 * i, j), 0)
                else:
                    tv = tt.get((2 * i + 1, j), 0) + tt.get((2 * i, j), 0)
                if sv != tv:
                    return _fail(name, f"n={n}, (i,j)=({i},{j}): s={sv}, t-sum={tv}")
    for n in range(int_tn_max + 1):
        want: dict[tuple[int, int], int] = {}
        for t in iter_trees(set_multiset(n)):
            ee, oe, _odd, _oo, _leaf, root_deg = parity_counts(t)
            i = ee - (1 - root_deg % 2)
            want[(i, oe // 2)] = want.get((i, oe // 2), 0) + 1
        if want != four_var_coeffs(n):
            return _fail(name, f"t-table at n={n} differs from enumeration")
    return _ok(name, f"relations for m <= {max_m}, interpretation for n <= {int_tn_max}")


def check_gamma(max_size: int = 8) -> CheckResult:
    """Gamma expansion: exact, nonnegative, equal to the active-node counts,
    with palindromic unimodal slices."""
    name = "gamma expansion: nonnegativity and active-node counts"
    example = gamma_expand(parse_multiset("1:2,2:2"))
    if example != {(1, 0): 3, (0, 0): 1, (0, 1): 8}:
        return _fail(name, f"{{1^2,2^2}} table is {example}")
    for m in iter_multisets(max_size):
        red_terms: dict[tuple[int, int, int], int] = {}
        oracle: dict[tuple[int, int], int] = {}
        for t in iter_trees(m, size_bound=max_size):
            ee, oe, odd, _, _, _ = parity_counts(t)
            key = (ee // 2, oe // 2, odd // 2)
            red_terms[key] = red_terms.get(key, 0) + 1
            act, eact, _ = active_counts(t)
            if eact == 0:
                i = ee // 2
                d = m.size // 2 - i
                if (d - act) % 2:
                    return _fail(name, f"active count parity broken on {format_tree(t)}")
                j = (d - act) // 2
                oracle[(i, j)] = oracle.get((i, j), 0) + 1
        reduced = MPoly(XYZ, red_terms)
        table = gamma_expand_poly(reduced, m.size)
        if any(v < 0 for v in table.values()):
            return _fail(name, f"{m}: negative gamma coefficient")
        if table != oracle:
            return _fail(name, f"{m}: gamma table != active-node counts")
        if gamma_from_table(table, m.size) != reduced:
            return _fail(name, f"{m}: expansion does not rebuild the polynomial")
        for i in range(reduced.degree("x") + 1):
            coeffs = slice_poly_coeffs(reduced, i)
            if not (is_palindromic(coeffs) and is_unimodal(coeffs)):
                return _fail(name, f"{m}: slice i={i} not palindromic unimodal")
    return _ok(name, f"exact nonnegative tables matching active-node counts, p <= {max_size}")


# ---------------------------------------------------------------------------
# series, closed forms, elliptic coefficients
# ---------------------------------------------------------------------------

N_DISPLAY_3 = "y+wxt+(wyz+x^2y)t^2+(w^2xz+wx^3+wxy^2+2xy^2z)t^3"


def check_series(order: int = 8, enum_max: int = 8) -> CheckResult:
    """The plane-tree generating function: display, residuals, symmetry,
    enumeration cross-check, and the kernel coefficient extraction."""
    name = "generating function: functional and algebraic equations"
    disp = format_series(plane_gf(3))
    if disp != N_DISPLAY_3:
        return _fail(name, f"display through t^3 is {disp!r}")
    n = plane_gf(order)
    for k in range(min(order, enum_max) + 1):
        hist: dict[tuple[int, int, int, int], int] = {}
        for t in iter_trees(uniform_multiset(k)):
            ee, oe, odd, oo, _, _ = parity_counts(t)
            key = (odd - oo, oe, ee, oo)  # (w, x, y, z) = (eo, oe, ee, oo)
            hist[key] = hist.get(key, 0) + 1
        if n.coeffs[k] != MPoly(("w", "x", "y", "z"), hist):
            return _fail(name, f"coefficient of t^{k} differs from enumeration")
    rep = check_algebraic_eq(order)
    if not rep["ok"]:
        return _fail(name, f"algebraic residuals: {rep}")
    lag = lagrange_series(min(order, 6))
    flat = series_to_poly5(plane_gf(min(order, 6)))
    y_term = MPoly.monomial(SERIES5_VARS, (0, 0, 1, 0, 0), 1)
    if lag != flat - y_term:
        return _fail(name, "kernel extraction does not rebuild the series minus its constant term")
    return _ok(name, f"display, zero residuals and symmetry to t^{order}, enumeration to t^{min(order, enum_max)}")


def check_closed_forms(max_edges: int = 9, ternary_max: int = 20) -> CheckResult:
    """Closed-form counts against exhaustive plane-tree enumeration."""
    name = "closed forms: parity-class counts"
    hist: Counter = Counter()
    for k in range(max_edges + 1):
        for t in iter_trees(uniform_multiset(k)):
            ee, oe, odd, oo, _, _ = parity_counts(t)
            hist[(oe, ee, oo, odd - oo)] += 1
    top = max_edges + 1
    for i in range(top + 1):
        for j in range(top + 1 - i):
            for k in range(top + 1 - i - j):
                for l in range(top + 1 - i - j - k):
                    if not 0 < i + j + k + l <= top:
                        continue
                    want = hist.get((i, j, k, l), 0)
                    if plane_tree_count(i, j, k, l) != want:
                        return _fail(name, f"closed form wrong at {(i, j, k, l)}: want {want}")
                    if six_term_count(i, j, k, l) != want:
                        return _fail(name, f"six-term form wrong at {(i, j, k, l)}")
    for i in range(5):
        for j in range(5):
            if 2 * (i + j) <= max_edges:
                want = sum(
                    c for (oe, ee, oo, eo), c in hist.items()
                    if oo + eo == 0 and oe == 2 * i and ee == 2 * j + 1
                )
                if jaco2_count(i, j) != want:
                    return _fail(name, f"zero-odd count wrong at {(i, j)}")
            if 2 * (i + j) + 2 <= max_edges:
                want = sum(
                    c for (oe, ee, oo, eo), c in hist.items()
                    if ee == 0 and oe == 2 * i + 1 and oo + eo == 2 * j + 1
                )
                if fish_count(i, j) != want:
                    return _fail(name, f"zero-ee count wrong at {(i, j)}")
            if fish_count(i, j) != fish_count(j, i):
                return _fail(name, f"fish count not symmetric at {(i, j)}")
    for nn in range(1, ternary_max + 1):
        lhs, rhs = ternary_identity(nn)
        if lhs != rhs:
            return _fail(name, f"ternary identity fails at n={nn}: {lhs} != {rhs}")
    return _ok(name, f"all classes up to {max_edges} edges, ternary identity to n={ternary_max}")


JACOBI_DISPLAYS = {
    # |u^k/k! coefficient| as polynomial in alpha^2, from the classical expansions
    "sn": {1: (1,), 3: (1, 1), 5: (1, 14, 1), 7: (1, 135, 135, 1)},
    "cn": {0: (1,), 2: (1,), 4: (1, 4), 6: (1, 44, 16)},
    # from u^4 on, the dn coefficients carry a factor alpha^2 and the
    # classical displays list the cofactor after dividing it out
    "dn": {0: (1,), 2: (0, 1), 4: (4, 1), 6: (16, 44, 1)},
}


def check_jacobi(order: int = 9, boundary_max: int = 4) -> CheckResult:
    """Taylor tables of sn/cn/dn: displayed values, sign pattern, and the
    boundary identities with the Schett coefficient tables."""
    name = "elliptic coefficients: displays and boundary identities"
    sn, cn, dn = jacobi_taylor(order)
    for k in range(order + 1):
        sign = -1 if (k // 2) % 2 else 1
        for series, fname, parity in ((sn, "sn", 1), (cn, "cn", 0), (dn, "dn", 0)):
            if k % 2 != parity:
                if series[k]:
                    return _fail(name, f"{fname} has a nonzero u^{k} coefficient")
                continue
            if any(sign * c < 0 for c in series[k]):
                return _fail(name, f"{fname} breaks the alternating sign pattern at u^{k}")
    for k, want in JACOBI_DISPLAYS["sn"].items():
        if k <= order and tuple(abs(c) for c in sn[k]) != want:
            return _fail(name, f"sn u^{k} coefficient is {sn[k]}")
    for k, want in JACOBI_DISPLAYS["cn"].items():
        if k <= order and tuple(abs(c) for c in cn[k]) != want:
            return _fail(name, f"cn u^{k} coefficient is {cn[k]}")
    for k, want in JACOBI_DISPLAYS["dn"].items():
        if k > order:
            continue
        got = dn[k]
        if k >= 4:
            if got and got[0] != 0:
                return _fail(name, f"dn u^{k} coefficient misses its alpha^2 factor")
            got = got[1:]
        if tuple(abs(c) for c in got) != want:
            return _fail(name, f"dn u^{k} cofactor is {dn[k]}")
    for nb in range(boundary_max + 1):
        if 2 * nb + 1 <= order:
            se, so = schett_coeffs(2 * nb), schett_coeffs(2 * nb + 1)
            poly = sn[2 * nb + 1]
            for j in range(nb + 1):
                v = abs(poly[j]) if j < len(poly) else 0
                if not v == se.get((0, j), 0) == so.get((0, j), 0):
                    return _fail(name, f"sn boundary fails at n={nb}, j={j}")
        if nb >= 1 and 2 * nb <= order:
            s1, s2 = schett_coeffs(2 * nb - 1), schett_coeffs(2 * nb)
            cpoly, dpoly = cn[2 * nb], dn[2 * nb]
            for i in range(nb + 1):
                cv = abs(cpoly[i]) if i < len(cpoly) else 0
                dv = abs(dpoly[nb - i]) if nb - i < len(dpoly) else 0
                if not cv == s1.get((i, 0), 0) == s2.get((i, 0), 0):
                    return _fail(name, f"cn boundary fails at n={nb}, i={i}")
                if not dv == s1.get((i, 0), 0) == s2.get((i, 0), 0):
                    return _fail(name, f"dn boundary fails at n={nb}, i={i}")
    return _ok(name, f"displays and sign pattern to u^{order}, boundary identities to n={boundary_max}")


# ---------------------------------------------------------------------------
# real-rootedness scan
# ---------------------------------------------------------------------------

def scan_real_rootedness(m: Multiset, use_grammar: bool | None = None):
    """Yield (i, coefficient list, RootReport) for every x-slice of the
    reduced Schett polynomial of m.

    Increasing-tree families use the grammar route (identical to the
    enumeration route, which the dual-path check certifies); everything
    else enumerates.
    """
    if use_grammar is None:
        use_grammar = m.multiplicities == (1,) * m.n
    if use_grammar:
        table = schett_coeffs(m.n)
        degree = max((i for i, _ in table), default=0)
        for i in range(degree + 1):
            row = {j: c for (si, j), c in table.items() if si == i}
            coeffs = [row.get(j, 0) for j in range(max(row, default=0) + 1)]
            yield i, coeffs, real_rooted(coeffs)
    else:
        reduced = reduced_schett(m)
        for i in range(reduced.degree("x") + 1):
            coeffs = slice_poly_coeffs(reduced, i)
            yield i, coeffs, real_rooted(coeffs)


def check_conjecture(max_nodes: int = 10) -> CheckResult:
    """Real-rootedness of every reduced-polynomial slice for plane and
    increasing trees with at most max_nodes nodes."""
    name = "real-rootedness: plane and increasing tree slices"
    slices = 0
    vacuous = 0
    for p in range(max_nodes):
        for m in (uniform_multiset(p), set_multiset(p)):
            for i, coeffs, report in scan_real_rootedness(m):
                if report.vacuous:
                    vacuous += 1
                    continue
                if not report.all_real:
                    return _fail(name, f"{m}, slice i={i}: {report}")
                slices += 1
            if m.size <= 1:
                break  # the two families coincide there
    return _ok(name, f"{slices} slices certified by exact root counts (nodes <= {max_nodes}; {vacuous} vacuous)")


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

def _sized(fn: Callable[[int], CheckResult], size: int) -> Callable[[], CheckResult]:
    return lambda: fn(size)


def suite_checks(max_size: int = 8, max_nodes: int = 10) -> dict[str, list[Callable[[], CheckResult]]]:
    small = min(max_size, 6)
    return {
        "counting": [_sized(check_counting, max_size)],
        "stats": [_sized(check_stat_invariants, small)],
        "hat": [_sized(check_hat, max_size)],
        "tilde": [_sized(check_tilde, max_size)],
        "symmetry": [_sized(check_symmetry, max_size)],
        "psi-theta": [_sized(check_psi_theta, small)],
        "full-degree": [_sized(check_full_degree, max_size)],
        "euler": [_sized(check_euler, min(max_size, 8))],
        "binary": [_sized(check_binary, small)],
        "action": [_sized(check_action, max_size)],
        "schett": [check_schett, check_st_relations],
        "gamma": [_sized(check_gamma, max_size)],
        "series": [_sized(check_series, min(max_size, 8))],
        "closed-forms": [lambda: check_closed_forms(max_edges=9)],
        "jacobi": [check_jacobi],
        "conjecture": [lambda: check_conjecture(max_nodes)],
    }


def run_suites(
    names: Iterable[str] | None = None,
    max_size: int = 8,
    max_nodes: int = 10,
    threads: int | None = None,
) -> list[CheckResult]:
    """Run the named suites (all by default) and return ordered results.

    Thread count comes from WITREES_THREADS when not given; checks are pure
    and independent, so fanning them out is safe, and the report order is
    fixed regardless.
    """
    table = suite_checks(max_size=max_size, max_nodes=max_nodes)
    if names is None:
        selected = list(table)
    else:
        selected = list(names)
        for n in selected:
            if n not in table:
                raise KeyError(f"unknown suite {n!r}; choose from {', '.join(table)}")
    jobs = [fn for n in selected for fn in table[n]]
    if threads is None:
        threads = int(os.environ.get("WITREES_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda f: f(), jobs))
    return [fn() for fn in jobs]
