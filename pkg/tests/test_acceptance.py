"""Exit criteria, one test per criterion, each at its stated range.

Every test appends a PASS/FAIL line that conftest prints in the terminal
summary.
"""

import contextlib
import io
import time

from helpers import ACCEPTANCE_LINES
from oracles import pentagonal_p
from partmatrix import (
    FamilySelector,
    decode,
    encode,
    gen_partitions,
    glaisher_d_forward,
    glaisher_d_inverse,
    thm3_inverse,
    thm3_map,
    thm5_inverse,
    thm5_map,
    verify_bijection,
)
from partmatrix import identities as ids
from partmatrix.bitmatrix import family_weight
from partmatrix.cli import main

from test_cli import GOLDEN, GOLDEN_CASES


def report(number, title, failures, detail=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        shown = ", ".join(map(str, failures[:8]))
        more = f" ... +{len(failures) - 8} more" if len(failures) > 8 else ""
        line += f"; failing: {shown}{more}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_theorem1():
    anchor = ids.thm1_check(4)
    failures = [] if (anchor.lhs, anchor.rhs) == (3, 3) else ["anchor n=4"]
    failures += [n for n in range(1, 46) if not ids.thm1_check(n).passed]
    report(1, "a(n) = parts(odd) - parts(distinct), 1 <= n <= 45", failures, "anchor a(4)=3=6-3")


def test_criterion_02_theorem2():
    anchor = ids.thm2_check(5)
    failures = [] if (anchor.lhs, anchor.rhs) == (1, 1) else ["anchor n=5"]
    failures += [n for n in range(1, 46) if not ids.thm2_check(n).passed]
    report(2, "a1(n) = parts(distinct) - distinct parts(odd), 1 <= n <= 45", failures,
           "anchor n=5: 1=5-4")


def test_criterion_03_theorem3():
    failures = [(c.n, c.params["k"]) for n in range(1, 36)
                for c in ids.thm3_checks(n) if not c.passed]
    for n in range(0, 31):
        for c in ids.thm3_checks(n) if n else [ids.thm3_check(0, 0)]:
            k = c.params["k"]
            rep = verify_bijection(n, thm3_map, thm3_inverse,
                                   ids.exactly_k_distinct_even(k), ids.exactly_k_repeated(k))
            if not rep.passed:
                failures.append(("bijection", n, k))
    report(3, "k distinct evens = k repeated, n <= 35; bijection n <= 30", failures)


def test_criterion_04_theorem4():
    failures = [(n, d) for n in range(0, 41) for d in (2, 3, 5)
                if len(set(ids.glaisher_counts(n, d))) != 1]
    for d in (2, 3, 5):
        for n in range(0, 31):
            rep = verify_bijection(n, lambda lam: glaisher_d_forward(lam, d),
                                   lambda lam: glaisher_d_inverse(lam, d),
                                   ids.no_part_divisible_by(d), ids.multiplicities_below(d))
            if not rep.passed:
                failures.append(("bijection", n, d))
    report(4, "Glaisher counts equal n <= 40, d in {2,3,5}; round trip n <= 30", failures)


def test_criterion_05_theorem5():
    failures = [(c.n, c.params["k"], p) for n in range(1, 36) for p in (2, 3)
                for c in ids.thm5_checks(n, p) if not c.passed]
    for p in (2, 3):
        for sel_name, sel in (("identity", FamilySelector.identity()),
                              ("transpose", FamilySelector.transpose(p))):
            for n in range(0, 31):
                ks = {ids.high_valuation_count(lam, p) for lam in gen_partitions(n)}
                for k in sorted(ks):
                    rep = verify_bijection(n, lambda lam: thm5_map(lam, p, sel),
                                           lambda lam: thm5_inverse(lam, p, sel),
                                           ids.exactly_k_high_valuation(k, p),
                                           ids.exactly_k_high_multiplicity(k, p))
                    if not rep.passed:
                        failures.append((sel_name, n, k, p))
    report(5, "valuation >= p vs multiplicity >= 2^p, n <= 35; two selectors n <= 30", failures)


def test_criterion_06_theorem6():
    failures = []
    a5, a6 = ids.thm6_check(5), ids.thm6_check(6)
    if (a5.lhs, a5.rhs) != (1, 1):
        failures.append("anchor n=5")
    if (a6.lhs, a6.rhs) != (0, 0):
        failures.append("anchor n=6")
    for n in range(1, 46):
        c = ids.thm6_check(n)
        if not c.passed:
            failures.append(f"n={n}:{c.lhs}!={c.rhs}")
    report(6, "f(n) = parts(G) - distinct parts(H), 1 <= n <= 45", failures,
           "anchors n=5, n=6")


def test_criterion_07_decompositions():
    failures = []
    for n in range(1, 41):
        a = ids.a_exactly_one_even(n)
        if not ids.conj1_decomposed(n) == ids.conj1_split_count(n) == a:
            failures.append(("conj1", n))
        if ids.conj2_decomposed(n) != ids.a1_one_triple(n):
            failures.append(("conj2", n))
    report(7, "proof decompositions agree with a(n), a1(n), 1 <= n <= 40", failures)


def test_criterion_08_encoding():
    failures = []
    total = 0
    for n in range(0, 26):
        count = 0
        for lam in gen_partitions(n):
            family = encode(lam)
            if decode(family) != lam or family_weight(family) != n:
                failures.append(str(lam))
            count += 1
        if count != pentagonal_p(n):
            failures.append(("count", n))
        total += count
    if pentagonal_p(25) != 1958:
        failures.append("p(25)")
    report(8, "decode(encode) = id and weight kept for every partition, n <= 25", failures,
           f"p(25)=1958, {total} partitions")


def test_criterion_09_G_H_transport():
    failures = []
    for n in range(0, 36):
        rep = verify_bijection(n, lambda lam: glaisher_d_forward(lam, 2),
                               lambda lam: glaisher_d_inverse(lam, 2), ids.H, ids.G)
        if not rep.passed:
            failures.append(n)
    report(9, "Glaisher d=2 maps H(n) onto G(n), n <= 35", failures)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def test_criterion_10_cli_contract():
    failures = []
    for name, argv in GOLDEN_CASES:
        _, first = _cli(*argv)
        _, second = _cli(*argv)
        if first != (GOLDEN / name).read_text() or first != second:
            failures.append(f"golden {name}")
    for argv in (["check", "--theorem", "4", "--max-n", "10", "--d", "1"],
                 ["map", "--bijection", "glaisher", "--partition", "2,2"],
                 ["sequences", "--max-n", "3", "--columns", "nope"],
                 ["enumerate", "--n", "3", "--class", "nope"]):
        if _cli(*argv)[0] != 2:
            failures.append(f"exit!=2 {' '.join(argv)}")
    if _cli("check", "--theorem", "6", "--max-n", "7")[0] != 1:
        failures.append("exit!=1 on a failing identity")

    # full default suite; exit code must reflect the identity verdicts
    start = time.perf_counter()
    codes = {t: _cli("check", "--theorem", str(t))[0] for t in range(1, 7)}
    elapsed = time.perf_counter() - start
    t6_holds = all(ids.thm6_check(n).passed for n in range(1, 46))
    expected = {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0 if t6_holds else 1}
    if codes != expected:
        failures.append(f"default suite exit codes {codes}")
    if elapsed >= 600:
        failures.append(f"default suite took {elapsed:.0f}s")
    report(10, "CLI exit codes, golden outputs, default suite < 10 min", failures,
           f"default suite {elapsed:.0f}s, exit codes {codes}")
