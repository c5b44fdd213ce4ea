"""Acceptance criteria 1-8, one PASS/FAIL line each (visible with or without -s)."""

import time
from collections import Counter

from linprod import catalog
from linprod.rees import mu_check
from linprod.suites import RunConfig, run_suite

_cache = {}


def suite(name, **kw):
    key = (name, tuple(sorted(kw.items())))
    if key not in _cache:
        t0 = time.perf_counter()
        results = run_suite(RunConfig(suite=name, **kw))
        _cache[key] = (results, time.perf_counter() - t0)
    return _cache[key]


def report(capsys, number, ok, text):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {text}")


def _bad(results, names=None):
    return [r for r in results if (names is None or r.check in names) and r.verdict != "true"]


def test_criterion_1_decomposition(capsys):
    results, secs = suite("decomposition")
    rel = [r for r in results if r.check == "decomposition"]
    bad = _bad(rel)
    expected = sum(A.n for A in catalog.decomposition_catalog(6))
    ok = not bad and len(rel) == expected and secs < 300
    report(capsys, 1, ok, f"{len(rel) - len(bad)}/{len(rel)} decompositions exact in {secs:.1f}s")
    assert ok, bad[:3]


def test_criterion_2_linear_resolutions(capsys):
    results, secs = suite("resolution")
    rel = [r for r in results if r.check == "linear_resolution"]
    bad = _bad(rel)
    regs_ok = all(r.detail["regularity"] == r.params["a"] - 1 for r in rel)
    expected = sum(A.n for A in catalog.decomposition_catalog(5))
    ok = not bad and regs_ok and len(rel) == expected and secs < 600
    report(capsys, 2, ok, f"{len(rel) - len(bad)}/{len(rel)} linear with reg a-1 in {secs:.1f}s")
    assert ok, bad[:3]


def test_criterion_3_proof_identities(capsys):
    results, secs = suite("decomposition")
    names = {"colon_claim", "saturation_identity", "expansion_identity"}
    rel = [r for r in results if r.check in names]
    bad = _bad(rel)
    counts = Counter(r.check for r in rel)
    ok = not bad and set(counts) == names and secs < 300
    report(capsys, 3, ok, f"{len(rel) - len(bad)}/{len(rel)} identities hold "
                          f"({', '.join(f'{k}={v}' for k, v in sorted(counts.items()))})")
    assert ok, bad[:3]


def test_criterion_4_linear_powers(capsys):
    results, secs = suite("powers")
    powers = [r for r in results if r.check == "linear_powers"]
    regs = {(r.params["a"], r.params["e"], r.input_id): r.detail["regularity"]
            for r in results if r.check == "power_linear_resolution"}
    bad = _bad(powers) + _bad(results, {"power_linear_resolution"})
    reg22 = [v for (a, e, _), v in regs.items() if a == 2 and e == 2]
    ok = not bad and powers and reg22 and all(v == 3 for v in reg22) and secs < 600
    report(capsys, 4, ok, f"{len(powers)} power identities, reg(R/I_2^2) = {sorted(set(reg22))} "
                          f"in {secs:.1f}s")
    assert ok, bad[:3]


def test_criterion_5_rees(capsys):
    results, secs = suite("rees", with_generic5=True)
    main = {"fiber_generators", "fiber_type"}
    core = [r for r in results if r.check in main and r.input_id != "generic5"]
    slow = [r for r in results if r.check in main and r.input_id == "generic5"]
    ok = (len(core) == 4 and all(r.verdict == "true" for r in core)
          and len(slow) == 2 and all(r.verdict != "false" for r in slow) and secs < 900 + 7200)
    slow_txt = ", ".join(f"{r.check}={r.verdict}" for r in slow)
    report(capsys, 5, ok, f"generic4/near_pencil4 {sum(r.verdict == 'true' for r in core)}/4 "
                          f"exact; generic5: {slow_txt}; {secs:.1f}s")
    assert ok


def test_criterion_6_mu(capsys):
    observed = {n: mu_check(catalog.get(n)) for n in ("generic4", "near_pencil4", "generic5")}
    want = {"generic4": 6, "near_pencil4": 5, "generic5": 10}
    ok = all(observed[n]["match"] and observed[n]["observed"] == v for n, v in want.items())
    report(capsys, 6, ok, ", ".join(f"{n}={observed[n]['observed']}" for n in want))
    assert ok


def test_criterion_7_star(capsys):
    results, secs = suite("star")
    bad = _bad(results)
    counts = Counter(r.check for r in results)
    cells = {r.input_id for r in results if r.check == "alpha"}
    need = {"alpha", "power_decomposition", "containment_1", "containment_2", "containment_3",
            "alpha_inequalities"}
    ok = not bad and need <= set(counts) and len(cells) == 7 and secs < 1200
    report(capsys, 7, ok, f"{len(results) - len(bad)}/{len(results)} star checks over "
                          f"{len(cells)} cells in {secs:.1f}s")
    assert ok, bad[:3]


def test_criterion_8_self_checks(capsys):
    per_suite = {
        "decomposition": {"groebner_criterion"},
        "resolution": {"groebner_criterion", "resolution_complex", "euler_characteristic"},
        "powers": {"power_groebner_criterion", "power_resolution_complex",
                   "power_euler_characteristic"},
        "rees": {"groebner_criterion", "family_vanishing"},
        "star": {"groebner_criterion"},
    }
    problems = []
    total = 0
    for name, needed in per_suite.items():
        kw = {"with_generic5": True} if name == "rees" else {}
        results, _ = suite(name, **kw)
        present = {r.check for r in results}
        if not needed <= present:
            problems.append(f"{name} lacks {sorted(needed - present)}")
        rel = [r for r in results if r.check in needed]
        total += len(rel)
        problems.extend(f"{r.check}:{r.input_id}:{r.params}" for r in _bad(rel))
    ok = not problems
    report(capsys, 8, ok, f"{total} self-checks across {len(per_suite)} suites"
                          + (f"; {problems[:3]}" if problems else ""))
    assert ok, problems[:5]
