"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line naming its criterion (visible
with ``pytest -s`` or ``-v``) before asserting.  All comparisons are exact.
"""

import io
import json
import os
import subprocess
import sys
import time
from fractions import Fraction as F

import numeric_oracle as oracle
from degbern import codec
from degbern.bernoulli import beta_deg_number, classical_bernoulli_gf
from degbern.cli import FAMILIES, main
from degbern.identities import CONTROLS, Limits, run_identity, run_suite, suite_passed
from degbern.polybern import check_polylog_log_bridge
from degbern.rings import LAM

DEFAULT = Limits(n_max=10, r_max=4, p_min=-3, p_max=3)


class Criterion:
    def __init__(self, capsys, number, name):
        self.capsys, self.number, self.name = capsys, number, name
        self.failed = []

    def check(self, label, ok):
        if not ok:
            self.failed.append(label)

    def reports(self, label, reports):
        for r in reports:
            self.check(f"{label}:{r.id}", r.passed and r.points > 0)
        self.check(f"{label}:nonempty", bool(reports))

    def finish(self):
        status = "PASS" if not self.failed else "FAIL"
        detail = "" if not self.failed else "  [" + ", ".join(self.failed) + "]"
        with self.capsys.disabled():
            print(f"\n{status} criterion {self.number}: {self.name}{detail}")
        assert not self.failed


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue()


def test_criterion_1_defining_relations(capsys):
    c = Criterion(capsys, 1, "defining relations exact for n <= 10, r <= 4 in under 5 s")
    start = time.perf_counter()
    reports = run_suite("defining", DEFAULT)
    elapsed = time.perf_counter() - start
    c.reports("defining", reports)
    c.check("two relations", sorted(r.id for r in reports) == ["defining.r_stirling", "defining.stirling"])
    c.check(f"runtime {elapsed:.2f}s", elapsed < 5)
    c.finish()


def test_criterion_2_bernoulli_routes(capsys):
    c = Criterion(capsys, 2, "Bernoulli routes agree for n <= 10, r <= 4; first values 1, -1/2, 1/6 + l/2")
    for prefix in ("bernoulli.number.", "bernoulli.at_r.", "bernoulli.poly."):
        c.reports(prefix, run_suite(prefix, DEFAULT))
    first = [beta_deg_number(n) for n in range(3)]
    c.check("first values", first == [1, F(-1, 2), F(1, 6) + LAM / 2])
    # brute-force coefficient extraction at numeric lambda
    for lam in (F(1, 2), F(-3), F(7, 5)):
        c.check(f"oracle at {lam}", [v.evaluate(l=lam) for v in first]
                == [oracle.fully_degenerate_bernoulli(n, lam) for n in range(3)])
    c.finish()


def test_criterion_3_stirling_routes(capsys):
    c = Criterion(capsys, 3, "Stirling routes agree for n <= 10; set-partition oracle at l = 0 for n <= 8")
    for case in ("stirling.gf", "rstirling.gf", "rstirling.convolution", "stirling_poly.forms", "stirling_poly.gf"):
        c.reports(case, [run_identity(case, DEFAULT)])
    for case in ("stirling.set_partitions", "rstirling.set_partitions"):
        report = run_identity(case, DEFAULT)
        c.reports(case, [report])
    c.check("partition sweep reaches n = 8", run_identity("stirling.set_partitions", DEFAULT).points == 45)
    c.finish()


def test_criterion_4_fubini_chain(capsys):
    c = Criterion(capsys, 4, "Fubini gf for n <= 8; negated sums and integrated Fubini reproduce Bernoulli for n <= 10")
    c.reports("gf", [run_identity("fubini.gf", Limits(n_max=8))])
    fubini_rest = [r for r in run_suite("fubini.", DEFAULT) if r.id != "fubini.gf"]
    c.reports("chain", fubini_rest)
    c.check("integrated cases present", {"fubini.integrated", "fubini.integrated_shift", "fubini.integrated_poly"}
            <= {r.id for r in fubini_rest})
    c.finish()


def test_criterion_5_poly_bernoulli(capsys):
    c = Criterion(capsys, 5, "poly-Bernoulli gf and three closed forms for p in -3..3, n <= 8, r <= 3; bridges; under 30 s")
    limits = Limits(n_max=8, r_max=3, p_min=-3, p_max=3)
    start = time.perf_counter()
    reports = run_suite("poly_bernoulli.", limits)
    bridge = check_polylog_log_bridge(10)
    elapsed = time.perf_counter() - start
    c.reports("poly_bernoulli", reports)
    c.reports("polylog", [bridge, run_identity("polylog.log_bridge", DEFAULT)])
    ids = {r.id for r in reports}
    for needed in ("stirling_poly_form", "falling_form", "stirling_form", "negative_argument",
                   "negative_argument_convolution", "carlitz_bridge"):
        c.check(f"has {needed}", f"poly_bernoulli.{needed}" in ids)
    c.check(f"runtime {elapsed:.2f}s", elapsed < 30)
    c.finish()


def test_criterion_6_classical_limit(capsys):
    c = Criterion(capsys, 6, "l -> 0 gives classical Bernoulli polynomials for n <= 10; B1 = -1/2, B2(1/2) = -1/12")
    c.reports("limit", [run_identity("bernoulli.classical_limit", DEFAULT)])
    classical = classical_bernoulli_gf(2)
    c.check("B1", classical[1].evaluate(x=0) == F(-1, 2))
    c.check("B2(1/2)", classical[2].evaluate(x=F(1, 2)) == F(-1, 12))
    code, out = cli("eval", "--family", "beta_poly", "--n", "2", "--lambda", "0", "--x", "1/2")
    c.check("cli B2(1/2)", code == 0 and out == "-1/12\n")
    c.finish()


MINIMAL_POINTS = {
    "control.stirling_ordinary_powers": {"n": 2, "k": 1},
    "control.bernoulli_sign_flip": {"n": 0},
    "control.carlitz_unshifted": {"n": 1},
}


def test_criterion_7_negative_controls(capsys):
    c = Criterion(capsys, 7, "corrupted identities fail at minimal points; exit code separates pass from fail")
    c.check("at least two controls", len(CONTROLS) >= 2)
    for case_id in sorted(CONTROLS):
        report = run_identity(case_id, DEFAULT)
        c.check(f"{case_id} fails", report.status == "fail")
        c.check(f"{case_id} minimal", report.counterexample and report.counterexample["point"] == MINIMAL_POINTS[case_id])
    c.check("suite verdict", not suite_passed(run_suite("control", Limits(n_max=4), include_controls=True)))
    c.check("exit 1 with controls", cli("check", "--filter", "control", "--inject-failure", "--n-max", "4")[0] == 1)
    c.check("exit 0 when clean", cli("check", "--filter", "stirling.", "--n-max", "6")[0] == 0)
    c.finish()


def test_criterion_8_determinism_round_trip(capsys):
    c = Criterion(capsys, 8, "byte-identical CLI output across runs; JSON tables re-parse losslessly")
    for family, fam in sorted(FAMILIES.items()):
        argv = ["table", "--family", family, "--n-max", "5"]
        if fam.needs_r:
            argv += ["--r", "3"]
        if fam.needs_p:
            argv += ["--p", "2"]
        first, second = cli(*argv), cli(*argv)
        c.check(f"{family} identical", first == second)
        rows = json.loads(first[1])["rows"]
        flat = [v for row in rows for v in row] if fam.triangular else rows
        c.check(f"{family} round trip", all(codec.encode_poly(codec.decode_poly(v)) == v for v in flat))
        csv_runs = cli(*argv, "--format", "csv"), cli(*argv, "--format", "csv")
        c.check(f"{family} csv identical", csv_runs[0] == csv_runs[1])
    check_argv = ("check", "--filter", "bernoulli.number", "--no-timing")
    c.check("check identical", cli(*check_argv) == cli(*check_argv))
    # separate processes with different hash seeds
    argv = [sys.executable, "-m", "degbern", "table", "--family", "fubini", "--n-max", "4"]
    outputs = {subprocess.run(argv, capture_output=True, env={**os.environ, "PYTHONHASHSEED": seed},
                              check=False).stdout for seed in ("1", "2")}
    c.check("cross-process identical", len(outputs) == 1)
    c.finish()


def test_full_suite_under_a_minute(capsys):
    c = Criterion(capsys, "suite", "whole catalog passes at default limits in under 60 s, cold process")
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "degbern", "check", "--no-timing"],
                          capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - start
    docs = [json.loads(line) for line in proc.stdout.splitlines()]
    c.check("exit 0", proc.returncode == 0)
    c.check("all pass", bool(docs) and all(d["status"] == "pass" for d in docs))
    c.check(f"runtime {elapsed:.2f}s", elapsed < 60)
    c.finish()
