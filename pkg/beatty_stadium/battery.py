"""
battery.py
==========

Verification battery for **beatty-stadium**.

The `VerificationBattery` class runs every criterion of the package against
the brute-force oracles and reports one `CheckResult` per check:

1. Beatty partition of the positive integers by S(phi) and S(phi^2), plus
   Beatty's (1 + w, 1 + 1/w) pairing.
2. Skolem: the golden-ratio exception and random complementary pairs.
3. Fraenkel: exhaustive sweep of rational complementary moduli over the
   offset grid of step ``1/(2 r s (r - s))``.
4. The equivalent position conditions on the same sweep.
5. Relocation to a common starting point.
6. Rational coprimality against the exhaustive rational oracle.
7. Integer coprimality (gcd) against the rational test, with witnesses.
8. The gamma criterion for irrationals of rational ratio.
9. Rational gamma below 2.
10. Stadium simulation against closed-form generation, and domain
    occupancy against membership.
11. The exact kernel against a 200-bit interval enclosure.

Plus the geometry of the golden-ratio exception and the disjointness
necessary condition, which carry explanatory notes.

Outputs
-------
- `<output_dir>/battery.json` and `<output_dir>/battery.md`
- a `run_log.json` entry when a log directory is configured

Typical Usage
-------------
>>> from beatty_stadium.battery import VerificationBattery
>>> results = VerificationBattery(scale="quick", output_dir="output").run()
>>> all(r.passed for r in results)
True
"""

import random
import time
from fractions import Fraction
from math import floor, gcd

from . import config, logs
from .criteria import (
    common_start,
    complementary,
    complementary_from_w,
    corollary_predicts_partition,
    fraenkel_condition,
    lemma_conditions,
    relocate_common_start,
    skolem_classify,
)
from .data_model import EVENTUAL, MN_WITNESS, CheckResult
from .disjointness import (
    crt_coprime,
    crt_witness,
    gamma_offset_scan,
    gamma_witness,
    jrt_coprime,
    remark_holds,
    skolem_necessary,
)
from .errors import BeattyError
from .exact import as_exact, compare, golden_ratio
from .exporters import export_battery_json, export_battery_report
from .oracle import (
    disjoint_window,
    first_intersection,
    interval_compare_agrees,
    interval_floor_agrees,
    rational_disjoint_oracle,
    rational_disjoint_witness,
    verify_eventual,
    verify_partition,
    window_report,
)
from .parsing import parse_real
from .sampling import (
    random_exact,
    random_multi,
    random_quadratic,
    random_skolem_case,
    random_stadium,
    random_w,
)
from .sequences import equal_rational, generate, index_range, seq
from .stadium import (
    StadiumConfig,
    domain_occupancy,
    meeting_point,
    position_x,
    position_y,
    positions_multi,
    records_by_athlete,
    simulate_multi,
    simulate_two,
)

MAX_REPORTED_FAILURES = 5


class _Tally:
    """Case counter for one check; keeps the first few failure descriptions."""

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failed = 0
        self.failures = []
        self.notes = []

    def record(self, ok, what, weight=1):
        self.cases += weight
        if ok:
            return
        self.failed += weight
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(what if isinstance(what, str) else what())

    def result(self, seconds):
        if self.failed > len(self.failures):
            self.notes.append(f"{self.failed} failing cases in total")
        return CheckResult(self.name, self.cases > 0 and self.failed == 0,
                           self.cases, self.failures, seconds, self.notes)


def _events_as_pairs(events):
    return [(e.index, e.recorded) for e in events]


def _closed_form(s, t_lo, t_hi):
    n_lo, n_hi = index_range(s, t_lo, t_hi)
    if n_lo >= n_hi:
        return []
    return generate(s, n_lo, n_hi - 1)


def _passes_origin(c, e):
    pos = position_x(c, e.time) if e.athlete == "X" else position_y(c, e.time)
    return pos == 0


def _meets_predecessor(c, e):
    j = c.names.index(e.athlete) + 1
    pos = positions_multi(c, e.time)
    return pos[j] == pos[j - 1]


class VerificationBattery:
    """
    Runs every criterion against the oracles at a given scale.
    """

    def __init__(self, scale="quick", seed=config.RANDOM_SEED, output_dir=None,
                 log_dir=None, progress=False):
        """
        Parameters
        ----------
        scale : str
            Key of `config.SCALES` (``quick`` or ``full``).
        seed : int
            Seed of every random sample.
        output_dir : str, optional
            Where `battery.json` / `battery.md` go; nothing is written if None.
        log_dir : str, optional
            Run log directory (default: ``BEATTY_LOG_DIR``).
        progress : bool
            Show tqdm bars on the long window scans.
        """
        if scale not in config.SCALES:
            raise ValueError(f"unknown scale {scale!r}; expected one of {sorted(config.SCALES)}")
        self.scale = scale
        self.params = config.SCALES[scale]
        self.seed = seed
        self.output_dir = output_dir
        self.log_dir = log_dir or config.log_dir()
        self.progress = progress
        self.results = []

        logs.info(f"Battery scale: {scale}, seed: {seed}")
        if output_dir:
            logs.info(f"Output dir: {output_dir}")

    def _rng(self, salt):
        # one stream per check, so checks stay reproducible in isolation
        return random.Random(f"{self.seed}:{salt}")

    # ---------------------------
    # 1. Beatty
    # ---------------------------
    def check_beatty(self):
        t = _Tally("beatty_partition")
        phi = golden_ratio()
        n = self.params["beatty_n"]
        report = window_report([seq(phi), seq(phi * phi)], 1, n + 1,
                               chunk=10**4, progress=self.progress)
        t.record(report.clean, lambda: f"missing {report.missing[:5]}, repeated {report.repeated[:5]}")

        rng = self._rng("beatty")
        for _ in range(self.params["complementary_w"]):
            w = random_w(rng)
            a1, a2 = complementary_from_w(w)
            ok = complementary(a1, a2) and verify_partition([seq(a1), seq(a2)], 1, 1000)
            t.record(ok, lambda: f"w = {w}")
        t.notes.append(f"S(phi), S(phi^2) cover 1..{n} exactly once")
        return [t]

    # ---------------------------
    # 2. Skolem
    # ---------------------------
    def check_skolem(self):
        t = _Tally("skolem_classification")
        phi = golden_ratio()
        lo, hi = self.params["skolem_window"]
        report = window_report([seq(phi), seq(phi * phi)], lo, hi)
        ok = report.repeated == [(0, 2)] and report.missing == [-1]
        t.record(ok, lambda: f"golden pair anomalies {report.repeated}, {report.missing}")
        verdict = skolem_classify(seq(phi), seq(phi * phi))
        t.record(verdict.kind == EVENTUAL and verdict.n0 == 0,
                 lambda: f"golden pair verdict {verdict.to_dict()}")

        rng = self._rng("skolem")
        kinds = {}
        for _ in range(self.params["skolem_pairs"]):
            s1, s2 = random_skolem_case(rng)
            exact = skolem_classify(s1, s2)
            found = verify_eventual(s1, s2, lo, hi)
            kinds[exact.kind] = kinds.get(exact.kind, 0) + 1
            ok = exact.kind == found.kind and exact.n0 == found.n0
            t.record(ok, lambda: f"{s1}, {s2}: criterion {exact.kind}, window {found.kind}")
        t.notes.append(f"verdicts sampled: {dict(sorted(kinds.items()))}")
        return [t]

    # ---------------------------
    # 3-5. Fraenkel, position conditions, relocation
    # ---------------------------
    def check_fraenkel(self):
        """
        The criterion and the oracle depend on the offsets only through
        ``c1 = floor(s*beta1)`` and ``c2 = floor((r-s)*beta2)``; every grid
        class is evaluated once at its left end and weighted by the number of
        grid points it holds. The position conditions are evaluated at every
        grid point for ``r <= lemma_grid_r_max`` and per class above that.
        """
        sweep = _Tally("fraenkel_equivalence")
        lemma = _Tally("position_conditions")
        reloc = _Tally("relocation_corollary")
        lo, hi = self.params["fraenkel_window"]
        grid_r_max = self.params["lemma_grid_r_max"]

        for r in range(2, self.params["fraenkel_r_max"] + 1):
            for s in range(1, r):
                if gcd(r, s) != 1:
                    continue
                a1, a2 = Fraction(r, s), Fraction(r, r - s)
                weight = (2 * r * (r - s)) * (2 * r * s)
                truths = {}
                for c1 in range(r):
                    b1 = Fraction(c1, s)
                    for c2 in range(r):
                        b2 = Fraction(c2, r - s)
                        truth = verify_partition([seq(a1, b1), seq(a2, b2)], lo, hi)
                        truths[c1, c2] = truth
                        self._fraenkel_case(sweep, lemma if r > grid_r_max else None, reloc,
                                            r, s, b1, b2, truth, weight)
                if r <= grid_r_max:
                    self._lemma_grid(lemma, r, s, truths)

        rng = self._rng("fraenkel")
        for _ in range(self.params["fraenkel_spot_checks"]):
            r = rng.randint(2, self.params["fraenkel_r_max"])
            s = rng.choice([x for x in range(1, r) if gcd(r, x) == 1])
            h = Fraction(1, 2 * r * s * (r - s))
            b1 = h * rng.randrange(2 * r * r * (r - s))
            b2 = h * rng.randrange(2 * r * r * s)
            truth = verify_partition([seq(Fraction(r, s), b1), seq(Fraction(r, r - s), b2)], lo, hi)
            sweep.record(fraenkel_condition(r, s, b1, b2) == truth,
                         lambda: f"spot check r={r}, s={s}, beta=({b1}, {b2})")
        if self.params["fraenkel_spot_checks"]:
            sweep.notes.append(f"{self.params['fraenkel_spot_checks']} random grid points re-checked directly")
        sweep.notes.append(f"r <= {self.params['fraenkel_r_max']}, window [{lo}, {hi})")
        lemma.notes.append(f"every grid point for r <= {grid_r_max}, one point per class above")
        return [sweep, lemma, reloc]

    def _fraenkel_case(self, sweep, lemma, reloc, r, s, b1, b2, truth, weight):
        where = f"r={r}, s={s}, beta=({b1}, {b2})"
        sweep.record(fraenkel_condition(r, s, b1, b2) == truth, lambda: f"{where}: oracle {truth}", weight)

        if lemma is not None:
            conds = lemma_conditions(r, s, b1, b2)
            lemma.record(all(v == truth for v in conds.values()), lambda: f"{where}: {conds} vs {truth}", weight)

        if not truth:
            return
        a1, a2 = Fraction(r, s), Fraction(r, r - s)
        for nu in config.RELOCATION_NUS:
            n1, n2 = relocate_common_start(r, s, b1, b2, nu)
            ok = (common_start(r, s, n1, n2)
                  and equal_rational(seq(a1, b1), seq(a1, n1))
                  and equal_rational(seq(a2, b2), seq(a2, n2))
                  and corollary_predicts_partition(r, s, n1, n2) is True)
            reloc.record(ok, lambda: f"{where}, nu={nu} -> ({n1}, {n2})", weight)

    def _lemma_grid(self, lemma, r, s, truths):
        # Grid step 1/(2rs(r-s)) over beta1 in [0, r/s), beta2 in [0, r/(r-s)).
        h = Fraction(1, 2 * r * s * (r - s))
        for i in range(2 * r * r * (r - s)):
            b1 = h * i
            c1 = floor(s * b1)
            for j in range(2 * r * r * s):
                b2 = h * j
                truth = truths[c1, floor((r - s) * b2)]
                conds = lemma_conditions(r, s, b1, b2)
                lemma.record(all(v == truth for v in conds.values()),
                             lambda: f"r={r}, s={s}, beta=({b1}, {b2}): {conds} vs {truth}")

    # ---------------------------
    # 6-7. Rational and integer coprimality
    # ---------------------------
    def check_jrt(self):
        t = _Tally("rational_coprimality")
        m = self.params["jrt_max"]
        moduli = sorted({Fraction(p, q) for p in range(1, m + 1) for q in range(1, m + 1)})
        for x in moduli:
            for y in moduli:
                exact = jrt_coprime(x, y)[0]
                t.record(exact == rational_disjoint_oracle(x, y),
                         lambda: f"({x}, {y}): criterion says coprime={exact}")
        t.notes.append(f"all reduced p/q with p, q <= {m}: {len(moduli)} moduli")
        return [t]

    def check_crt(self):
        t = _Tally("integer_coprimality")
        lo, hi = self.params["crt_window"]
        n_max = self.params["crt_max"]
        for n in range(1, n_max + 1):
            for m in range(1, n_max + 1):
                ok = crt_coprime(n, m) == jrt_coprime(n, m)[0]
                witness = crt_witness(n, m)
                if witness is not None:
                    ok = ok and not disjoint_window(seq(n, witness[0]), seq(m, witness[1]), lo, hi)
                t.record(ok, lambda: f"({n}, {m})")
        return [t]

    # ---------------------------
    # 8-9. Gamma criterion
    # ---------------------------
    def check_gamma(self):
        t = _Tally("gamma_criterion")
        window = self.params["gamma_window"]
        for literal in config.GAMMAS_ABOVE_TWO:
            gamma = parse_real(literal)
            for r, s in config.GAMMA_PAIRS:
                msg = ""
                try:
                    gamma_witness(gamma, r, s, window=window)
                    ok = True
                except BeattyError as e:
                    ok, msg = False, str(e)
                t.record(ok, lambda: f"gamma={gamma}, (r, s)=({r}, {s}): {msg}")

        samples = self.params["gamma_samples"]
        for literal in config.GAMMAS_BELOW_TWO:
            gamma = parse_real(literal)
            for r, s in config.GAMMA_PAIRS:
                scan = gamma_offset_scan(gamma, r, s, samples=samples, window=window)
                misses = [b for b, hit in scan if hit is None]
                t.record(not misses, lambda: f"gamma={gamma}, (r, s)=({r}, {s}): no common value for beta2 {misses[:3]}")
        t.notes.append(f"{samples} offsets per gamma < 2, window {window}")
        return [t]

    def check_remark(self):
        t = _Tally("rational_gamma_below_two")
        rng = self._rng("remark")
        m = self.params["remark_max"]
        pairs = [(r, s) for r in range(1, m + 1) for s in range(1, m + 1) if gcd(r, s) == 1]
        for _ in range(self.params["remark_samples"]):
            den = rng.choice(config.REMARK_DENOMINATORS)
            gamma = Fraction(rng.randrange(1, 2 * den), den)
            for r, s in pairs:
                t.record(remark_holds(gamma, r, s), lambda: f"gamma={gamma}, (r, s)=({r}, {s})")

        # The statement needs the denominator of gamma prime to r*s.
        gamma = Fraction(19, 10)
        counter = rational_disjoint_witness(gamma, 2 * gamma)
        if not remark_holds(gamma, 1, 2) and counter is not None:
            t.notes.append(f"gamma = 19/10, (r, s) = (1, 2) is not coprime: disjoint offsets "
                           f"({counter[0]}, {counter[1]})")
        else:
            t.record(False, "gamma = 19/10, (r, s) = (1, 2) expected to admit disjoint offsets")
        return [t]

    # ---------------------------
    # 10. Stadium
    # ---------------------------
    def check_simulation(self):
        """
        Simulated passages must sit where the motion puts them (the runner at
        O, or level with the athlete it overtakes) and must record the same
        indices and values as the closed form.
        """
        t = _Tally("stadium_simulation")
        rng = self._rng("simulation")
        n_events = self.params["sim_events"]
        fewest = None
        non_complementary = 0
        for _ in range(self.params["sim_configs"]):
            c = random_stadium(rng, complementary=rng.random() < 0.5)
            non_complementary += not c.is_complementary()
            t_lo = rng.randint(-n_events, 0)
            t_hi = t_lo + n_events + 4
            events = simulate_two(c, t_lo, t_hi)
            fewest = len(events) if fewest is None else min(fewest, len(events))
            x = [e for e in events if e.athlete == "X"]
            y = [e for e in events if e.athlete == "Y"]
            s1, s2 = c.sequences()
            ok = (all(_passes_origin(c, e) for e in events)
                  and _events_as_pairs(x) == _closed_form(s1, t_lo, t_hi)
                  and _events_as_pairs(y) == _closed_form(s2, t_lo, t_hi))
            t.record(ok, lambda: f"two athletes {s1}, {s2} on [{t_lo}, {t_hi})")

        for _ in range(self.params["multi_configs"]):
            c = random_multi(rng)
            rate = sum((alpha.reciprocal() for alpha, _ in c.athletes), as_exact(0))
            span = (n_events / rate).ceil() + 8
            events = simulate_multi(c, -span // 2, span - span // 2)
            fewest = len(events) if fewest is None else min(fewest, len(events))
            by_name = {}
            for e in events:
                by_name.setdefault(e.athlete, []).append(e)
            ok = all(_meets_predecessor(c, e) for e in events) and all(
                _events_as_pairs(by_name.get(name, [])) == _closed_form(s, -span // 2, span - span // 2)
                for name, s in zip(c.names, c.sequences())
            )
            t.record(ok, lambda: f"{len(c.athletes)} athletes, base speed {c.base_speed}")
        if fewest is not None:
            t.notes.append(f"fewest events in one run: {fewest}")
        t.notes.append(f"{non_complementary} of {self.params['sim_configs']} two-athlete runs non-complementary")

        occ = _Tally("domain_occupancy")
        lo, hi = self.params["occupancy_window"]
        for _ in range(self.params["occupancy_configs"]):
            c = random_stadium(rng)
            s1, s2 = c.sequences()
            bad = [k for k in range(lo, hi)
                   if domain_occupancy(c, k) != (s1.multiplicity(k) > 0, s2.multiplicity(k) > 0)]
            occ.record(not bad, lambda: f"{s1}, {s2}: occupancy differs at {bad[:5]}")
        return [t, occ]

    def check_geometry(self):
        """The golden-ratio athletes start together at O; recorded values follow."""
        t = _Tally("exceptional_geometry")
        phi = golden_ratio()
        c = StadiumConfig(phi, phi * phi)
        t.record(c.d0 == 0, f"d0 = {c.d0}")
        t.record(meeting_point(c, 0) == 0, "athletes do not meet at O at t = 0")
        t.record(meeting_point(c, -1) == c.edge_point, "athletes do not meet at E at t = -1")
        t.record(domain_occupancy(c, 0) == (True, True), "both domains should be occupied at t = 0")
        t.record(domain_occupancy(c, -1) == (False, False), "no domain should be occupied at t = -1")
        recorded = records_by_athlete(simulate_two(c, -1, 1))
        t.record(recorded == {"X": [0], "Y": [0]}, lambda: f"records near 0: {recorded}")
        return [t]

    # ---------------------------
    # Disjointness necessary condition
    # ---------------------------
    def check_necessary(self):
        t = _Tally("disjointness_necessary_condition")
        phi = golden_ratio()
        lo, hi = self.params["crt_window"]

        disjoint = (seq(2 * phi, phi), seq(2 * phi * phi))
        finding = skolem_necessary(*disjoint)
        t.record(finding.kind == MN_WITNESS and (finding.m, finding.n) == (2, 2),
                 lambda: f"S(2phi, phi), S(2phi^2): {finding.to_dict()}")
        t.record(not disjoint_window(*disjoint, lo, hi), "S(2phi, phi), S(2phi^2) meet")

        # condition holds, sequences still meet at 0
        meeting = (seq(2 * phi), seq(2 * phi * phi))
        finding = skolem_necessary(*meeting)
        hit = first_intersection(*meeting, lo, hi)
        if finding.kind == MN_WITNESS and hit == 0:
            t.notes.append("S(2phi), S(2phi^2) satisfy the necessary condition with (m, n) = (2, 2) "
                           "yet share 0: the condition is not sufficient")
        else:
            t.record(False, lambda: f"S(2phi), S(2phi^2): {finding.kind}, first common value {hit}")
        return [t]

    # ---------------------------
    # 11. Exact kernel
    # ---------------------------
    def check_kernel(self):
        t = _Tally("exact_kernel")
        rng = self._rng("kernel")
        undecided = 0
        for _ in range(self.params["kernel_samples"]):
            x = random_exact(rng)
            y = random_quadratic(rng, x.d) if x.is_irrational() else random_exact(rng)
            floor_ok = interval_floor_agrees(x)
            compare_ok = interval_compare_agrees(x, y)
            frac = x.fr()
            ok = floor_ok is True and compare_ok is True and 0 <= frac < 1 and compare(x, x.floor() + frac) == 0
            if floor_ok is None or compare_ok is None:
                undecided += 1
            t.record(ok, lambda: f"x = {x}, y = {y}")
        if undecided:
            t.notes.append(f"{undecided} undecided enclosures")
        return [t]

    # ---------------------------
    # Driver
    # ---------------------------
    def run(self):
        """Run every check; export and log when configured. Returns the CheckResults."""
        start_time = time.time()
        checks = [
            self.check_beatty,
            self.check_skolem,
            self.check_fraenkel,
            self.check_jrt,
            self.check_crt,
            self.check_gamma,
            self.check_remark,
            self.check_simulation,
            self.check_geometry,
            self.check_necessary,
            self.check_kernel,
        ]
        self.results = []
        for check in checks:
            t0 = time.time()
            tallies = check()
            seconds = time.time() - t0
            for tally in tallies:
                result = tally.result(seconds / len(tallies))
                self.results.append(result)
                status = logs.ok if result.passed else logs.warn
                status(f"{result.name}: {result.cases} cases, {len(result.failures)} failures shown "
                       f"({result.seconds:.2f}s)")

        elapsed = time.time() - start_time
        passed = sum(r.passed for r in self.results)
        meta = {"scale": self.scale, "seed": self.seed}
        if self.output_dir:
            export_battery_json(self.results, self.output_dir, meta=meta)
            export_battery_report(self.results, self.output_dir, meta=meta)
        if self.log_dir:
            logs.append_run_log(self.log_dir, "battery", meta,
                                status="ok" if passed == len(self.results) else "failed",
                                seconds=elapsed)
        logs.summary(f"{passed}/{len(self.results)} checks passed")
        logs.summary(f"Runtime: {elapsed:.2f} seconds")
        return self.results
