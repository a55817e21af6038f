"""Verification suites: exact identities checked on finite instances."""
from __future__ import annotations

from dataclasses import dataclass, field

from .address import verify_decomposition
from .counting import DEFAULT_BUDGET, count_pi_star, count_pi_star_signed, count_union
from .links import Composite, Link, Model
from .oracle import brute_count, brute_members
from .words import catalan_words, enumerate_pair_matched, l0, sign_vectors

SUITES = ("counting-oracle", "decomposition", "lemmas", "all")

# witness grids for the sign-class limits
DECAY_SIZES = (10, 40)
L0_SIZE = 80
WIGNER_SIZE = 80
LIMIT_TOL = 0.05


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "n_checks": len(self.checks),
            "first_failure": self.first_failure.name if self.first_failure else None,
            "checks": [vars(c) for c in self.checks],
        }


def counting_oracle_suite(max_n: int = 6, max_t: int = 2, budget=DEFAULT_BUDGET) -> list[Check]:
    checks = []
    for t in range(1, max_t + 1):
        for w in enumerate_pair_matched(t):
            for link in Link:
                for n in range(1, max_n + 1):
                    got, want = count_pi_star(link, n, w, budget).count, brute_count(link, n, w)
                    checks.append(Check(f"count {link.value} {w} n={n}", got == want, f"{got} vs brute {want}"))
            for link in (Link.SYM_TOEPLITZ, Link.WIGNER):
                for n in range(1, min(max_n, 4) + 1):
                    classes = {}
                    for l in sign_vectors(t):
                        classes[l] = brute_members(link, n, w, l)
                        got = count_pi_star_signed(link, n, w, l, budget).count
                        checks.append(Check(f"signed {link.value} {w} n={n} l={l}", got == len(classes[l]),
                                            f"{got} vs brute {len(classes[l])}"))
                    union = set().union(*classes.values())
                    unsigned = brute_members(link, n, w)
                    checks.append(Check(f"union {link.value} {w} n={n}", union == unsigned,
                                        f"|union| {len(union)}, |unsigned| {len(unsigned)}"))
                    via_kernel = count_union(link, n, w, sign_vectors(t), budget)
                    checks.append(Check(f"union-count {link.value} {w} n={n}", via_kernel == len(unsigned),
                                        f"{via_kernel} vs {len(unsigned)}"))
    for model in Model:
        for k in (1, 2, 3):
            for n in (1, 2):
                link = Composite(model, k, n)
                for t in range(1, min(max_t, 2) + 1):
                    for w in enumerate_pair_matched(t):
                        got = count_pi_star(link, n * k, w, budget).count
                        want = brute_count(link, n * k, w)
                        checks.append(Check(f"count {model.value}(k={k},n={n}) {w}", got == want,
                                            f"{got} vs brute {want}"))
    return checks


def decomposition_suite(sizes=range(2, 7), max_t: int = 2) -> list[Check]:
    checks = []
    for model in Model:
        for t in range(1, max_t + 1):
            for w in enumerate_pair_matched(t):
                for n in sizes:
                    for k in sizes:
                        r = verify_decomposition(w, n, k, model)
                        detail = "; ".join(r.failures) or (
                            f"count {r.composite_count}, sandwich {r.sandwich['lower']}..{r.sandwich['upper']}")
                        checks.append(Check(f"decomposition {model.value} {w} n={n} k={k}", r.passed, detail))
    return checks


def witness_suite(budget=DEFAULT_BUDGET) -> list[Check]:
    """Limits of signed classes checked on fixed grids with exact counts."""
    checks = []
    w = "abab"
    small, large = DECAY_SIZES
    for l in sign_vectors(2):
        if l == l0(2):
            continue
        a = count_pi_star_signed(Link.SYM_TOEPLITZ, small, w, l, budget).normalized
        b = count_pi_star_signed(Link.SYM_TOEPLITZ, large, w, l, budget).normalized
        checks.append(Check(f"sign-decay toeplitz {w} l={l}", b < 0.5 * a,
                            f"k={small}: {a:.5f}, k={large}: {b:.5f}"))

    for t in (1, 2):
        for word in enumerate_pair_matched(t):
            signed = count_pi_star_signed(Link.SYM_TOEPLITZ, L0_SIZE, word, l0(t), budget).normalized
            unsigned = count_pi_star(Link.SYM_TOEPLITZ, L0_SIZE, word, budget).normalized
            checks.append(Check(f"l0-dominance toeplitz {word}", abs(signed - unsigned) < LIMIT_TOL,
                                f"k={L0_SIZE}: signed {signed:.5f}, unsigned {unsigned:.5f}"))

    for t in (1, 2, 3):
        for word in catalan_words(t):
            for l in sign_vectors(t):
                v = count_pi_star_signed(Link.WIGNER, WIGNER_SIZE, word, l, budget).normalized
                if l == l0(t):
                    ok, target = abs(v - 1.0) < LIMIT_TOL, "near 1"
                else:
                    ok, target = v < LIMIT_TOL, f"below {LIMIT_TOL}"
                checks.append(Check(f"wigner-catalan {word} l={l}", ok, f"n={WIGNER_SIZE}: {v:.5f} ({target})"))
    return checks


def run_verification(suite: str = "all", budget=DEFAULT_BUDGET, max_size: int = 6) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    report = VerificationReport(suite)
    if suite in ("counting-oracle", "all"):
        report.checks += counting_oracle_suite(budget=budget)
    if suite in ("decomposition", "all"):
        report.checks += decomposition_suite(range(2, max_size + 1))
    if suite in ("lemmas", "all"):
        report.checks += witness_suite(budget)
    return report
