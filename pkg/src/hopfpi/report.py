"""Check reports: named axiom failures with witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field

MAX_FAILURES_PER_AXIOM = 5


@dataclass(frozen=True)
class Failure:
    axiom: str
    grades: tuple
    basis: tuple
    lhs: tuple  # sorted ((indices...), coeff) pairs
    rhs: tuple

    def describe(self):
        return (f"{self.axiom} at grades {self.grades} basis {self.basis}: "
                f"lhs={_fmt(self.lhs)} rhs={_fmt(self.rhs)}")


def _fmt(vec):
    if not vec:
        return "0"
    return " + ".join(f"{c}*{list(k)}" for k, c in vec)


@dataclass
class CheckReport:
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)  # axiom -> exact failure count
    checked: list = field(default_factory=list)  # axiom names, in order first run
    formulas: dict = field(default_factory=dict)  # axiom -> formula actually verified
    notes: list = field(default_factory=list)
    limit: int = MAX_FAILURES_PER_AXIOM

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def touch(self, axiom, formula=None):
        if axiom not in self.counts:
            self.counts[axiom] = 0
            self.checked.append(axiom)
        if formula and axiom not in self.formulas:
            self.formulas[axiom] = formula

    def fail(self, axiom, grades=(), basis=(), lhs=(), rhs=()):
        self.touch(axiom)
        self.counts[axiom] += 1
        if self.counts[axiom] <= self.limit:
            self.failures.append(Failure(axiom, tuple(grades), tuple(basis), tuple(lhs), tuple(rhs)))

    def failed_axioms(self) -> list:
        return [a for a in self.checked if self.counts[a]]

    def total_failures(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for a in other.checked:
            name = prefix + a
            self.touch(name, other.formulas.get(a))
            self.counts[name] += other.counts[a]
        for f in other.failures:
            if prefix:
                f = Failure(prefix + f.axiom, f.grades, f.basis, f.lhs, f.rhs)
            self.failures.append(f)
        self.notes.extend(other.notes)
        return self

    def summary(self) -> str:
        lines = []
        for a in self.checked:
            n = self.counts[a]
            lines.append(f"  {'FAIL' if n else 'ok  '} {a}" + (f" ({n} failures)" if n else ""))
        for f in self.failures:
            lines.append("    " + f.describe())
        for n in self.notes:
            lines.append("  note: " + n)
        verdict = "PASS" if self.passed else "FAIL"
        return "\n".join([verdict] + lines)

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "checked": list(self.checked),
            "counts": dict(self.counts),
            "formulas": dict(self.formulas),
            "failures": [
                {"axiom": f.axiom, "grades": list(f.grades), "basis": list(f.basis),
                 "lhs": [[list(k), str(c)] for k, c in f.lhs],
                 "rhs": [[list(k), str(c)] for k, c in f.rhs]}
                for f in self.failures
            ],
            "notes": list(self.notes),
        }
