"""Pass/fail records shared by the verification and LQT modules."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    identity: str
    degree: object = None  # int, tuple of ints, or None
    passed: bool = True
    witness: str = ""

    def line(self) -> str:
        where = "" if self.degree is None else f" [{_fmt_degree(self.degree)}]"
        tail = "" if self.passed else f"  -- {self.witness}"
        return f"{'PASS' if self.passed else 'FAIL'}  {self.identity}{where}{tail}"

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "passed": self.passed}
        if self.degree is not None:
            out["degree"] = list(self.degree) if isinstance(self.degree, tuple) else self.degree
        if self.witness:
            out["witness"] = self.witness
        return out


def _fmt_degree(deg) -> str:
    if isinstance(deg, tuple):
        return ",".join(str(x) for x in deg)
    return str(deg)


@dataclass
class Report:
    title: str
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, identity: str, degree, passed: bool, witness: str = "") -> CheckResult:
        r = CheckResult(identity, degree, bool(passed), "" if passed else witness)
        self.results.append(r)
        return r

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        self.notes.extend(other.notes)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list:
        return [r.line() for r in self.results] + [f"note: {n}" for n in self.notes]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
            "notes": list(self.notes),
        }
