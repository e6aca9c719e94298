"""Result record shared by every verifier."""

from dataclasses import dataclass, field


@dataclass
class Outcome:
    ok: bool
    checked: int = 0
    witness: dict = field(default_factory=dict)
    skipped: str = ""

    @property
    def status(self):
        if self.skipped:
            return "SKIP"
        return "PASS" if self.ok else "FAIL"

    def __bool__(self):
        return self.ok

    @classmethod
    def merge(cls, outcomes):
        checked = 0
        for o in outcomes:
            checked += o.checked
            if not o.ok:
                return cls(False, checked, o.witness)
        return cls(True, checked)


def fail(witness, checked=0):
    return Outcome(False, checked, witness)
