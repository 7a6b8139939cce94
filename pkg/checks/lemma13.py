# checks/lemma13.py
from analytics import gen_catalan, lemma13_convolution, lemma13_count
from report import CheckResult


class GroundValleyCheck:
    """Paths ending DD with a ground-level DUU are counted by C^(4)_(n-3)."""
    name = "lemma13"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        brute = lemma13_count(n)
        formula = gen_catalan(4, n - 3) if n >= 3 else 0
        convolution = lemma13_convolution(n)
        return CheckResult(
            target=self.name,
            n=n,
            holds=brute == formula == convolution,
            details={"count": brute, "formula": formula, "convolution": convolution},
        )


def CHECK_CLASS():
    return GroundValleyCheck()
