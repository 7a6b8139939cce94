# checks/lemma4.py
from comp_algebra import pascal_block_row_sum
from report import CheckResult


class PascalBlockCheck:
    """Rows of the 2^k x 2^k corner of Pascal mod 2 sum to 0, except the last row."""
    name = "lemma4"

    CAP = "PASCAL_MAX_K"
    SIZE_OFFSET = 0

    def run(self, k: int) -> CheckResult:
        size = 1 << k
        for i in range(size):
            want = 1 if i == size - 1 else 0
            if pascal_block_row_sum(k, i) != want:
                return CheckResult(self.name, k, False, {"row": i}, f"row {i}")
        return CheckResult(self.name, k, True, {"rows": size})


def CHECK_CLASS():
    return PascalBlockCheck()
