# checks/prop11.py
from analytics import dud_avoiding_count, motzkin, motzkin_path_count
from config import KNOWN_MOTZKIN
from report import CheckResult


class MotzkinCountCheck:
    name = "prop11"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 1        # counts Dyck (n+1)-paths

    def run(self, n: int) -> CheckResult:
        m = motzkin(n)
        avoiding = motzkin_path_count(n)
        dud_free = dud_avoiding_count(n)
        known = KNOWN_MOTZKIN[n] if n < len(KNOWN_MOTZKIN) else m
        return CheckResult(
            target=self.name,
            n=n,
            holds=avoiding == dud_free == m == known,
            details={"motzkin": m, "pattern_avoiding": avoiding, "dud_avoiding": dud_free},
        )


def CHECK_CLASS():
    return MotzkinCountCheck()
