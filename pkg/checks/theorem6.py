# checks/theorem6.py
from orbits import verify_theorem6
from path_core import check_cap
from report import CheckResult

# ===== Public interface expected by main.py =====
# - Exports CHECK_CLASS which main() will instantiate.
# - Instance must have:
#     .name: str
#     .CAP: str (a config.CAPS name), .SIZE_OFFSET: int   (n + SIZE_OFFSET must not exceed config.<CAP>)
#     .run(n: int) -> CheckResult
#
# Every f_comp-orbit of C_n has one common length 2^power and one common parity,
# with power and parity following the schedule in orbits.expected_power/expected_parity.


class TheoremSixCheck:
    name = "theorem6"

    # Tunables
    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        check_cap(n)
        report = verify_theorem6(n)
        return CheckResult(
            target=self.name,
            n=n,
            holds=report.holds,
            details=report.to_dict(),
            counterexample=" | ".join(report.counterexample) if report.counterexample else None,
        )


# Entry point factory for main.py
def CHECK_CLASS():
    return TheoremSixCheck()
