# checks/prop14.py
import config
from analytics import catalan, expected_skeleton_census, prop14_sum, skeleton_size_census
from report import CheckResult


class SkeletonIdentityCheck:
    """C_n = 2^(n-1) + sum 2^k/(n-k)·binom(2n-2k, n-2-k), refined by skeleton size."""
    name = "prop14"

    # exact arithmetic; brute force kicks in only up to SKELETON_BRUTE_FORCE_MAX
    CAP = "IDENTITY_MAX_N"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        total = prop14_sum(n)
        details = {"catalan": catalan(n), "sum": str(total)}
        holds = total == catalan(n)
        if n <= min(config.SKELETON_BRUTE_FORCE_MAX, config.ENUM_CAP - 1):
            census = skeleton_size_census(n)
            details["skeleton_census"] = {str(k): v for k, v in census.items()}
            holds = holds and census == expected_skeleton_census(n)
        return CheckResult(self.name, n, holds, details)


def CHECK_CLASS():
    return SkeletonIdentityCheck()
