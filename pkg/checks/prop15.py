# checks/prop15.py
import config
from analytics import catalan, lco_leaf_table, leaf_census
from report import CheckResult


class LeafTableCheck:
    name = "prop15"

    CAP = "LEAF_TABLE_MAX_N"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        row = lco_leaf_table(n)[n]
        details = {"row": list(row)}
        holds = sum(row) == catalan(n)
        reference = config.LEAF_TABLE_REFERENCE.get(n)
        if reference is not None:
            holds = holds and row == reference
        if n <= min(config.LEAF_BRUTE_FORCE_MAX, config.ENUM_CAP):
            census = leaf_census(n)
            details["census"] = list(census)
            holds = holds and census == row
        return CheckResult(self.name, n, holds, details)


def CHECK_CLASS():
    return LeafTableCheck()
