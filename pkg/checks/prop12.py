# checks/prop12.py
from analytics import stat_x, stat_y
from bijection import f_map
from path_core import iter_paths
from report import CheckResult


class StatisticTransferCheck:
    """f_map carries the DUD count of a path to the Y statistic of its image."""
    name = "prop12"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        checked = 0
        for P in iter_paths(n):
            checked += 1
            if stat_y(f_map(P)) != stat_x(P):
                return CheckResult(self.name, n, False, {"checked": checked}, P.steps)
        return CheckResult(self.name, n, True, {"checked": checked})


def CHECK_CLASS():
    return StatisticTransferCheck()
