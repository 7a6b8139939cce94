# checks/fixedpoints.py
from analytics import integer_coeffs, series_fk, series_fk_closed
from bijection import f_map
from orbits import avoids_fixed_point_patterns
from path_core import iter_paths
from report import CheckResult


class FixedPointCheck:
    """Fixed points of f_map are exactly the DUDD / UU+DD avoiders, counted by F_0."""
    name = "fixedpoints"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        count, mismatch = 0, None
        for P in iter_paths(n):
            fixed = f_map(P) == P
            count += fixed
            if fixed != avoids_fixed_point_patterns(P) and mismatch is None:
                mismatch = P.steps or "ε"
        from_system = integer_coeffs(series_fk(0, n)[0], n)[n]
        from_closed = integer_coeffs(series_fk_closed(0, n), n)[n]
        return CheckResult(
            target=self.name,
            n=n,
            holds=mismatch is None and count == from_system == from_closed,
            details={"fixed_points": count, "series": from_system, "closed_form": from_closed},
            counterexample=mismatch,
        )


def CHECK_CLASS():
    return FixedPointCheck()
