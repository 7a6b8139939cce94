# checks/cor7.py
from comp_algebra import bits
from orbits import Universe, orbit_partition
from report import CheckResult


class CorollarySevenCheck:
    """Primitive DUU-avoiding n-paths all sit on orbits of length 2^bits(n-2)."""
    name = "cor7"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        expected = 1 << bits(n - 2)
        orbits = orbit_partition(n, Universe.PRIMITIVE_DUU_AVOIDING)
        bad = next((o for o in orbits if o.length != expected), None)
        return CheckResult(
            target=self.name,
            n=n,
            holds=bad is None,
            details={"expected_length": expected, "orbit_count": len(orbits)},
            counterexample=str(bad.elements[0]) if bad else None,
        )


def CHECK_CLASS():
    return CorollarySevenCheck()
