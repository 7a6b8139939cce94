# checks/lemma5.py
from comp_algebra import (AugmentOp, augment, bump_orbit, check_orbit, complete_bumped_orbit,
                          enumerate_compositions, f_comp, parity, parity_vector,
                          predicted_bump_parity)
from errors import NotAnOrbit
from orbits import comp_orbit_partition
from path_core import check_cap
from report import CheckResult


class BumpParityCheck:
    """Augmentation suite over size n.

    parity flips under PrependOne and survives IncrementFirst; augmentation
    commutes with f_comp up to swapping the operator after an even-length entry;
    bumped orbits of C_n have the predicted parity vectors and complete to
    genuine orbits of C_(n+1).
    """
    name = "lemma5"

    CAP = "ENUM_CAP"
    SIZE_OFFSET = 0

    def run(self, n: int) -> CheckResult:
        check_cap(n)
        for c in enumerate_compositions(n):
            if parity(augment(c, AugmentOp.PREPEND_ONE)) != 1 - parity(c):
                return CheckResult(self.name, n, False, {"failed": "parity_flip"}, str(c))
            if parity(augment(c, AugmentOp.INCREMENT_FIRST)) != parity(c):
                return CheckResult(self.name, n, False, {"failed": "parity_flip"}, str(c))
            if c.length < 2:
                continue
            for A in AugmentOp:
                B = A if c.length % 2 else A.other()
                if augment(f_comp(c), A) != f_comp(augment(c, B)):
                    return CheckResult(self.name, n, False, {"failed": "commutation"}, str(c))
        orbits = comp_orbit_partition(n)
        for orb in orbits:
            p = parity_vector(orb.elements, validate=False)
            for A in AugmentOp:
                bumped = bump_orbit(orb.elements, A)
                if parity_vector(bumped.sequence, validate=False) != predicted_bump_parity(p, A):
                    return CheckResult(self.name, n, False, {"failed": "parity_vector"}, str(orb.elements[0]))
                try:
                    check_orbit(complete_bumped_orbit(orb.elements, A))
                except NotAnOrbit:
                    return CheckResult(self.name, n, False, {"failed": "completion"}, str(orb.elements[0]))
        return CheckResult(self.name, n, True, {"orbits": len(orbits)})


def CHECK_CLASS():
    return BumpParityCheck()
