"""Explicit isomorphisms between the three models of the same crystal.

Every map factors through the exponent triangles, so correctness reduces to
the closed forms and recoveries certified in the model modules.  Maps out of
a rigged configuration require membership and raise otherwise.
"""

from .errors import NotInCrystalError
from .forward import is_member_rcinf, rc_from_forward
from .rc import RiggedConfiguration
from .reverse import is_member_rcinf_reverse, rc_from_reverse
from .tableaux import (MarginallyLargeReverseTableau, MarginallyLargeTableau,
                       forward_from_mlt, mlrt_from_reverse, mlt_from_forward,
                       reverse_from_mlrt)


def mlt_to_rc(T: MarginallyLargeTableau) -> RiggedConfiguration:
    return rc_from_forward(forward_from_mlt(T))


def rc_to_mlt(rc: RiggedConfiguration) -> MarginallyLargeTableau:
    decision = is_member_rcinf(rc)
    if not decision.member:
        raise NotInCrystalError(f"membership failed at stage: {decision.reason}")
    return mlt_from_forward(decision.exponents)


def mlrt_to_rc(R: MarginallyLargeReverseTableau) -> RiggedConfiguration:
    return rc_from_reverse(reverse_from_mlrt(R))


def rc_to_mlrt(rc: RiggedConfiguration) -> MarginallyLargeReverseTableau:
    decision = is_member_rcinf_reverse(rc)
    if not decision.member:
        raise NotInCrystalError(f"membership failed at stage: {decision.reason}")
    return mlrt_from_reverse(decision.exponents)


def mlt_to_mlrt(T: MarginallyLargeTableau) -> MarginallyLargeReverseTableau:
    return rc_to_mlrt(mlt_to_rc(T))


def mlrt_to_mlt(R: MarginallyLargeReverseTableau) -> MarginallyLargeTableau:
    return rc_to_mlt(mlrt_to_rc(R))
