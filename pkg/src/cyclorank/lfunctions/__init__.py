from ._afe import (
    MollifiedSums,
    RootNumberCheck,
    check_root_number,
    direct_lvalue,
    lvalue,
    mollified_afe,
    mollified_sums,
    mollifier_value,
    partial_sum_average,
)
from ._moment import MomentReport, compute_S1, compute_S2, orbit_average_moment
from ._parameters import AfeParameters, s1_envelope, s2_envelope
from ._scan import NonvanishingScan, nonvanishing_scan

__all__ = [
    "AfeParameters",
    "MollifiedSums",
    "MomentReport",
    "NonvanishingScan",
    "RootNumberCheck",
    "check_root_number",
    "compute_S1",
    "compute_S2",
    "direct_lvalue",
    "lvalue",
    "mollified_afe",
    "mollified_sums",
    "mollifier_value",
    "nonvanishing_scan",
    "orbit_average_moment",
    "partial_sum_average",
    "s1_envelope",
    "s2_envelope",
]
