from ._kloosterman import (
    KloostermanTable,
    in_D,
    kloosterman,
    kloosterman_direct,
    kloosterman_table,
    moment_sum,
)
from ._moments import (
    BilinearReport,
    MomentBoundReport,
    bilinear_report,
    lemma41_report,
    ratio_coincidences,
    v_counts,
)

__all__ = [
    "BilinearReport",
    "KloostermanTable",
    "MomentBoundReport",
    "bilinear_report",
    "in_D",
    "kloosterman",
    "kloosterman_direct",
    "kloosterman_table",
    "lemma41_report",
    "moment_sum",
    "ratio_coincidences",
    "v_counts",
]
