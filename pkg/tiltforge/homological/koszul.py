import logging
from typing import Optional

from ..findim import nilpotency_index
from ..models import AlgebraTable, ExtTable, KoszulVerdict, LevelledStructure
from .resolution import min_proj_resolution

logger = logging.getLogger(__name__)


def ext_table(tab: AlgebraTable, max_deg: int) -> ExtTable:
    """dim Ext^k(S_j, S_v) read off as the multiplicity of P_v in term k of the resolution of S_j."""
    dims = {}
    truncated = False
    for simple in tab.vertices:
        res = min_proj_resolution(tab, simple, max_deg)
        truncated = truncated or res.truncated
        for k, term in enumerate(res.terms):
            for vertex in tab.vertices:
                count = term.multiplicity(vertex)
                if count:
                    dims[(k, simple, vertex)] = count
    return ExtTable(dims, max_deg, truncated)


def koszul_bound(tab: AlgebraTable, lv: LevelledStructure) -> int:
    return max(lv.n, nilpotency_index(tab), len(tab.vertices))


def koszul_check_levelled(tab: AlgebraTable, lv: LevelledStructure, bound: Optional[int] = None) -> KoszulVerdict:
    """A levelled algebra is Koszul iff Ext^k(S_a, S_b) vanishes unless k = s(a) - s(b).

    The witness is the first offending (k, a, b) in (k, vertex order) order. A
    truncated table without a witness is inconclusive.
    """
    bound = bound or koszul_bound(tab, lv)
    table = ext_table(tab, bound)
    index = tab.presentation.quiver.index
    for k, a, b in sorted(table.dims, key=lambda key: (key[0], index(key[1]), index(key[2]))):
        if k != lv.level(a) - lv.level(b):
            logger.info('Not Koszul: Ext^%d(S_%s, S_%s) = %d', k, a, b, table.dims[(k, a, b)])
            return KoszulVerdict('not-koszul', bound, (k, a, b))
    if table.truncated:
        return KoszulVerdict('inconclusive', bound)
    return KoszulVerdict('koszul', bound)
