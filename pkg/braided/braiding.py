"""The braiding c_q(e_k ⊗ e_l) = q_{kl} e_{k▷l} ⊗ e_k and its checks."""

import logging
from typing import Sequence, Tuple

from rackit.braided.types import Cocycle, RootOfUnity
from rackit.errors import Diagnosis, InputError
from rackit.rack.checks import check_morphism, is_abelian_subrack
from rackit.rack.types import RackMorphism

logger = logging.getLogger(__name__)


def braiding_apply(q: Cocycle, pair: Tuple[int, int]) -> Tuple[Tuple[int, int], RootOfUnity]:
    """
    Apply the braiding to a basis pair.

    Returns:
        ((k▷l, k), q_{kl}).

    Raises:
        InputError: If an index is out of range.
    """
    k, l = pair
    if not (0 <= k < q.size and 0 <= l < q.size):
        raise InputError(f"Basis pair {pair} out of range for size {q.size}")
    return (q.rack.op(k, l), k), q.q(k, l)


def check_braid_equation(q: Cocycle) -> Diagnosis:
    """
    Evaluate (c⊗id)(id⊗c)(c⊗id) and (id⊗c)(c⊗id)(id⊗c) on every e_a⊗e_b⊗e_c.

    Both sides map a basis triple to a scalar multiple of a basis triple;
    the triples and the scalars (as exponents in Z/L) must agree.
    """
    t = q.rack
    n, L, e = t.size, q.order, q.exponents
    checked = 0
    for a in range(n):
        for b in range(n):
            ab = t.op(a, b)
            for c in range(n):
                checked += 1
                ac = t.op(a, c)
                bc = t.op(b, c)
                left = (t.op(ab, ac), ab, a)
                left_exp = e[a][b] + e[a][c] + e[ab][ac]
                right = (t.op(a, bc), ab, a)
                right_exp = e[b][c] + e[a][bc] + e[a][b]
                if left != right or (left_exp - right_exp) % L:
                    logger.debug(f"Braid equation fails on {(a, b, c)}")
                    return Diagnosis.failed(
                        f"braid equation fails on e_{t.labels[a]}⊗e_{t.labels[b]}⊗e_{t.labels[c]}",
                        witness=(a, b, c),
                        checked=checked,
                    )
    return Diagnosis.passed(checked)


def is_diagonal_type(q: Cocycle, subset: Sequence[int]) -> bool:
    """
    True when the span of an abelian subset braids diagonally.

    Raises:
        InputError: If the subset is not ▷-closed.
    """
    members = list(subset)
    if not is_abelian_subrack(q.rack, members):
        return False
    for k in members:
        for l in members:
            (image, _) = braiding_apply(q, (k, l))
            if image != (l, k):
                return False
    return True


def check_bvs_isomorphism(q1: Cocycle, q2: Cocycle, morphism: RackMorphism) -> bool:
    """
    Check q1_{ij} = q2_{map(i), map(j)} for all pairs.

    Raises:
        InputError: If the map is not a rack isomorphism between the cocycle racks.
    """
    if morphism.source.table != q1.rack.table or morphism.target.table != q2.rack.table:
        raise InputError("Morphism does not connect the racks of the two cocycles")
    if not morphism.is_bijective or not check_morphism(morphism):
        raise InputError("Map is not a rack isomorphism")
    return all(
        q1.q(i, j) == q2.q(morphism(i), morphism(j))
        for i in range(q1.size)
        for j in range(q1.size)
    )
