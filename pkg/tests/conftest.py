"""Shared corpus machinery: seeded random group extensions and mutations."""

import random

import numpy as np

from hopfstrict import groups
from hopfstrict.actions import WeakGAction, check_weak_action, \
    weak_action_from_extension
from hopfstrict.fields import Field
from hopfstrict.groups import extension_from_normal, is_normal, subgroup_closure

FUZZ_FIELDS = (Field.Q(), Field.GF(3), Field.GF(5))

# strictified dimension |G|^2 |N| stays small enough to verify in well under
# a second per draw (see the per-criterion budgets in the acceptance suite)
MAX_STRICT_DIM = 36


def group_catalog():
    z2 = groups.make_cyclic(2)
    z4 = groups.make_cyclic(4)
    cat = [groups.make_cyclic(n) for n in range(2, 17)]
    cat += [groups.make_dihedral(n) for n in (3, 4, 5, 6, 7, 8)]
    cat += [
        groups.make_klein_four(),
        groups.make_product(z2, z4),
        groups.make_product(z2, groups.make_product(z2, z2)),
        groups.make_product(groups.make_cyclic(3), groups.make_cyclic(3)),
        groups.make_product(z4, z4),
        groups.make_product(z2, groups.make_cyclic(8)),
    ]
    assert all(g.order <= 16 for g in cat)
    return cat


_CATALOG = group_catalog()


def random_extension_action(seed: int):
    """One seeded draw: an ambient group of order <= 16, a random normal
    subgroup as kernel, a random field.  Returns (action, extension)."""
    rng = random.Random(seed)
    while True:
        grp = _CATALOG[rng.randrange(len(_CATALOG))]
        gens = [rng.randrange(grp.order)
                for _ in range(rng.choice([1, 1, 2]))]
        kernel = subgroup_closure(grp, gens)
        quot = grp.order // len(kernel)
        if not is_normal(grp, kernel):
            continue
        if quot * quot * len(kernel) > MAX_STRICT_DIM:
            continue
        field = FUZZ_FIELDS[rng.randrange(len(FUZZ_FIELDS))]
        ext = extension_from_normal(grp, kernel)
        return weak_action_from_extension(ext, field), ext


def _unit_twist(action: WeakGAction, rng: random.Random) -> np.ndarray:
    alg = action.algebra
    if alg.dim > 1:
        z = np.zeros(alg.dim, dtype=object)
        z[1 + rng.randrange(alg.dim - 1)] = alg.field.one
        return z
    return alg.field.normalize(alg.unit * alg.field.parse("2"))


def mutate_one_compositor(action: WeakGAction, seed: int) -> tuple[int, int]:
    """Multiply one compositor entry in place by a nontrivial unit, picking a
    slot where that actually breaks an axiom.  Not every slot does: when the
    automorphism parts fix the kernel, entries like c(g, g) over a two-element
    quotient are free parameters and twisting them just lands on a different
    lawful action.  The identity slot always breaks, so termination is sure."""
    rng = random.Random(seed)
    alg = action.algebra
    n = action.group.order
    for _ in range(20):
        g, h = rng.randrange(n), rng.randrange(n)
        z = _unit_twist(action, rng)
        trial = WeakGAction(action.group, alg, action.phi,
                            action.comp.copy())
        trial.comp[g, h] = alg.multiply(trial.comp[g, h], z)
        if not check_weak_action(trial).passed:
            action.comp[g, h] = trial.comp[g, h]
            return g, h
    action.comp[0, 0] = alg.multiply(action.comp[0, 0],
                                     _unit_twist(action, rng))
    return 0, 0
