"""Named instances used throughout the tests, docs and CLI examples."""

from __future__ import annotations

from .core import GammaSemigroup
from .enumeration import (
    cyclic_group,
    from_semigroup,
    modular_mult,
    nilpotent,
    rees_matrix_trivial,
)

# i**k for k = 0..3
UNIT_NAMES = ("1", "i", "-1", "-i")


def table1() -> GammaSemigroup:
    """Five-element table on {e,f,g,h,i} with one gamma.

    The table is not associative ((f g) g = h but f (g g) = e), so it is
    loaded without the associativity check.
    """
    rows = [
        "eeeee",
        "eehef",
        "eeheg",
        "eeheh",
        "efghi",
    ]
    names = "efghi"
    table = [[names.index(c) for c in row] for row in rows]
    return GammaSemigroup(5, 1, table, element_names=tuple(names), gamma_names=("gamma",),
                          check_associativity=False)


def table2() -> GammaSemigroup:
    """Four elements {a,b,c,d}, one gamma; the least two-sided ideal is {a,d}."""
    rows = ["aadd", "aadd", "ddaa", "ddaa"]
    names = "abcd"
    table = [[names.index(c) for c in row] for row in rows]
    return GammaSemigroup(4, 1, table, element_names=tuple(names), gamma_names=("alpha",))


def units(gammas: tuple[str, ...] = ("i", "-i")) -> GammaSemigroup:
    """{1, i, -1, -i} under complex multiplication with the given gamma subset."""
    return from_semigroup(cyclic_group(4), [UNIT_NAMES.index(g) for g in gammas], element_names=UNIT_NAMES)


def units_simple() -> GammaSemigroup:
    return units(("i", "-i"))


def units_with_zero() -> GammaSemigroup:
    """The units with gamma {i} and a zero adjoined (index 4)."""
    return units(("i",)).adjoin_zero()


def z_mod(k: int, gammas: tuple[int, ...] = (1,)) -> GammaSemigroup:
    return from_semigroup(modular_mult(k), list(gammas), element_names=[str(x) for x in range(k)], zero=0)


def z6() -> GammaSemigroup:
    return z_mod(6, (1,))


def z6_two_gammas() -> GammaSemigroup:
    """Z/6 with gamma {2, 3}: {0,3} and {0,2,4} are prime, their union is not."""
    return z_mod(6, (2, 3))


def nilpotent3() -> GammaSemigroup:
    """{0, a, b} with [a g a] = b and every other product 0."""
    return nilpotent(3, 1)


def brandt2() -> GammaSemigroup:
    """The 5-element Brandt semigroup (2x2 Rees matrix over the trivial
    group, identity sandwich) with gamma {(1,1), (2,2)}.

    Element "ij" is the matrix unit in row i, column j.  On this instance
    [HΓg] = {0} for g = "21" in the 0-minimal left ideal {0,11,21}, while
    [TΓg] = H.
    """
    names = ("0", "11", "12", "21", "22")
    return from_semigroup(rees_matrix_trivial(2, 2, [[1, 0], [0, 1]]), [1, 4], element_names=names, zero=0)


def all_fixtures() -> dict[str, GammaSemigroup]:
    return {
        "table1": table1(),
        "table2": table2(),
        "units": units_simple(),
        "units-i": units(("i",)),
        "units-i+0": units_with_zero(),
        "z6": z6(),
        "z6-gamma23": z6_two_gammas(),
        "nilpotent3": nilpotent3(),
        "brandt2": brandt2(),
    }

