from fractions import Fraction

import pytest

from MultiAdjointFCA.errors import FrameError, GridError, NotMonotone, NoMaximum, ResiduationError, UnknownConjunctor
from MultiAdjointFCA.residuation import (GradeChain, MultiAdjointFrame, builtinTriple, checkTripleProperties,
                                         hasZeroDivisors, residuumFromConjunctor, satisfiesBoundary, tableTriple,
                                         verifyAdjoint)

KINDS = ("godel", "lukasiewicz", "product")

# monotone, boundary-preserving and not commutative: 1 & 2 = 1 but 2 & 1 = 0
SKEW_TABLE = [
    [0, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 2],
    [0, 1, 2, 3],
]


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(1, 11))
def test_builtin_triples_are_adjoint(kind, n):
    t = builtinTriple(GradeChain(n), kind)
    assert verifyAdjoint(t) is None
    assert satisfiesBoundary(t)
    failed = {name: check for name, check in checkTripleProperties(t).items() if not check}
    assert failed == {}


@pytest.mark.parametrize("kind", KINDS)
def test_property_clause_names(kind):
    assert list(checkTripleProperties(builtinTriple(GradeChain(4), kind))) == [
        'conj monotone', 'residua monotone', 'bottom & y, top ↙ y', 'x & bottom, top ↖ x',
        'z ↖ bottom, z ↙ bottom', 'left residuum is max', 'right residuum is max',
    ]


def test_zero_divisors():
    chain = GradeChain(5)
    luk = builtinTriple(chain, "lukasiewicz")
    assert luk.zeroDivisor == (1, 1)
    assert hasZeroDivisors(luk) == (True, (1, 1))
    assert hasZeroDivisors(builtinTriple(chain, "godel")) == (False, None)
    assert hasZeroDivisors(builtinTriple(chain, "product")) == (False, None)


def test_residua_values():
    chain = GradeChain(5)
    godel, luk = builtinTriple(chain, "godel"), builtinTriple(chain, "lukasiewicz")
    y = chain.parse("0.8")
    assert godel.residueLeft(0, y) == 0
    assert luk.residueLeft(0, y) == chain.parse("0.2")
    assert godel.residueRight(3, 2) == 5
    assert luk.conjunction(3, 4) == 2


def test_product_conjunction_rounds_up():
    t = builtinTriple(GradeChain(5), "product")
    # 0.4 * 0.6 = 0.24, rounded up to 0.4
    assert t.conjunction(2, 3) == 2
    assert t.isCommutative


def test_grade_chain_parsing():
    chain = GradeChain(5)
    assert chain.parse("0.6") == 3
    assert chain.parse(0.6) == 3
    assert chain.parse("3/5") == 3
    assert chain.parse(1) == 5
    assert chain.parse(0) == 0
    assert chain.parse(Fraction(2, 5)) == 2
    for bad in ("0.3", -0.2, 1.2, "abc", True, "1/0"):
        with pytest.raises(GridError):
            chain.parse(bad)


def test_grade_chain_rendering():
    chain = GradeChain(5)
    assert [chain.render(i) for i in chain.grades] == ["0", "1/5", "2/5", "3/5", "4/5", "1"]
    assert chain.fraction(4) == Fraction(4, 5)
    assert len(chain) == 6


def test_non_commutative_table_keeps_distinct_residua():
    t = tableTriple(GradeChain(3), "skew", SKEW_TABLE)
    assert not t.isCommutative
    assert verifyAdjoint(t) is None
    assert t.residueLeft(0, 2) == 0
    assert t.residueRight(0, 2) == 1


def test_non_monotone_table():
    table = [[0, 0, 0], [0, 1, 1], [0, 0, 2]]
    with pytest.raises(NotMonotone) as e:
        tableTriple(GradeChain(2), "bad", table)
    assert e.value.witness == ((1, 1), (2, 1))


def test_residuum_without_maximum():
    with pytest.raises(NoMaximum):
        residuumFromConjunctor(GradeChain(1), [[0, 1], [0, 1]])


def test_table_shape_and_range():
    with pytest.raises(ResiduationError):
        tableTriple(GradeChain(2), "small", [[0, 0], [0, 1]])
    with pytest.raises(ResiduationError):
        tableTriple(GradeChain(1), "big", [[0, 0], [0, 2]])


def test_boundary_failure():
    t = tableTriple(GradeChain(1), "zero", [[0, 0], [0, 0]])
    check = satisfiesBoundary(t)
    assert not check
    assert check.witness == 1


def test_unknown_kind():
    with pytest.raises(UnknownConjunctor):
        builtinTriple(GradeChain(3), "hamacher")


def test_frame_from_dict():
    frame = MultiAdjointFrame.fromDict({
        'grades': 3,
        'conjunctors': [
            {'name': "G", 'kind': "godel"},
            {'name': "S", 'kind': "table", 'table': [[0, 0, 0, 0], ["0", "0", "1/3", "1/3"], [0, 0, "1/3", "2/3"], [0, "1/3", "2/3", 1]]},
        ],
    })
    assert frame.names == ("G", "S")
    assert frame.tripleIndex("S") == 1
    assert not frame.triple("S").isCommutative
    assert frame.toDict()['conjunctors'][0] == {'name': "G", 'kind': "godel"}
    with pytest.raises(UnknownConjunctor):
        frame.triple("X")


def test_frame_errors():
    chain = GradeChain(2)
    godel = builtinTriple(chain, "godel", "G")
    with pytest.raises(FrameError):
        MultiAdjointFrame(chain, (godel, builtinTriple(chain, "lukasiewicz", "G")))
    with pytest.raises(FrameError):
        MultiAdjointFrame(chain, ())
    with pytest.raises(FrameError):
        MultiAdjointFrame(chain, (builtinTriple(GradeChain(3), "godel"),))
    with pytest.raises(FrameError):
        MultiAdjointFrame.fromDict({'grades': 2, 'conjunctors': [{'name': "T", 'kind': "table"}]})
