import pytest

from MultiAdjointFCA.blocks import (Block, BlockDecomposition, certifyBlock, classifyPair, complementBlock,
                                    enumerateBlockDecompositions, enumerateBlocks, enumerateMinimalBlocks, isBlock,
                                    minimalBlockOf, unionBlocks)
from MultiAdjointFCA.errors import (BoundElement, ComplementTrivial, DifferentCarrier, NoBlocks, NoCompleteBlock,
                                    NotABlock, UnionIsWholeLattice, UnknownElement, WholeLattice)
from MultiAdjointFCA.lattice import buildLattice

from strategies import chainLattice, gridLattice

NINE_MINIMAL = {frozenset({"a", "b"}), frozenset({"c"}), frozenset({"bot", "d", "e", "f", "g", "top"})}


def labelSets(blocks):
    return {frozenset(b.labels()) for b in blocks}


@pytest.fixture
def diamond():
    return buildLattice(["bot", "p", "q", "top"], [("bot", "p"), ("bot", "q"), ("p", "top"), ("q", "top")])


def test_nine_minimal_blocks(nine):
    blocks = enumerateMinimalBlocks(nine)
    assert labelSets(blocks) == NINE_MINIMAL
    assert all(b.minimal for b in blocks)
    assert [len(b) for b in blocks] == [1, 2, 6]


def test_minimal_block_of(nine):
    assert set(minimalBlockOf(nine, "d").labels()) == {"bot", "d", "e", "f", "g", "top"}
    assert set(minimalBlockOf(nine, "b").labels()) == {"a", "b"}
    with pytest.raises(BoundElement):
        minimalBlockOf(nine, "bot")
    with pytest.raises(UnknownElement):
        minimalBlockOf(nine, "zz")


def test_is_block_reports_first_failed_condition(nine):
    check = isBlock(nine, {"a", "b", "c"})
    assert not check
    assert check.condition == "not a sublattice"
    assert check.witness == "bot"

    check = isBlock(nine, {"d"})
    assert check.condition == "not closed under comparable elements"
    assert check.witness == "f"

    assert isBlock(nine, nine.elements).condition == "block must be a proper subset"
    assert isBlock(nine, {"bot", "top"}).condition == "block must contain an element other than the bounds"
    assert isBlock(nine, {"bot", "a", "b", "c", "top"})


def test_certify_block(nine):
    assert certifyBlock(nine, {"c", "top"}).labels() == ["c", "top"]
    with pytest.raises(NotABlock) as e:
        certifyBlock(nine, {"a"})
    assert e.value.witness.condition == "not closed under comparable elements"


def test_all_blocks_of_nine(nine):
    blocks = enumerateBlocks(nine)
    assert len(blocks) == 12
    assert all(isBlock(nine, b.members) for b in blocks)
    assert frozenset({"bot", "a", "b", "c", "top"}) in labelSets(blocks)
    assert frozenset({"a", "b", "c"}) not in labelSets(blocks)


def test_block_flags(nine):
    block = certifyBlock(nine, {"bot", "a", "b", "top"})
    assert block.complete
    assert not block.minimal
    assert block.flags == {'minimal': False, 'complete': True}
    assert "a" in block
    assert "c" not in block


def test_classify_pair(nine):
    ab, c = certifyBlock(nine, {"a", "b"}), certifyBlock(nine, {"c"})
    assert classifyPair(ab, c).independent
    left = certifyBlock(nine, {"bot", "a", "b", "c", "top"})
    right = certifyBlock(nine, {"bot", "c", "d", "e", "f", "g", "top"})
    pair = classifyPair(left, right)
    assert not pair.independent
    assert set(pair.intersection.labels()) == {"bot", "c", "top"}


def test_classify_pair_needs_one_carrier(nine, diamond):
    with pytest.raises(DifferentCarrier):
        classifyPair(certifyBlock(nine, {"c"}), certifyBlock(diamond, {"p"}))


def test_union_blocks(nine):
    union = unionBlocks([certifyBlock(nine, {"bot", "a", "b", "top"}), certifyBlock(nine, {"c"})])
    assert set(union.labels()) == {"bot", "a", "b", "c", "top"}
    assert union.complete
    with pytest.raises(NoCompleteBlock):
        unionBlocks([certifyBlock(nine, {"a", "b"}), certifyBlock(nine, {"c"})])
    with pytest.raises(UnionIsWholeLattice):
        unionBlocks(enumerateMinimalBlocks(nine))


def test_complement_block(nine):
    rest = complementBlock(nine, certifyBlock(nine, {"a", "b"}))
    assert set(rest.labels()) == {"bot", "c", "d", "e", "f", "g", "top"}
    rest = complementBlock(nine, certifyBlock(nine, {"bot", "d", "e", "f", "g", "top"}))
    assert set(rest.labels()) == {"bot", "a", "b", "c", "top"}


def test_complement_of_everything_is_trivial():
    L = chainLattice("bot", "m", "top")
    with pytest.raises(ComplementTrivial):
        complementBlock(L, certifyBlock(L, {"m"}))


def test_nine_block_decompositions(nine):
    decs = enumerateBlockDecompositions(nine)
    assert len(decs) == 4
    assert sorted(len(d) for d in decs) == [2, 2, 2, 3]
    assert all(d.check() for d in decs)
    finest = decs[-1]
    assert {frozenset(b) for b in finest.toDict()} == {
        frozenset({"bot", "a", "b", "top"}), frozenset({"bot", "c", "top"}), frozenset({"bot", "d", "e", "f", "g", "top"})}


def test_block_decomposition_check_failures(nine):
    ab = certifyBlock(nine, {"bot", "a", "b", "top"})
    assert BlockDecomposition((ab,), nine).check().condition == "a decomposition needs at least two blocks"
    c = certifyBlock(nine, {"bot", "c", "top"})
    assert BlockDecomposition((ab, c), nine).check().condition == "blocks do not cover the lattice"
    abc = certifyBlock(nine, {"bot", "a", "b", "c", "top"})
    assert BlockDecomposition((abc, c), nine).check().condition == "blocks are not independent"


def test_three_chain():
    L = chainLattice("bot", "m", "top")
    assert labelSets(enumerateMinimalBlocks(L)) == {frozenset({"m"})}
    assert labelSets(enumerateBlocks(L)) == {frozenset({"m"}), frozenset({"bot", "m"}), frozenset({"m", "top"})}
    assert enumerateBlockDecompositions(L) == []


def test_diamond(diamond):
    assert labelSets(enumerateMinimalBlocks(diamond)) == {frozenset({"p"}), frozenset({"q"})}
    decs = enumerateBlockDecompositions(diamond)
    assert len(decs) == 1
    assert {frozenset(b) for b in decs[0].toDict()} == {frozenset({"bot", "p", "top"}), frozenset({"bot", "q", "top"})}


def test_grid_has_no_blocks():
    L = gridLattice()
    with pytest.raises(NoBlocks):
        enumerateMinimalBlocks(L)
    with pytest.raises(WholeLattice):
        minimalBlockOf(L, "11")
    assert enumerateBlocks(L) == []
    assert enumerateBlockDecompositions(L) == []


def test_blocks_compare_by_members(nine):
    assert certifyBlock(nine, {"c"}) == Block(frozenset({nine.index("c")}), nine)
