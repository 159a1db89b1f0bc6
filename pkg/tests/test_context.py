import pytest

from MultiAdjointFCA.context import (MultiAdjointContext, SubcontextDecomposition, checkDecomposition, components,
                                     decompositionUnits, enumerateDecompositions, enumerateSeparableSubcontexts,
                                     isNormalized, isSeparableSubcontext, subcontext)
from MultiAdjointFCA.errors import (ContextError, FrameError, GridError, NotNormalized, UnknownAttribute,
                                    UnknownConjunctor, UnknownObject)
from MultiAdjointFCA.residuation import GradeChain, MultiAdjointFrame, tableTriple

from strategies import context, frame


def labelParts(ctx, dec):
    return {(frozenset(ctx.attributes[i] for i in a), frozenset(ctx.objects[j] for j in b)) for a, b in dec.parts}


def part(attrs, objs):
    return (frozenset(attrs), frozenset(objs))


# the separable subcontexts of the running example
S1 = part({"a1"}, {"b1", "b2"})
S2 = part({"a2"}, {"b3"})
S3 = part({"a3"}, {"b4"})
S4 = part({"a1", "a2"}, {"b1", "b2", "b3"})
S5 = part({"a1", "a3"}, {"b1", "b2", "b4"})
S6 = part({"a2", "a3"}, {"b3", "b4"})


def test_running_contexts_load(sigma, sigmaPrime):
    assert sigma.shape == (3, 4)
    assert sigma.grade("a1", "b2") == 4
    assert sigma.triple("a1", "b2").name == "L"
    assert sigma.triple("a3", "b3").name == "G"
    assert sigmaPrime.triple("a3", "b3").name == "L"
    assert isNormalized(sigma)
    assert isNormalized(sigmaPrime)


def test_components(sigma):
    assert {(frozenset(sigma.attributes[i] for i in a), frozenset(sigma.objects[j] for j in b))
            for a, b in components(sigma)} == {S1, S2, S3}


@pytest.mark.parametrize("which", ["sigma", "sigmaPrime"])
def test_six_separable_subcontexts(which, request):
    ctx = request.getfixturevalue(which)
    found = {(frozenset(ctx.attributes[i] for i in a), frozenset(ctx.objects[j] for j in b))
             for a, b in enumerateSeparableSubcontexts(ctx)}
    assert found == {S1, S2, S3, S4, S5, S6}


def test_sigma_decompositions(sigma):
    decs = enumerateDecompositions(sigma)
    assert len(decs) == 4
    assert [labelParts(sigma, d) for d in decs] == [{S1, S6}, {S4, S3}, {S5, S2}, {S1, S2, S3}]
    assert all(checkDecomposition(sigma, d.parts) for d in decs)


def test_sigma_prime_decompositions(sigmaPrime):
    assert len(decompositionUnits(sigmaPrime)) == 2
    decs = enumerateDecompositions(sigmaPrime)
    assert len(decs) == 1
    assert labelParts(sigmaPrime, decs[0]) == {S1, S6}


def test_zero_divisor_between_parts(sigmaPrime):
    parts = [(sigmaPrime.attributeSet(a), sigmaPrime.objectSet(b)) for a, b in (S1, S2, S3)]
    check = checkDecomposition(sigmaPrime, parts)
    assert not check
    assert check.condition == "conjunctor with zero-divisors between parts"
    assert check.witness == ("a3", "b3")


def test_check_decomposition_failures(sigma):
    whole = [(range(3), range(4))]
    assert checkDecomposition(sigma, whole).condition == "a decomposition needs at least two parts"
    overlapping = [({0}, {0, 1}), ({0, 1, 2}, {2, 3})]
    assert checkDecomposition(sigma, overlapping).condition == "parts do not partition the attributes"
    mixed = [({0}, {0, 2}), ({1, 2}, {1, 3})]
    assert checkDecomposition(sigma, mixed).condition.startswith("part is not separable")


def test_separable_subcontext_check(sigma):
    assert isSeparableSubcontext(sigma, ["a1"], ["b1", "b2"])
    check = isSeparableSubcontext(sigma, ["a1"], ["b1"])
    assert check.condition == "non-zero entry on Y×Xᶜ"
    assert check.witness == ("a1", "b2")
    assert isSeparableSubcontext(sigma, ["a1", "a2", "a3"], ["b1"]).condition == "attribute set must be a non-empty proper subset"
    assert isSeparableSubcontext(sigma, ["a1"], []).condition == "object set must be a non-empty proper subset"


def test_not_normalized():
    ctx = context(5, [[0, 0], [0, 3]], [["G", "G"], ["G", "G"]])
    check = isNormalized(ctx)
    assert not check
    assert check.condition == "attribute 'a1' has no non-zero entry"
    with pytest.raises(NotNormalized):
        enumerateDecompositions(ctx)
    with pytest.raises(NotNormalized):
        enumerateSeparableSubcontexts(ctx)
    full = context(5, [[1, 0], [2, 3]], [["G", "G"], ["G", "G"]])
    assert isNormalized(full).condition == "attribute 'a2' has no zero entry"


def test_indecomposable_context():
    # a1-b1-a2-b2-a3-b3 is one connected staircase
    ctx = context(5, [[1, 0, 0], [2, 3, 0], [0, 4, 5]], [["G"] * 3] * 3)
    assert isNormalized(ctx)
    assert enumerateDecompositions(ctx) == []


def test_context_errors():
    with pytest.raises(GridError):
        context(5, [[7, 0], [0, 1]], [["G", "G"], ["G", "G"]])
    with pytest.raises(ContextError):
        context(5, [[1, 0], [0, 1]], [["G", "G"]])
    with pytest.raises(ContextError):
        MultiAdjointContext(frame(5), ["a", "a"], ["b1", "b2"], [[1, 0], [0, 1]], [["G", "G"], ["G", "G"]])
    with pytest.raises(ContextError):
        MultiAdjointContext(frame(5), [], ["b1"], [], [])
    with pytest.raises(UnknownConjunctor):
        context(5, [[1, 0], [0, 1]], [["G", "X"], ["G", "G"]])
    with pytest.raises(UnknownConjunctor):
        context(5, [[1, 0], [0, 1]], [[0, 5], [0, 0]])


@pytest.mark.parametrize("value", [2.5, "3", True, None, float("nan")])
def test_relation_values_must_be_grade_indices(value):
    with pytest.raises(ContextError, match="is not a grade index") as e:
        context(5, [[1, 0], [0, value]], [["G", "G"], ["G", "G"]])
    assert e.value.witness == ("a2", "b2")


def test_integral_floats_are_accepted():
    ctx = context(5, [[1.0, 0], [0, 5.0]], [["G", "G"], ["G", "G"]])
    assert ctx.relation.tolist() == [[1, 0], [0, 5]]


def test_from_dict_grid_error(sigma):
    d = sigma.toDict()
    d['relation'][0][0] = "0.3"
    with pytest.raises(GridError):
        MultiAdjointContext.fromDict(d)


def test_boundary_condition_is_required():
    chain = GradeChain(1)
    bad = MultiAdjointFrame(chain, (tableTriple(chain, "Z", [[0, 0], [0, 0]]),))
    with pytest.raises(FrameError):
        MultiAdjointContext(bad, ["a1", "a2"], ["b1", "b2"], [[1, 0], [0, 1]], [["Z", "Z"], ["Z", "Z"]])


def test_lookup_errors(sigma):
    assert sigma.attributeIndex("a2") == 1
    assert sigma.objectIndex(3) == 3
    with pytest.raises(UnknownAttribute):
        sigma.attributeIndex("b1")
    with pytest.raises(UnknownObject):
        sigma.objectIndex(4)


def test_subcontext(sigma):
    sub = subcontext(sigma, ["a1"], ["b2", "b1"])
    assert sub.attributes == ("a1",)
    assert sub.objects == ("b1", "b2")
    assert sub.relation.tolist() == [[3, 4]]
    assert sub.triple("a1", "b2").name == "L"


def test_document_round_trip(sigma):
    again = MultiAdjointContext.fromDict(sigma.toDict())
    assert again.relation.tolist() == sigma.relation.tolist()
    assert again.sigma.tolist() == sigma.sigma.tolist()
    assert sigma.toDict()['relation'][0] == ["3/5", "4/5", "0", "0"]


def test_decomposition_equality_ignores_parent(sigma):
    dec = enumerateDecompositions(sigma)[-1]
    assert SubcontextDecomposition(tuple(reversed(dec.parts))) == dec
    assert dec.partOfAttribute("a2") == 1
    assert dec.toDict() == [
        {'attributes': ["a1"], 'objects': ["b1", "b2"]},
        {'attributes': ["a2"], 'objects': ["b3"]},
        {'attributes': ["a3"], 'objects': ["b4"]},
    ]


def test_zero_divisor_mask(sigmaPrime):
    assert sigmaPrime.zeroDivisorMask.tolist() == [
        [False, True, False, False],
        [False, False, False, False],
        [False, False, True, False],
    ]
