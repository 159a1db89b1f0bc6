import itertools

import pytest

from MultiAdjointFCA.concepts import (FormalConcept, FuzzySet, checkRepresentation, deriveDown, deriveUp,
                                      enumerateConcepts, fuzzyAttributeConcept, fuzzyObjectConcept,
                                      irreducibleIndexSets, meetIrreducibleConcepts, representationSides)
from MultiAdjointFCA.errors import ContextError, GridError, UnknownAttribute, UnknownConcept


def ext(s):
    """ "3400" -> (3, 4, 0, 0) """
    return tuple(int(c) for c in s)


SIGMA_PRIME_EXTENTS = [ext(s) for s in (
    "0000", "0005", "0010", "0015", "0020", "0025", "0030", "0035",
    "0040", "0045", "0050", "3400", "3500", "5500", "5555")]
SIGMA_PRIME_INTENTS = {ext(e): ext(i) for e, i in (
    ("0000", "555"), ("3400", "500"), ("0010", "054"), ("0005", "005"), ("3500", "400"),
    ("5500", "300"), ("5555", "000"), ("0020", "053"), ("0015", "004"), ("0030", "022"),
    ("0025", "003"), ("0040", "021"), ("0035", "002"), ("0050", "020"), ("0045", "001"))}
SIGMA_EXTENTS = [ext(s) for s in ("0000", "0005", "0020", "0050", "3400", "3500", "5500", "5555")]
SIGMA_COVERS = {(ext(a), ext(b)) for a, b in (
    ("0000", "3400"), ("3400", "3500"), ("3500", "5500"), ("5500", "5555"),
    ("0000", "0020"), ("0020", "0050"), ("0050", "5555"),
    ("0000", "0005"), ("0005", "5555"))}


@pytest.fixture(scope="module")
def sigmaLattice(sigma):
    return enumerateConcepts(sigma)


@pytest.fixture(scope="module")
def sigmaPrimeLattice(sigmaPrime):
    return enumerateConcepts(sigmaPrime)


def extents(lat):
    return [c.extent.values for c in lat.concepts]


def test_sigma_prime_concepts(sigmaPrimeLattice):
    assert len(sigmaPrimeLattice) == 15
    assert extents(sigmaPrimeLattice) == SIGMA_PRIME_EXTENTS
    assert {c.extent.values: c.intent.values for c in sigmaPrimeLattice.concepts} == SIGMA_PRIME_INTENTS


def test_sigma_concepts(sigmaLattice):
    assert extents(sigmaLattice) == SIGMA_EXTENTS


def test_sigma_covers(sigmaLattice):
    covers = {(sigmaLattice.concepts[i].extent.values, sigmaLattice.concepts[j].extent.values)
              for i, j in sigmaLattice.lattice.covers}
    assert covers == SIGMA_COVERS


def test_sigma_irreducibles(sigmaLattice):
    found = {sigmaLattice.concepts[i].extent.values for i in sigmaLattice.irreducibles}
    assert found == {ext(s) for s in ("5500", "3500", "3400", "0050", "0020", "0005")}


def test_intent_rendering(sigmaPrime, sigmaPrimeLattice):
    concept = sigmaPrimeLattice[ext("0010")]
    assert concept.intent.values == (0, 5, 4)
    assert concept.toDict(sigmaPrime) == {'extent': {'b3': "1/5"}, 'intent': {'a2': "1", 'a3': "4/5"}}


def test_fuzzy_attribute_concepts(sigmaPrime):
    assert fuzzyAttributeConcept(sigmaPrime, "a2", "0.4").extent.values == ext("0050")
    assert fuzzyAttributeConcept(sigmaPrime, "a3", "0.8").extent.values == ext("0015")
    assert fuzzyAttributeConcept(sigmaPrime, 2, 4).extent.values == ext("0015")
    with pytest.raises(GridError):
        fuzzyAttributeConcept(sigmaPrime, "a1", "0.3")
    with pytest.raises(UnknownAttribute):
        fuzzyAttributeConcept(sigmaPrime, "a9", 1)


def test_fuzzy_object_concept(sigma):
    concept = fuzzyObjectConcept(sigma, "b4", 5)
    assert concept.intent.values == (0, 0, 5)
    assert concept.extent.values == ext("0005")


def test_generators(sigmaPrimeLattice):
    lat = sigmaPrimeLattice
    assert lat.irreducibles[lat.conceptIndex(ext("0050"))] == [(1, 1), (1, 2)]
    assert lat.irreducibles[lat.conceptIndex(ext("0015"))] == [(2, 4)]


@pytest.mark.parametrize("which", ["sigma", "sigmaPrime"])
def test_concepts_are_closed(which, request):
    ctx = request.getfixturevalue(which)
    for c in enumerateConcepts(ctx).concepts:
        assert deriveUp(ctx, c.extent) == c.intent
        assert deriveDown(ctx, c.intent) == c.extent
        assert deriveDown(ctx, deriveUp(ctx, c.extent.values)) == c.extent


@pytest.mark.parametrize("which", ["sigma", "sigmaPrime"])
def test_representation_holds_everywhere(which, request):
    ctx = request.getfixturevalue(which)
    grades = ctx.chain.grades
    for a, b in itertools.product(ctx.attributes, ctx.objects):
        for x, y in itertools.product(grades, grades):
            assert checkRepresentation(ctx, a, x, b, y), (a, x, b, y)


def test_representation_sides_take_both_values(sigma):
    grades = sigma.chain.grades
    seen = {representationSides(sigma, a, x, b, y)
            for a, b in itertools.product(sigma.attributes, sigma.objects)
            for x, y in itertools.product(grades, grades)}
    assert seen == {(True, True), (False, False)}


def test_meet_irreducibles_match_structure(sigmaPrime, sigmaPrimeLattice):
    found = meetIrreducibleConcepts(sigmaPrime, sigmaPrimeLattice)
    assert found == sigmaPrimeLattice.irreducibles
    assert set(found) == sigmaPrimeLattice.lattice.meetIrreducibles()
    assert sigmaPrimeLattice.top not in found


def test_concept_index(sigmaLattice):
    lat = sigmaLattice
    assert lat.conceptIndex("C3") == 3
    assert lat.conceptIndex(ext("0050")) == 3
    assert lat.conceptIndex(lat.concepts[3]) == 3
    assert lat.conceptIndex(lat.concepts[3].extent) == 3
    assert lat[5].extent.values == ext("3500")
    for bad in ("C99", ext("1111"), 8, lat.concepts[3].intent):
        with pytest.raises(UnknownConcept):
            lat.conceptIndex(bad)


def test_irreducible_index_sets(sigma, sigmaLattice):
    generated, above = irreducibleIndexSets(sigma, sigmaLattice, ["a2"], "C3")
    assert generated == {2, 3}
    assert above == {3}
    generated, above = irreducibleIndexSets(sigma, sigmaLattice, ["a1"], sigmaLattice.bottom)
    assert {sigmaLattice.concepts[i].extent.values for i in above} == {ext("3400"), ext("3500"), ext("5500")}


def test_irreducible_index_sets_of_a_unit(sigmaPrime, sigmaPrimeLattice):
    lat = sigmaPrimeLattice
    c = lat.conceptIndex(ext("0010"))
    generated, above = irreducibleIndexSets(sigmaPrime, lat, ["a2", "a3"], ext("0010"))
    assert {lat.conceptIndex(ext("0050")), lat.conceptIndex(ext("0015"))} <= above
    assert above <= generated
    assert lat.lattice.meetOf(above) == c
    assert lat.lattice.meet(lat.conceptIndex(ext("0050")), lat.conceptIndex(ext("0015"))) == c
    generated, above = irreducibleIndexSets(sigmaPrime, lat, ["a1"], ext("0010"))
    assert generated
    assert above == frozenset()


def test_report(sigmaPrimeLattice):
    report = sigmaPrimeLattice.toDict()
    assert report['bottom'] == "C0"
    assert report['top'] == "C14"
    assert len(report['concepts']) == 15
    c10 = report['concepts'][10]
    assert c10['label'] == "C10"
    assert c10['irreducible']
    assert c10['generators'] == [["a2", "1/5"], ["a2", "2/5"]]
    assert not report['concepts'][14]['irreducible']


def test_fuzzy_set_domains(sigma):
    with pytest.raises(ContextError):
        FuzzySet("things", (0, 1))
    with pytest.raises(ContextError):
        deriveUp(sigma, FuzzySet("attributes", (0, 0, 0)))
    with pytest.raises(ContextError):
        deriveDown(sigma, (0, 0))
    with pytest.raises(ContextError):
        deriveDown(sigma, (0, 0, 9))


def test_concept_order(sigmaLattice):
    low, high = sigmaLattice[ext("3400")], sigmaLattice[ext("5500")]
    assert isinstance(low, FormalConcept)
    assert low <= high
    assert not high <= low
    assert not FuzzySet("objects", (0, 0, 0, 0)) <= FuzzySet("attributes", (0, 0, 0, 0))
