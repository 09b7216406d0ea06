import random
from fractions import Fraction
from math import gcd

import pytest

from euclid4.admissible import (
    AdmissibleCertificate,
    Conclusion,
    FailureReport,
    brute_force_surjectivity,
    check_conditions,
    conclude_euclidean,
    construct_witness,
    find_prime_element,
    search_pair,
)
from euclid4.elements import from_power_coords, norm, one
from euclid4.errors import (
    BoundExceeded,
    CapExceeded,
    MissingAssumption,
    SamePrime,
    SearchExhausted,
)
from euclid4.intmath import ResidueClass
from euclid4.residues import degree_one_primes_above, reduce_mod_p2
from euclid4.units import Provenance, UnitData, torsion, unit_data


def paper_units(k):
    g, eta = torsion(k)
    eps = from_power_coords(
        k, [Fraction(-1), Fraction(-1, 6), Fraction(1, 4), Fraction(-1, 24)]
    )
    return UnitData(g, eta, eps, Provenance.SUPPLIED)


def test_worked_example_conditions(gaussian_sqrt11):
    """All five conditions hold for the explicit unit at (157, 5)."""
    k = gaussian_sqrt11
    units = paper_units(k)
    P1 = degree_one_primes_above(k, 157)[0]  # the conjugate with order 6123
    hits = [
        P2
        for P2 in degree_one_primes_above(k, 5)
        if isinstance(check_conditions(k, units, P1, P2), AdmissibleCertificate)
    ]
    assert hits
    cert = check_conditions(k, units, P1, hits[0])
    assert cert.ord_eps_P1 == 6123 == 157 * 156 // 4
    assert cert.ord_eta_P1 == 4
    assert cert.ord_eps_P2 == 20
    assert cert.gcd_checks == (True, True)
    assert cert.conclusion == Conclusion.ADMISSIBLE_PAIR
    # integer facts behind conditions (2) and (3)
    assert gcd(6123, 20) == 1 and gcd(6123, 4) == 1
    assert 6123 == 3 * 13 * 157


def test_failure_report_names_first_condition(gaussian_sqrt11):
    k = gaussian_sqrt11
    units = paper_units(k)
    bad_P1 = degree_one_primes_above(k, 157)[1]  # order 24492 here
    P2 = degree_one_primes_above(k, 5)[0]
    report = check_conditions(k, units, bad_P1, P2)
    assert isinstance(report, FailureReport)
    assert report.condition == 1
    assert report.computed == 24492 and report.required == 6123


def test_same_prime_rejected(gaussian_sqrt11):
    k = gaussian_sqrt11
    units = paper_units(k)
    pr = degree_one_primes_above(k, 5)
    with pytest.raises(SamePrime):
        check_conditions(k, units, pr[0], pr[1])


def test_search_deterministic(entries):
    spec = entries["K_1"].spec
    ud = unit_data(spec)
    a = search_pair(spec, ud, 100)
    b = search_pair(spec, ud, 100)
    assert a.pair == b.pair == (29, 17)
    assert (a.P1.conjugate_index, a.P2.conjugate_index) == (
        b.P1.conjugate_index,
        b.P2.conjugate_index,
    )
    assert a.units.epsilon.coords == b.units.epsilon.coords


def test_search_conductor5_small_bound(entries):
    spec = entries["5"].spec
    cert = search_pair(spec, unit_data(spec), 50)
    assert cert.pair == (31, 11)


def test_search_exhausted(entries):
    spec = entries["K_1"].spec
    with pytest.raises(SearchExhausted) as exc:
        search_pair(spec, unit_data(spec), 3)
    assert exc.value.stats["split_primes"] == 0


def test_surjectivity_trivial_and_cap(entries):
    spec = entries["K_8"].spec
    ud = unit_data(spec)
    primes3 = degree_one_primes_above(spec, 3)
    primes59 = degree_one_primes_above(spec, 59)
    assert brute_force_surjectivity(spec, ud, primes3[0], primes59[0], 0, 0)
    with pytest.raises(CapExceeded):
        brute_force_surjectivity(spec, ud, primes3[0], primes59[0], 2, 2, cap=10)
    with pytest.raises(ValueError):
        brute_force_surjectivity(spec, ud, primes3[0], primes59[0], 3, 2)


def test_surjectivity_on_reproduced_pair(reproduction):
    report, cert = reproduction["K_8"]
    assert report.status == "Reproduced" and cert.pair == (3, 59)
    assert brute_force_surjectivity(cert.spec, cert.units, cert.P1, cert.P2, 2, 2)
    broken = UnitData(cert.units.g, cert.units.eta, one(cert.spec), Provenance.SUPPLIED)
    assert not brute_force_surjectivity(cert.spec, broken, cert.P1, cert.P2, 2, 2)


def test_witness_samples(reproduction):
    report, cert = reproduction["K_8"]
    p1, p2 = cert.pair
    q1, q2 = p1 * p1, p2 * p2

    w = construct_witness(cert, ResidueClass(1, q1), ResidueClass(1, q2))
    assert reduce_mod_p2(w.z, cert.P1).value == 1
    assert reduce_mod_p2(w.z, cert.P2).value == 1

    # hitting the generators themselves
    w = construct_witness(cert, w.alpha[0], w.beta[1])
    assert reduce_mod_p2(w.z, cert.P1).value == w.alpha[0].value
    assert reduce_mod_p2(w.z, cert.P2).value == w.beta[1].value

    rng = random.Random(21)
    for _ in range(30):
        x = rng.randrange(1, q1)
        while x % p1 == 0:
            x = rng.randrange(1, q1)
        y = rng.randrange(1, q2)
        while y % p2 == 0:
            y = rng.randrange(1, q2)
        w = construct_witness(cert, ResidueClass(x, q1), ResidueClass(y, q2))
        assert reduce_mod_p2(w.z, cert.P1).value == x
        assert reduce_mod_p2(w.z, cert.P2).value == y


def test_witness_validates_targets(reproduction):
    _, cert = reproduction["K_8"]
    p1, p2 = cert.pair
    with pytest.raises(ValueError):
        construct_witness(cert, ResidueClass(p1, p1 * p1), ResidueClass(1, p2 * p2))
    with pytest.raises(ValueError):
        construct_witness(cert, ResidueClass(1, 7), ResidueClass(1, p2 * p2))


def test_conclude_euclidean(reproduction):
    _, cert = reproduction["K_8"]
    final = conclude_euclidean(cert, class_number_one=True)
    assert final.conclusion == Conclusion.EUCLIDEAN
    assert final.unit_rank == 1 and final.prime_count == 2
    with pytest.raises(MissingAssumption):
        conclude_euclidean(cert, class_number_one=False)
    with pytest.raises(ValueError):
        conclude_euclidean(final, class_number_one=True)
    # a degenerate single-prime "pair" is refused
    from dataclasses import replace

    with pytest.raises(SamePrime):
        conclude_euclidean(replace(cert, P2=cert.P1), class_number_one=True)


def test_find_prime_element_examples(gaussian_sqrt11):
    k = gaussian_sqrt11
    P5 = degree_one_primes_above(k, 5)[0]
    el = find_prime_element(P5, 50)
    assert el.coords == (-2, -1, 0, 0)
    assert abs(norm(el)) == 5
    assert reduce_mod_p2(el, P5).value % 5 == 0
    assert reduce_mod_p2(el, P5).value % 25 != 0

    P157 = degree_one_primes_above(k, 157)[0]
    el = find_prime_element(P157, 50)
    assert el.coords == (-4, -3, 1, 1)
    assert abs(norm(el)) == 157
    assert reduce_mod_p2(el, P157).value % 157 == 0
    # el generates the prime, so its square lands in the squared ideal
    assert reduce_mod_p2(el * el, P157).value == 0

    with pytest.raises(BoundExceeded):
        find_prime_element(P5, 0)


def test_find_prime_element_other_conjugate(gaussian_sqrt11):
    k = gaussian_sqrt11
    primes = degree_one_primes_above(k, 5)
    a = find_prime_element(primes[0], 50)
    b = find_prime_element(primes[1], 50)
    assert reduce_mod_p2(a, primes[1]).value % 5 != 0
    assert reduce_mod_p2(b, primes[1]).value % 5 == 0


def test_reference_pair_errata(entries):
    """Some registry reference pairs are provably not admissible.

    For K_29 = Q(sqrt(-19), sqrt(-67)) with (23, 47): 23 divides 47 - 1, so
    gcd(p1(p1-1)/g, p2(p2-1)) = 23 in either role assignment and the
    coprimality condition can never hold.  For K_26 = Q(sqrt(-11), sqrt(-19))
    with (23, 5), exhaustive enumeration of the unit image over every
    conjugate choice shows the map onto the residue group is never onto.
    """
    assert gcd(23 * 22 // 2, 47 * 46) == 23
    assert gcd(47 * 46 // 2, 23 * 22) == 23

    spec = entries["K_26"].spec
    ud = unit_data(spec)
    for P1 in degree_one_primes_above(spec, 23):
        for P2 in degree_one_primes_above(spec, 5):
            assert not brute_force_surjectivity(spec, ud, P1, P2, 2, 2)
