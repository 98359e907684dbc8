"""Acceptance criteria, one test each.

Every test times its work against the stated limit and prints a single
``criterion N: PASS|FAIL`` line.  Run ``pytest tests/test_acceptance.py -s``
to see only these lines, or plain ``pytest`` (they are printed either way).
"""

import json
import random
import time
from itertools import product

import pytest

from tropid import cli
from tropid import decide as D
from tropid import words as W
from tropid.bicyclic import BicyclicElement, b_eval, b_mul, rewrite_oracle, separates
from tropid.polyfun import bicyclic_value_polys, u2_basis, u2_entry_polys
from tropid.tropical import NEG_INF, TropMatrix, eval_word_matrix
from tropid.words import Identity


@pytest.fixture
def report(capsys):
    def _report(number, title, limit, fn):
        start = time.perf_counter()
        error = None
        try:
            fn()
        except AssertionError as exc:
            error = exc
        elapsed = time.perf_counter() - start
        in_time = limit is None or elapsed < limit
        ok = error is None and in_time
        why = "" if ok else (f" ({error})" if error else f" (over the {limit:g} s limit)")
        bound = "no time limit" if limit is None else f"limit {limit:g} s"
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {title}  "
                  f"[{elapsed:.2f} s, {bound}]{why}")
        if error is not None:
            raise error
        assert in_time, f"took {elapsed:.2f} s, limit {limit} s"
    return _report


def _cli_json(argv):
    # same code path as ``tropid --json --no-cache ...``
    return cli.run_payload(argv, cli.Context())


def test_criterion_1_adjan_identity_holds(report):
    def run():
        data = _cli_json(["check", "--monoid", "bicyclic", "--identity", "xyyxxyxyyx == xyyxyxxyyx"])
        assert data == {"status": "holds", "method": "exact", "witness": None}

    report(1, "Adjan identity holds in the bicyclic monoid (exact)", 1, run)


def test_criterion_2_adjan_word_partners(report):
    def run():
        s = D.partner_search(tuple("xyyxxyxyyx"), strategy="exhaustive")
        assert s.candidates == 252
        assert s.partners == [tuple("xyyxxyxyyx"), tuple("xyyxyxxyyx")]

    report(2, "partners of xyyxxyxyyx among 252 words", 30, run)


def test_criterion_3_two_letter_scan(report):
    def run():
        r = D.shleifer_scan()
        assert r.words == 252 and r.pairs_checked == 252 * 251 // 2
        assert r.representatives == [W.ADJAN, W.SHLEIFER]

    report(3, "two nontrivial identities among balanced length-10 words over x, y", 1800, run)


def test_criterion_4_prohibited_identities_fail(report):
    def run():
        for w in W.condition_iii_words():
            ident = Identity(w, W.condition_iii_partner(w))
            v = D.holds_bicyclic(ident)
            assert v.status == D.FAILS and v.method == D.EXACT
            assert separates(ident, v.witness)
            assert D.verdict_from_json(v.to_json()).witness == v.witness
        phi = {"x": BicyclicElement(0, 2), "y": BicyclicElement(3, 0), "z": BicyclicElement(0, 3)}
        assert (b_eval("xyzyxxyxyzyx", phi), b_eval("xyzyxyxxyzyx", phi)) == ((1, 2), (2, 3))
        psi = {"x": BicyclicElement(2, 0), "y": BicyclicElement(0, 3), "z": BicyclicElement(3, 0)}
        assert (b_eval("xyyzxxyxyyzx", psi), b_eval("xyyzxyxxyyzx", psi)) == ((3, 2), (2, 1))

    report(4, "six prohibited identities fail; explicit values match", None, run)


def test_criterion_5_no_short_identities(report):
    def run():
        scan = D.short_isoterm_scan(8)
        assert scan.passed, scan.identities[:3]
        assert scan.classes == 66

    report(5, "no nontrivial identity with sides of length <= 8", 600, run)


@pytest.mark.parametrize("word", ["".join(w) for w in W.condition_iii_words()])
def test_criterion_6_condition_words_are_isoterms(report, word):
    def run():
        w = tuple(word)
        s = D.partner_search(w, strategy="exhaustive")
        assert s.partners == [w]
        assert s.candidates == s.space
        if word == "xyzyxxyxyzyx":
            assert s.candidates == 16632
        assert D.partner_search(w, strategy="pruned").partners == [w]

    report(6, f"{word} has no partner but itself", 600, run)


def _random_balanced_pair(rng):
    k = rng.randint(2, 4)
    letters = "xyzt"[:k]
    while True:
        u = tuple(rng.choice(letters) for _ in range(rng.randint(2, 5)))
        v = list(u)
        rng.shuffle(v)
        v = tuple(v)
        if u != v:
            return u, v


def test_criterion_7_upper_triangular_identities(report):
    def run():
        for n in range(1, 5):
            v = D.holds_u2t(W.adjan_family(n))
            assert v.status == D.HOLDS and v.method == D.EXACT, n
        ident = W.parse_identity("ABAAB == ABBAB")
        assert D.holds_u2t(ident, [["A", "B"]]).holds
        v = D.holds_u2t(ident)
        assert v.status == D.FAILS and v.witness is not None
        assert eval_word_matrix(ident.lhs, v.witness) != eval_word_matrix(ident.rhs, v.witness)
        rng = random.Random(54)
        for _ in range(20):
            u, w = _random_balanced_pair(rng)
            v = D.holds_u2t(Identity(u + w + u + u + w, u + w + w + u + w))
            assert v.status == D.HOLDS and v.method == D.EXACT, (u, w)

    report(7, "upper-triangular identities (family, diagonal, uvuuv)", 300, run)


def test_criterion_8_embedding(report):
    def run():
        r = D.verify_embedding(20)
        assert r.passed, r.checks
        assert r.distinct == 441

    report(8, "matrix embedding on {0..20}^2", 1, run)


def _u2_point_matrices(variables, symbols, values):
    return {x: TropMatrix([[values[symbols[x][0]], values[symbols[x][1]]],
                           [NEG_INF, values[symbols[x][2]]]]) for x in variables}


def test_criterion_9_oracle_equivalence(report):
    def run():
        rng10 = range(11)
        for a, b, c, d in product(rng10, repeat=4):
            p, q = BicyclicElement(a, b), BicyclicElement(c, d)
            assert b_mul(p, q) == rewrite_oracle(p.as_string() + q.as_string())

        idents = [W.ADJAN, W.SHLEIFER, W.adjan_family(3)]
        idents += [Identity(w, W.condition_iii_partner(w)) for w in W.condition_iii_words()]
        rng = random.Random(2024)
        for ident in idents:
            variables = W.ordered_content(*ident)
            polys = [bicyclic_value_polys(side) for side in ident]
            index = [[variables.index(c.var) for c in p[0].coords] for p in polys]
            for _ in range(10_000):
                vals = [BicyclicElement(rng.randint(0, 12), rng.randint(0, 12)) for _ in variables]
                phi = dict(zip(variables, vals))
                for side, (pB, pA), idx in zip(ident, polys, index):
                    pt = [vals[i][k % 2] for k, i in enumerate(idx)]
                    e = b_eval(side, phi)
                    assert (pB.evaluate(pt), pA.evaluate(pt)) == (e.a, e.b)

        for ident, classes in ((W.adjan_family(2), None),
                               (W.parse_identity("ABAAB == ABBAB"), [["A", "B"]])):
            variables = W.ordered_content(*ident)
            coords, symbols = u2_basis(variables, classes)
            polys = [u2_entry_polys(side, coords, symbols) for side in ident]
            for _ in range(10_000):
                values = [NEG_INF if rng.random() < 0.2 else rng.randint(-9, 9) for _ in coords]
                phi = _u2_point_matrices(variables, symbols, values)
                for side, ps in zip(ident, polys):
                    M = eval_word_matrix(side, phi)
                    assert tuple(p.evaluate(values) for p in ps) == (M[0, 0], M[0, 1], M[1, 1])

    report(9, "product vs rewriting oracle; polynomials vs direct evaluation", None, run)


def test_criterion_10_replay(report):
    def run():
        data = _cli_json(["replay", "--n", "6"])
        assert data["passed"] and data["failures"] == []
        assert data["bounds"]["max_vars"] == 2
        labels = data["details"]["labels"]
        assert labels["vars=2"] + labels.get("vars=1", 0) == data["cases"] > 0
        json.dumps(data)

    report(10, "every <=2-variable word applicable to U_6 is classified", 600, run)
