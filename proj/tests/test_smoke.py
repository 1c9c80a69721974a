import socenter


def test_low_rank_closed_forms():
    c2 = socenter.build_C(2)
    a21 = socenter.gen(2, 2, 1)
    u2 = socenter.Element.from_json('{"rank":2,"terms":[{"mono":[],"coeff":[[2,"1","1","0","1"]]}]}')
    assert c2 == u2 + a21 * a21
    assert str(socenter.build_C(0)) == "1"
    assert socenter.build_PF(1) == a21


def test_centrality_and_shape():
    for n in range(2, 6):
        c = socenter.build_C(n)
        assert socenter.is_central(c)["ok"]
        assert socenter.monic_degree_check(c, n)
        assert socenter.opp(c) == c
    report = socenter.is_central(socenter.gen(3, 2, 1))
    assert not report["ok"]
    assert report["witness"] is not None


def test_json_round_trip():
    c = socenter.build_C(4)
    assert socenter.Element.from_json(c.to_json()) == c


def test_gamma_of_pfaffian():
    g = socenter.gamma(socenter.build_PF(2))
    assert g["vars"] == ["H", "T1"]
    assert g["terms"] == [{"exps": [1, 1], "coeff": [[0, "-1", "1", "0", "1"]]}]
    assert socenter.iwasawa_pf_check(3)["ok"]


def test_gt_lemmas():
    for ell in socenter.shift_indices(5):
        for lemma in ("pipi", "noX", "X2", "X1"):
            r = socenter.verify(lemma, 5, [2, 1], ell)
            assert r["pass"], r
    assert socenter.verify("pf_shift", 6, [1, 1], tol=1e-10)["pass"]
    assert socenter.gt_dimension(5, [1, 0]) == 5
