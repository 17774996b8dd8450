import pytest

pbound = pytest.importorskip("pbound")

FOLD = "dw/dz = (z^2 + m*w) / (z + w^2); m = {mu}"
LV = "dz/dt = z*(z + c*w - 1); dw/dt = w*(b*z + w - a); a=-1; b=5; c=0"


def test_fold_multiplicity():
    r = pbound.multiplicity(FOLD.format(mu=0))
    assert r["status"] == "finite"
    assert r["mul"] == 3
    pair = [b for b in r["branches"] if b["conjugacy_degree"] == 2]
    assert pair and pair[0]["tower"][0]["minimal_polynomial"] == "t1^2+1"


def test_critical_witness():
    r = pbound.multiplicity(FOLD.format(mu="3/2"))
    assert r["status"] == "critical"
    assert r["witness"]["lambda"] == "3/2"


def test_line_bound():
    r = pbound.bound(LV, line=(1, 0, 0))
    assert r["bounds"]["line_bound"] == 6
    assert r["bounds"]["fallback_bound"] == 6


def test_lotka_volterra():
    r = pbound.lotka_volterra(-1, 0, 0)
    assert r["classification"]["verdict"] == "strict-curve"
    assert r["classification"]["certificate"]["cofactor"] == "z+w"


def test_darboux_and_roundtrip():
    certs = pbound.darboux(LV, max_degree=1)["certificates"]
    assert [c["curve"] for c in certs] == ["z", "z-1", "w"]
    text = pbound.normalize_system(LV)
    assert pbound.normalize_system(text) == text


def test_parse_error():
    with pytest.raises(pbound.PboundError) as e:
        pbound.multiplicity("dw/dz = w / (z")
    assert e.value.code == 2
    assert e.value.error["column"] == 13
