import os

try:
    import foamho as m
except ImportError:
    import _core as m

UNKNOT = "surface disk\nloop 0\n"
LOOP_ANNULUS = "surface annulus\nloop 0 h1 1\n"
HOPF = """surface disk
edge 0
edge 1
edge 2
edge 3
crossing 0 0.1 2.1 1.0 3.0
crossing 1 3.1 1.1 2.0 0.0
"""


def test_unknot_homology():
    rows = m.homology(UNKNOT)
    assert [(r["i"], r["j"], r["s"], r["free_rank"], r["torsion"]) for r in rows] == [
        (0, -2, "0", 1, []),
        (0, 2, "0", 1, []),
    ]


def test_annulus_loop_s_grading():
    rows = m.homology(LOOP_ANNULUS)
    assert sorted(r["s"] for r in rows) == ["+1[1]", "-1[1]"]


def test_backends_agree_on_hopf():
    aps = m.homology(HOPF, backend="aps")
    foam = m.homology(HOPF, backend="foam")
    assert aps == foam
    assert sum(r["free_rank"] for r in aps) == 4


def test_chain_groups_hopf():
    rows = m.chain_groups(HOPF)
    assert sum(r["dim"] for r in rows) == 12


def test_verify():
    checks = m.verify(HOPF)
    assert all(checks.values()), checks


def test_table_cases():
    rows = m.table_cases()
    assert len(rows) == 21
    assert all(r["match"] for r in rows)


def test_roundtrip_and_errors():
    assert "surface disk" in m.roundtrip(UNKNOT)
    try:
        m.roundtrip("loop 0\n")
    except m.DiagramParseError:
        pass
    else:
        raise AssertionError("expected DiagramParseError")


def test_corpus_parses():
    corpus = os.environ.get("FOAMHO_CORPUS_DIR")
    if not corpus:
        return
    for name in os.listdir(corpus):
        if name.endswith(".dg"):
            with open(os.path.join(corpus, name)) as f:
                m.roundtrip(f.read())
