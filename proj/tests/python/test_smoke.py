import hhsl2


def test_linear_algebra():
    assert hhsl2.rank([[1, 0], [0, 1]], 5) == 2
    assert hhsl2.rank([[3]], 3) == 0
    assert len(hhsl2.kernel_basis([[0, 1], [0, 0]], 5)) == 1


def test_characters_and_decomposition():
    assert hhsl2.weyl_chi(2) == {-2: 1, 0: 1, 2: 1}
    assert hhsl2.dimension(hhsl2.tilting_char(8, 5)) == 10
    m = hhsl2.truncated_sym("sl2", 5, 6)
    assert m.dim == 19
    assert m.violations() == []
    summands, remainder = hhsl2.decompose(m.character, 5)
    assert [label for label, _ in summands] == ["L(6)", "T(8)", "T(4)"]
    assert remainder == {}


def test_block_projection_and_cohomology():
    block = hhsl2.block_projection_principal(hhsl2.truncated_sym("sl2", 3, 3))
    char, exact = hhsl2.g1_cohomology_char(block, 1)
    assert exact and hhsl2.dimension(char) == 4
    assert hhsl2.u_cohomology(hhsl2.simple_model(2, 5), 1) == {4: 1}
    assert hhsl2.ip_expected_dims(3, 4)[0] == 0


def test_tables():
    rows = hhsl2.hh_table("b1", 3, 6)
    for d in range(7):
        assert sum(hhsl2.dimension(r["character"]) for r in rows if r["degree"] == d) == 1
    rows = hhsl2.hh_table("u1", 5, 4)
    assert sum(hhsl2.dimension(r["character"]) for r in rows if r["degree"] == 4) == 5


def test_reports():
    report = hhsl2.verify_appendix(3)
    assert report["suite"] == "appendix p=3"
    assert all(c["status"] == "PASS" for c in report["checks"])
    props = hhsl2.verify_propositions(5)
    flagged = [c["name"] for c in props["checks"] if c["status"] == "FLAGGED"]
    assert "props.hh0.count" in flagged
    assert not [c for c in props["checks"] if c["status"] == "FAIL"]


def test_cli():
    code, out, _ = hhsl2.run_cli(["decomp", "tsym", "--p", "5", "--n", "6"])
    assert code == hhsl2.EXIT_PASS
    assert out == "L(6)+T(8)+T(4)\n"
    code, _, _ = hhsl2.run_cli(["verify", "appendix", "--p", "4"])
    assert code == hhsl2.EXIT_USAGE
