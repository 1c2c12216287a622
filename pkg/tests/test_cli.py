"""CLI: golden reports, exit codes, determinism."""

from __future__ import annotations

import pytest

from tightrep.cli import main
from tightrep import parse

from test_structfile import COUNTEREXAMPLE


@pytest.fixture
def counterexample_path(tmp_path):
    path = tmp_path / "counterexample.struct"
    path.write_text(COUNTEREXAMPLE, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


CHECK_FULL_GOLDEN = """\
rep: pi
view: full
cover_to_join: pass
tight: fail
witness_X: {}
witness_Y: {}
witness_Z: {1}
nondegenerate: fail
witness_a: 2
"""

CHECK_TIGHTENED_GOLDEN = """\
rep: pi
view: tightened
cover_to_join: pass
tight: pass
nondegenerate: pass
"""

TIGHTENED_FILE_GOLDEN = """\
@semilattice E
elements: 0 1
zero: 0
meet:
0 0
0 1

@algebra B_tightened
elements: 0 1
zero: 0
meet:
0 0
0 1
join:
0 1
1 1

@representation pi_tightened
domain: E
codomain: B_tightened
map:
0 -> 0
1 -> 1
"""

SEARCH_GAP_GOLDEN = """\
gap: 1
semilattice: size=2 meet=[0 0 | 0 1]
algebra: P(2)
map: 0->0 1->1
witness_X: {}
witness_Y: {}
witness_Z: {1}

gap: 2
semilattice: size=2 meet=[0 0 | 0 1]
algebra: P(2)
map: 0->0 1->2
witness_X: {}
witness_Y: {}
witness_Z: {1}

found: 2
"""

ENUMERATE_GOLDEN = """\
@semilattice S2_1
elements: 0 1
zero: 0
meet:
0 0
0 1

# count: 1
"""


def test_validate_ok(capsys, counterexample_path):
    code, out, err = run(capsys, "validate", counterexample_path)
    assert code == 0
    assert out == "ok: 3 structures\n"
    assert err == ""


def test_validate_rejects_broken_tables(capsys, tmp_path):
    path = tmp_path / "bad.struct"
    path.write_text(
        "@semilattice E\nelements: 0 a b\nzero: 0\nmeet:\n"
        "0 0 0\n0 a a\n0 b b\n", encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "not commutative at (a, b)" in err


def test_validate_rejects_empty_files(capsys, tmp_path):
    path = tmp_path / "empty.struct"
    path.write_text("# nothing here\n", encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "no structures" in err


def test_check_full_golden(capsys, counterexample_path):
    code, out, err = run(capsys, "check", counterexample_path,
                         "--rep", "pi", "--view", "full")
    assert code == 0
    assert out == CHECK_FULL_GOLDEN


def test_check_tightened_golden(capsys, counterexample_path):
    code, out, err = run(capsys, "check", counterexample_path,
                         "--rep", "pi", "--view", "tightened")
    assert code == 0
    assert out == CHECK_TIGHTENED_GOLDEN


def test_check_generated_ideal_view(capsys, counterexample_path):
    code, out, err = run(capsys, "check", counterexample_path,
                         "--rep", "pi", "--view", "generated-ideal")
    assert code == 0
    # the generated ideal below the atom equals the tightening corner here
    assert "tight: pass" in out
    assert "nondegenerate: pass" in out


def test_check_is_byte_identical_across_runs(capsys, counterexample_path):
    _, first, _ = run(capsys, "check", counterexample_path, "--rep", "pi")
    _, second, _ = run(capsys, "check", counterexample_path, "--rep", "pi")
    assert first == second == CHECK_FULL_GOLDEN


def test_check_unknown_name(capsys, counterexample_path):
    code, out, err = run(capsys, "check", counterexample_path, "--rep", "nope")
    assert code == 1
    assert "unknown structure 'nope'" in err


def test_check_wrong_kind(capsys, counterexample_path):
    code, out, err = run(capsys, "check", counterexample_path, "--rep", "E")
    assert code == 1
    assert "need a representation or homomorphism" in err


def test_tighten_writes_the_corner_file(capsys, counterexample_path, tmp_path):
    out_path = tmp_path / "out.struct"
    code, out, err = run(capsys, "tighten", counterexample_path,
                         "--rep", "pi", "--out", str(out_path))
    assert code == 0
    assert out.splitlines()[0] == "unit: 1"
    assert out_path.read_text(encoding="utf-8") == TIGHTENED_FILE_GOLDEN

    code, out, err = run(capsys, "check", str(out_path),
                         "--rep", "pi_tightened", "--view", "full")
    assert code == 0
    assert "tight: pass" in out


def test_tighten_rejects_non_cover_to_join(capsys, tmp_path):
    text = """\
@semilattice D
elements: 0 a b 1
zero: 0
meet:
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1

@algebra B
elements: 0 1 2 3 12 13 23 123
zero: 0
meet:
0 0 0 0 0 0 0 0
0 1 0 0 1 1 0 1
0 0 2 0 2 0 2 2
0 0 0 3 0 3 3 3
0 1 2 0 12 1 2 12
0 1 0 3 1 13 3 13
0 0 2 3 2 3 23 23
0 1 2 3 12 13 23 123
join:
0 1 2 3 12 13 23 123
1 1 12 13 12 13 123 123
2 12 2 23 12 123 23 123
3 13 23 3 123 13 23 123
12 12 12 123 12 123 123 123
13 13 123 13 123 13 123 123
23 123 23 23 123 123 23 123
123 123 123 123 123 123 123 123

@representation rho
domain: D
codomain: B
map:
0 -> 0
a -> 1
b -> 2
1 -> 123
"""
    path = tmp_path / "diamond.struct"
    path.write_text(text, encoding="utf-8")
    out_path = tmp_path / "out.struct"
    code, out, err = run(capsys, "tighten", str(path),
                         "--rep", "rho", "--out", str(out_path))
    assert code == 1
    assert "not cover-to-join" in err
    assert "{a, b}" in err
    assert not out_path.exists()


def test_check_tightened_view_needs_cover_to_join(capsys, tmp_path):
    # view construction fails on a representation without the hypothesis
    diamond_file = tmp_path / "d.struct"
    diamond_file.write_text(
        "@semilattice D\nelements: 0 a b 1\nzero: 0\nmeet:\n"
        "0 0 0 0\n0 a 0 a\n0 0 b b\n0 a b 1\n\n"
        "@algebra B\nelements: 0 1 2 12\nzero: 0\nmeet:\n"
        "0 0 0 0\n0 1 0 1\n0 0 2 2\n0 1 2 12\njoin:\n"
        "0 1 2 12\n1 1 12 12\n2 12 2 12\n12 12 12 12\n\n"
        "@representation rho\ndomain: D\ncodomain: B\nmap:\n"
        "0 -> 0\na -> 0\nb -> 0\n1 -> 12\n", encoding="utf-8")
    code, out, err = run(capsys, "check", str(diamond_file),
                         "--rep", "rho", "--view", "tightened")
    assert code == 1
    assert "not cover-to-join" in err


def test_tighten_homomorphism_block(capsys, tmp_path):
    from tightrep.structfile import Block, StructureFile, render
    from tightrep import ISHomomorphism
    from conftest import make_chain2, make_i2, semigroup_from_semilattice

    chain2 = semigroup_from_semilattice(make_chain2())
    i2 = make_i2()
    hom = ISHomomorphism(chain2, i2, {"0": "z", "1": "e1"})
    sf = StructureFile([
        Block("inverse_semigroup", "S", 0, chain2, {}),
        Block("inverse_semigroup", "T", 0, i2, {}),
        Block("homomorphism", "phi", 0, hom, {"domain": "S", "codomain": "T"}),
    ])
    path = tmp_path / "hom.struct"
    path.write_text(render(sf), encoding="utf-8")

    code, out, err = run(capsys, "check", str(path), "--rep", "phi")
    assert code == 0
    assert "cover_to_join: pass" in out
    assert "tight: fail" in out

    out_path = tmp_path / "corner.struct"
    code, out, err = run(capsys, "tighten", str(path),
                         "--rep", "phi", "--out", str(out_path))
    assert code == 0
    assert out.splitlines()[0] == "unit: e1"
    corner_file = parse(out_path.read_text(encoding="utf-8"))
    assert corner_file["T_tightened"].structure.elements == ("z", "e1")

    code, out, err = run(capsys, "check", str(out_path), "--rep", "phi_tightened")
    assert code == 0
    assert "tight: pass" in out


def test_enumerate_golden(capsys):
    code, out, err = run(capsys, "enumerate", "--size", "2")
    assert code == 0
    assert out == ENUMERATE_GOLDEN


def test_enumerate_up_to_iso(capsys):
    code, out, err = run(capsys, "enumerate", "--size", "3", "--up-to-iso")
    assert code == 0
    assert out.rstrip().endswith("# count: 2")
    # emitted blocks parse back as a valid structure file
    blocks = parse(out)
    assert len(blocks) == 2


def test_search_gap_golden_and_determinism(capsys):
    code, first, err = run(capsys, "search-gap", "--max-e", "2", "--atoms", "2")
    assert code == 0
    assert first == SEARCH_GAP_GOLDEN
    _, second, _ = run(capsys, "search-gap", "--max-e", "2", "--atoms", "2")
    assert first == second


def test_search_gap_empty(capsys):
    code, out, err = run(capsys, "search-gap", "--max-e", "2", "--atoms", "1")
    assert code == 0
    assert out == "found: 0\n"


def test_verify_golden_and_determinism(capsys):
    code, first, err = run(capsys, "verify", "--max-e", "3", "--atoms", "2")
    assert code == 0
    assert first == ("semilattices: 5\nalgebras: 1\nrepresentations: 32\n"
                     "checks: 1222\nviolations: 0\n")
    _, second, _ = run(capsys, "verify", "--max-e", "3", "--atoms", "2")
    assert first == second


def test_verify_accepts_repeated_atoms(capsys):
    code, out, err = run(capsys, "verify", "--max-e", "2",
                         "--atoms", "1", "--atoms", "2")
    assert code == 0
    assert "violations: 0" in out


def test_bad_flags_exit_with_input_error(capsys):
    code, out, err = run(capsys, "check", "nowhere.struct", "--rep", "x",
                         "--view", "sideways")
    assert code == 1
    code, out, err = run(capsys, "enumerate", "--size", "two")
    assert code == 1


def test_missing_file_is_an_input_error(capsys):
    code, out, err = run(capsys, "validate", "/does/not/exist.struct")
    assert code == 1
    assert "error:" in err


def test_invalid_spec_values(capsys):
    code, out, err = run(capsys, "search-gap", "--max-e", "0", "--atoms", "2")
    assert code == 1
    assert "at least 1" in err
