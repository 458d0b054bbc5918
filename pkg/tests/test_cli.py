"""Command-line surface: parsing, output shape, exit codes."""

import json

import pytest

from as90 import cli
from as90.fields import make_ctx


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- element parsing -----------------------------------------------------------

def test_parse_elem_forms():
    ctx = make_ctx(2, 4, modulus="t^4+t^3+1")
    t = ctx.gen()
    assert cli.parse_elem("t^2+t", ctx) == t * t + t
    assert cli.parse_elem("0,1,1,0", ctx) == t + t * t
    assert cli.parse_elem("6", ctx) == t + t * t  # 6 = 0+1*2+1*4
    assert cli.parse_elem(" 1 ", ctx) == ctx.one()
    # polynomials reduce mod the field modulus
    assert cli.parse_elem("t^4", ctx) == t**4


def test_parse_elem_range_and_garbage():
    ctx = make_ctx(2, 2)
    with pytest.raises(Exception):
        cli.parse_elem("4", ctx)
    with pytest.raises(Exception):
        cli.parse_elem("banana", ctx)


def test_fmt_elem():
    ctx = make_ctx(3, 2)
    e = ctx.gen() + ctx.one()
    assert cli.fmt_elem(e, "coeffs") == "1,1"
    assert cli.fmt_elem(e, "human") == str(e)


# -- root subcommand -------------------------------------------------------------

def test_root_coprime_text(capsys):
    code, out, _ = run(capsys, "root", "--p", "2", "--n", "3", "--y", "t+t^2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "field: GF(2^3) mod t^3+t^2+1"
    assert "method: coprime" in lines
    assert "base root: t+1" in lines  # y^2 reduced mod t^3+t^2+1
    assert "verified: true" in lines


def test_root_undetermined_line(capsys):
    code, out, _ = run(
        capsys, "root", "--p", "2", "--n", "2", "--f", "2", "--y", "1"
    )
    assert code == 0
    assert "conclusion: no root; irreducibility undetermined" in out.splitlines()


def test_root_irreducible_line(capsys):
    code, out, _ = run(capsys, "root", "--p", "2", "--n", "3", "--y", "t")
    assert code == 0
    assert "conclusion: irreducible" in out.splitlines()


def test_root_json_schema(capsys):
    code, out, _ = run(
        capsys, "root", "--p", "2", "--n", "3", "--y", "t+t^2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "base_root", "coset_size", "field", "method", "notes",
        "polynomial", "seed", "status", "verified",
    }
    assert payload["status"] == "root"
    assert payload["base_root"] == "t+1"
    assert payload["coset_size"] == 2
    assert payload["verified"] is True


def test_root_json_no_root(capsys):
    code, out, _ = run(
        capsys, "root", "--p", "2", "--n", "2", "--f", "2", "--y", "1",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "undetermined"
    assert payload["conclusion"] == "no root; irreducibility undetermined"
    assert payload["polynomial"] == "t^4-t-(1)"


def test_root_byte_determinism(capsys):
    args = ("root", "--p", "2", "--n", "12", "--y", "0", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_root_all_roots_listed(capsys):
    code, out, _ = run(
        capsys, "root", "--p", "2", "--n", "2", "--y", "0", "--all"
    )
    assert code == 0
    # the coset of 0 is GF(2) = {0, 1}
    assert out.splitlines()[-1] == "all roots: 0; 1"


def test_root_methods_agree(capsys):
    outs = []
    for method in ("auto", "table", "p2mod3", "general", "brute"):
        code, out, _ = run(
            capsys, "root", "--p", "2", "--n", "6", "--y", "t+t^4",
            "--method", method, "--json",
        )
        assert code == 0, method
        outs.append(json.loads(out))
    # all constructions verify; methods differ, roots may differ by GF(2)
    assert all(o.get("verified", True) for o in outs)


def test_root_prime_r_needs_r(capsys):
    code, _, err = run(
        capsys, "root", "--p", "2", "--n", "6", "--y", "0", "--method",
        "prime-r",
    )
    assert code == 2
    assert "error:" in err and "--r" in err


def test_root_elem_format_coeffs(capsys):
    code, out, _ = run(
        capsys, "root", "--p", "2", "--n", "6", "--y", "0", "--method",
        "prime-r", "--r", "3", "--elem-format", "coeffs",
    )
    assert code == 0
    assert "base root: 0,0,0,0,0,0" in out.splitlines()
    assert "method: prime_r" in out.splitlines()


def test_root_brute_on_big_field_refused(capsys):
    code, _, err = run(
        capsys, "root", "--p", "2", "--n", "32", "--y", "0", "--method",
        "brute",
    )
    assert code == 2
    assert "error:" in err


# -- error reporting -------------------------------------------------------------

def test_nonprime_p_is_domain_error(capsys):
    code, _, err = run(capsys, "root", "--p", "4", "--n", "2", "--y", "1")
    assert code == 2
    assert err.startswith("error: 4 is not prime")


def test_garbage_element_is_domain_error(capsys):
    code, _, err = run(capsys, "root", "--p", "2", "--n", "4", "--y", "x+y")
    assert code == 2
    assert err.startswith("error: cannot read")


def test_bad_subfield_step(capsys):
    code, _, err = run(
        capsys, "root", "--p", "2", "--n", "5", "--f", "3", "--y", "0"
    )
    assert code == 2


# -- period subcommand -------------------------------------------------------------

def test_period_explicit_z(capsys):
    code, out, _ = run(capsys, "period", "--p", "2", "--n", "4", "--z", "t")
    assert code == 0
    lines = out.splitlines()
    assert "period: 8 (expected 8)" in lines
    assert "pass: true" in lines
    assert "z: t (explicit)" in lines


def test_period_searched_witness(capsys):
    code, out, _ = run(
        capsys, "period", "--p", "3", "--n", "3", "--seed", "7"
    )
    assert code == 0
    assert "pass: true" in out.splitlines()
    assert "seed: 7" in out.splitlines()


def test_period_json(capsys):
    code, out, _ = run(
        capsys, "period", "--p", "2", "--n", "4", "--z", "t", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["period"] == 8
    assert payload["expected_period"] == 8
    assert payload["pass"] is True


def test_period_trace_not_one(capsys):
    code, _, err = run(capsys, "period", "--p", "2", "--n", "4", "--z", "0")
    assert code == 2
    assert "error:" in err


# -- h90 subcommand ----------------------------------------------------------------

def test_h90_roundtrip(capsys):
    code, out, _ = run(
        capsys, "h90", "--p", "2", "--n", "4", "--y", "0", "--z", "t",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["symmetry_defect"] == "0"
    assert payload["x"] == "0"


def test_h90_text(capsys):
    code, out, _ = run(
        capsys, "h90", "--p", "2", "--n", "4", "--y", "0", "--z", "t"
    )
    assert code == 0
    assert "verified=true" in out
    assert "symmetry defect R(y,z)+R(z,y)+Tr(yz): 0" in out


# -- table subcommand ----------------------------------------------------------------

def test_table_verify_all_rows(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n_2 | symbol | m_z(t) | checks"
    assert len(lines) == 7  # header + five rows + summary
    assert lines[-1] == "all rows pass: true"
    assert all("=ok" in line for line in lines[1:6])


def test_table_verify_json(capsys):
    code, out, _ = run(capsys, "table", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert [row["n_2"] for row in payload["rows"]] == [2, 4, 8, 16, 32]
    for row in payload["rows"]:
        assert row["pass"] is True


def test_table_regen(capsys):
    code, out, _ = run(capsys, "table", "--regen")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n_2 | symbol | m_z(t)"
    assert lines[1] == "2 | ω | t^2+t+1"
    assert len(lines) == 6


# -- cyclotomic / tensor / bigsearch ---------------------------------------------------

def test_cyclotomic_text(capsys):
    code, out, _ = run(capsys, "cyclotomic", "--r", "7", "--p", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Phi_7 over F_2: 2 irreducible factors of degree 3 = ord_7(2)"
    assert "  t^3+t^2+1  [big]" in lines
    assert "  t^3+t+1  [small]" in lines
    assert lines[-1] == "product matches Phi_7: true"


def test_cyclotomic_json(capsys):
    code, out, _ = run(capsys, "cyclotomic", "--r", "11", "--p", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["e"] == 10
    assert payload["count"] == 1
    assert payload["factors"][0]["class"] == "big"
    assert payload["product_matches"] is True


def test_cyclotomic_equal_primes(capsys):
    code, _, err = run(capsys, "cyclotomic", "--r", "5", "--p", "5")
    assert code == 2


def test_tensor_text(capsys):
    code, out, _ = run(
        capsys, "tensor", "--p", "2", "--a", "t^2+t+1", "--b", "t^3+t^2+1"
    )
    assert code == 0
    assert "degree 6" in out
    assert "[big]" in out.splitlines()[-1]


def test_bigsearch(capsys):
    code, out, _ = run(capsys, "bigsearch", "--e", "4")
    assert code == 0
    assert out.splitlines()[0].endswith("t^4+t^3+1")
    assert out.splitlines()[1] == "root order: 15"


def test_bigsearch_json(capsys):
    code, out, _ = run(capsys, "bigsearch", "--e", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["e"] == 6
    assert payload["order"] == 63
    assert payload["poly"] == "t^6+t^5+1"
    assert payload["class"] == "big"


# -- misc ---------------------------------------------------------------------------

def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["root", "--p", "2"])  # missing --n/--y
    assert exc.value.code == 2


def test_main_no_args_shows_help():
    with pytest.raises(SystemExit):
        cli.main([])
