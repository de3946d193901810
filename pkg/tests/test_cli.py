import json

from superstring import cli
from superstring.graph import build_matrices


def write_instance(tmp_path, lines, name="inst.txt"):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def scrub(report):
    report = dict(report)
    report.pop("timestamp", None)
    report["results"] = [{k: v for k, v in r.items() if k != "ms"}
                         for r in report["results"]]
    return report


# --------------------------------------------------------------------- solve

def test_solve_exact(tmp_path, capsys):
    path = write_instance(tmp_path, ["abc", "bcd", "cde"])
    out = str(tmp_path / "r.json")
    assert cli.main(["solve", path, "--algo", "exact", "--json", out]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "abcde"
    report = load_json(out)
    assert report["results"][0]["length"] == 5
    assert report["instance"] == {"n": 3, "total_length": 9}


def test_solve_combined(tmp_path, capsys):
    path = write_instance(tmp_path, ["ab", "ba"])
    assert cli.main(["solve", path, "--algo", "combined"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "bab"


def test_solve_each_algo_runs(tmp_path, capsys):
    path = write_instance(tmp_path, ["abab", "babb", "bba", "aab"])
    for algo in ("combined", "s1", "s2", "greedy", "exact"):
        assert cli.main(["solve", path, "--algo", algo]) == 0
    capsys.readouterr()


def test_solve_each_path_solver_runs(tmp_path, capsys):
    path = write_instance(tmp_path, ["abab", "babb", "bba", "aab"])
    for solver in ("exact", "half", "greedy"):
        assert cli.main(["solve", path, "--algo", "s1",
                         "--path-solver", solver]) == 0
    capsys.readouterr()


def test_solve_single_survivor_warns_but_succeeds(tmp_path, capsys):
    path = write_instance(tmp_path, ["abc", "b", "abc"])
    assert cli.main(["solve", path]) == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == "abc"
    assert "single string" in captured.err


def test_solve_comments_and_blank_lines(tmp_path, capsys):
    path = write_instance(tmp_path, ["# a comment", "", "ab", "ba"])
    assert cli.main(["solve", path, "--algo", "exact"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "aba"


def test_solve_missing_file_exits_1(tmp_path, capsys):
    assert cli.main(["solve", str(tmp_path / "nope.txt")]) == 1
    capsys.readouterr()


def test_solve_rejects_nonascii(tmp_path, capsys):
    path = write_instance(tmp_path, ["ab cd"])
    assert cli.main(["solve", path]) == 1
    assert "ASCII" in capsys.readouterr().err


def test_solve_empty_input_exits_1(tmp_path, capsys):
    path = write_instance(tmp_path, ["# nothing here"])
    assert cli.main(["solve", path]) == 1
    capsys.readouterr()


def test_solve_exact_limit_exit_2(tmp_path, capsys):
    strings = ["x" * (i + 1) + "y" * (18 - i) for i in range(18)]
    path = write_instance(tmp_path, strings)
    assert cli.main(["solve", path, "--algo", "exact",
                     "--exact-limit", "4"]) == 2
    capsys.readouterr()


# ------------------------------------------------------------------- compare

def test_compare_table_and_report(tmp_path, capsys):
    path = write_instance(tmp_path, ["abc", "bcd", "cde"])
    out = str(tmp_path / "c.json")
    assert cli.main(["compare", path, "--json", out]) == 0
    stdout = capsys.readouterr().out
    assert "greedy" in stdout and "exact" in stdout
    report = load_json(out)
    lengths = {r["algo"]: r["length"] for r in report["results"]}
    assert lengths["exact"] == 5 and lengths["greedy"] == 5
    assert lengths["s1"] == 6  # representative stays inside its repetitions
    assert report["verification"]["failed"] == 0


def test_compare_degenerate_exits_1(tmp_path, capsys):
    path = write_instance(tmp_path, ["ab", "ab"])
    assert cli.main(["compare", path]) == 1
    capsys.readouterr()


# -------------------------------------------------------------------- verify

def test_verify_tight_suite(tmp_path, capsys):
    out = str(tmp_path / "v.json")
    assert cli.main(["verify", "--suite", "tight", "--json", out]) == 0
    report = load_json(out)
    assert report["verification"]["failed"] == 0
    assert report["verification"]["run"] > 500
    capsys.readouterr()


def test_verify_pairs_small(tmp_path, capsys):
    out = str(tmp_path / "v.json")
    assert cli.main(["verify", "--suite", "pairs", "--trials", "100",
                     "--seed", "7", "--json", out]) == 0
    report = load_json(out)
    assert report["verification"]["failed"] == 0
    assert report["seed"] == 7
    capsys.readouterr()


def test_verify_cycles_small(capsys):
    assert cli.main(["verify", "--suite", "cycles", "--trials", "60"]) == 0
    capsys.readouterr()


def test_verify_workers_match_sequential(tmp_path, capsys):
    out1, out2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    base = ["verify", "--suite", "pairs", "--trials", "80", "--seed", "3"]
    assert cli.main(base + ["--json", out1]) == 0
    assert cli.main(base + ["--workers", "4", "--json", out2]) == 0
    capsys.readouterr()
    a, b = scrub(load_json(out1)), scrub(load_json(out2))
    a.pop("command"), b.pop("command")  # argv legitimately differs here
    assert a == b


# ----------------------------------------------------------------------- gen

def test_gen_tight2_roundtrip(tmp_path, capsys):
    out = str(tmp_path / "t2.txt")
    assert cli.main(["gen", "--family", "tight2", "-k", "1", out]) == 0
    capsys.readouterr()
    strings = [l for l in open(out).read().splitlines()
               if l and not l.startswith("#")]
    assert [len(s) for s in strings] == [15, 9]
    expected = load_json(out + ".expected.json")
    ov, _ = build_matrices(strings)
    assert [int(ov.w[0, 1]), int(ov.w[1, 0])] == expected["overlaps"]


def test_gen_tight3_roundtrip(tmp_path, capsys):
    out = str(tmp_path / "t3.txt")
    assert cli.main(["gen", "--family", "tight3", "-n", "2", out]) == 0
    capsys.readouterr()
    strings = [l for l in open(out).read().splitlines()
               if l and not l.startswith("#")]
    expected = load_json(out + ".expected.json")
    ov, _ = build_matrices(strings)
    got = [int(ov.w[0, 1]), int(ov.w[1, 2]), int(ov.w[2, 0])]
    assert got == expected["overlaps"] == [28, 20, 17]


def test_gen_greedy_matches_printed_family(tmp_path, capsys):
    out = str(tmp_path / "g.txt")
    assert cli.main(["gen", "--family", "greedy", "-n", "6", out]) == 0
    capsys.readouterr()
    strings = [l for l in open(out).read().splitlines()
               if l and not l.startswith("#")]
    assert strings == ["abbab", "bbaabba", "aabbbaabb", "bbbaaabbbaa"]


def test_gen_random_deterministic_and_solvable(tmp_path, capsys):
    out1, out2 = str(tmp_path / "r1.txt"), str(tmp_path / "r2.txt")
    for out in (out1, out2):
        assert cli.main(["gen", "--family", "random", "-n", "6",
                         "--seed", "3", out]) == 0
    assert open(out1).read().replace("r1", "rX") \
        == open(out2).read().replace("r2", "rX")
    assert cli.main(["solve", out1, "--algo", "combined"]) == 0
    capsys.readouterr()


# ------------------------------------------------------------- determinism

def test_repeated_runs_identical_json(tmp_path, capsys):
    inst = write_instance(tmp_path, ["abab", "babb", "bba", "aab"])
    cases = [
        ["solve", inst, "--algo", "combined"],
        ["solve", inst, "--algo", "greedy"],
        ["compare", inst],
        ["verify", "--suite", "pairs", "--trials", "40", "--seed", "1"],
        ["verify", "--suite", "tight"],
    ]
    for i, argv in enumerate(cases):
        out = str(tmp_path / f"{i}.json")
        assert cli.main(argv + ["--json", out]) == 0
        first = scrub(load_json(out))
        assert cli.main(argv + ["--json", out]) == 0
        assert scrub(load_json(out)) == first, argv
    capsys.readouterr()
