import filecmp

import pytest

from tonelab.cli import main
from tonelab.fileio import read_coloring, read_edge_list, write_edge_list
from tonelab.graph import Graph, cycle_graph, path_graph
from tonelab.coloring import verify


def run(argv) -> int:
    return main([str(a) for a in argv])


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.edges"
    write_edge_list(Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)]), path)
    return path


class TestVerifyCommand:
    def test_valid_exit_0(self, tmp_path, tree_file, capsys):
        col = tmp_path / "c.col"
        assert run(["color-tree", "--graph", tree_file, "--t", 2, "--out", col]) == 0
        assert run(["verify", "--graph", tree_file, "--coloring", col]) == 0
        assert "valid" in capsys.readouterr().out

    def test_violation_exit_1(self, tmp_path, tree_file, capsys):
        col = tmp_path / "c.col"
        col.write_text("2 4 5\n0: 1 2\n1: 1 2\n2: 3 4\n3: 3 4\n4: 1 2\n")
        assert run(["verify", "--graph", tree_file, "--coloring", col]) == 1
        out = capsys.readouterr().out.strip()
        assert out == "0 1 1 2"  # u v dist overlap, lexicographically first

    def test_format_error_exit_2(self, tmp_path, tree_file):
        bad = tmp_path / "bad.col"
        bad.write_text("not a coloring\n")
        assert run(["verify", "--graph", tree_file, "--coloring", bad]) == 2

    def test_missing_graph_exit_2(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            run(["verify", "--graph", tmp_path / "nope", "--coloring", tmp_path / "x"])
        assert info.value.code == 2

    def test_partial_coloring_exit_2(self, tmp_path, tree_file):
        col = tmp_path / "c.col"
        col.write_text("2 4 5\n0: 1 2\n")
        assert run(["verify", "--graph", tree_file, "--coloring", col]) == 2


class TestExactCommand:
    def test_tau_with_witness(self, tmp_path, tree_file, capsys):
        out = tmp_path / "w.col"
        assert run(["exact", "--graph", tree_file, "--t", 2, "--out", out]) == 0
        printed = capsys.readouterr().out
        assert "tau=5" in printed  # star K_{1,3} plus a pendant: kappa(3) = 5
        g = read_edge_list(tree_file)
        assert bool(verify(g, read_coloring(out)))

    def test_colorable_yes_no(self, tmp_path, capsys):
        path = tmp_path / "p3.edges"
        write_edge_list(path_graph(3), path)
        assert run(["exact", "--graph", path, "--t", 2, "--k", 4]) == 0
        assert "colorable=no" in capsys.readouterr().out
        assert run(["exact", "--graph", path, "--t", 2, "--k", 5]) == 0
        assert "colorable=yes" in capsys.readouterr().out


class TestColorTree:
    def test_prints_k_used(self, tree_file, capsys):
        assert run(["color-tree", "--graph", tree_file, "--t", 2]) == 0
        assert "k_used=5" in capsys.readouterr().out

    def test_edgeless_exit_2(self, tmp_path):
        path = tmp_path / "e.edges"
        write_edge_list(Graph(3, []), path)
        assert run(["color-tree", "--graph", path, "--t", 2]) == 2

    def test_fixed_palette_stuck_exit_1(self, tmp_path):
        path = tmp_path / "s.edges"
        write_edge_list(Graph(7, [(0, i) for i in range(1, 7)]), path)
        assert run(["color-tree", "--graph", path, "--t", 2, "--k", 4]) == 1


class TestColorDense:
    def test_writes_coloring_and_report(self, tmp_path, capsys):
        g = tmp_path / "g.edges"
        assert run(["gen", "gnp", "--n", 60, "--p", 0.5, "--seed", 3, "--out", g]) == 0
        col, rep = tmp_path / "c.col", tmp_path / "r.csv"
        rc = run(
            ["color-dense", "--graph", g, "--t", 2, "--seed", 4, "--out", col, "--report", rep]
        )
        assert rc == 0
        graph = read_edge_list(g)
        assert bool(verify(graph, read_coloring(col)))
        lines = rep.read_text().strip().splitlines()
        assert lines[0] == "pass,sets,remainder,greedy_colors"
        assert len(lines) == 3


class TestColorSparse:
    def test_success_exit_0(self, tmp_path):
        g = tmp_path / "g.edges"
        from tonelab.generators import planted_hubs

        write_edge_list(planted_hubs(3, 12, 9), g)
        col = tmp_path / "c.col"
        rc = run(["color-sparse", "--graph", g, "--t", 2, "--b0", 10, "--out", col])
        assert rc == 0
        assert read_coloring(col).k == 8

    def test_structural_failure_exit_4(self, tmp_path):
        g = tmp_path / "c3.edges"
        write_edge_list(cycle_graph(3), g)
        rc = run(["color-sparse", "--graph", g, "--t", 2, "--b0", 2, "--no-escalate"])
        assert rc == 4

    def test_escalated_exit_3(self, tmp_path):
        g = tmp_path / "c3.edges"
        write_edge_list(cycle_graph(3), g)
        rc = run(["color-sparse", "--graph", g, "--t", 2, "--b0", 2])
        assert rc == 3


class TestGen:
    def test_gnp_round_trip(self, tmp_path):
        out = tmp_path / "g.edges"
        assert run(["gen", "gnp", "--n", 30, "--p", 0.2, "--seed", 11, "--out", out]) == 0
        g = read_edge_list(out)
        assert g.n == 30

    def test_tree(self, tmp_path):
        out = tmp_path / "t.edges"
        assert run(["gen", "tree", "--n", 25, "--seed", 0, "--out", out]) == 0
        assert read_edge_list(out).m == 24

    def test_config(self, tmp_path, capsys):
        degs = tmp_path / "d.txt"
        degs.write_text("1\n1\n2\n2\n")
        out = tmp_path / "c.edges"
        assert run(["gen", "config", "--degrees", degs, "--seed", 5, "--out", out]) == 0
        assert "simple=" in capsys.readouterr().out

    def test_config_bad_degrees_exit_2(self, tmp_path):
        degs = tmp_path / "d.txt"
        degs.write_text("1\n1\n1\n")  # odd sum
        assert run(["gen", "config", "--degrees", degs, "--seed", 5, "--out", tmp_path / "o"]) == 2


class TestDeterminism:
    def test_cli_outputs_byte_identical(self, tmp_path):
        for args, outs in [
            (["gen", "gnp", "--n", 40, "--p", 0.3, "--seed", 6], ["g.edges"]),
            (["gen", "tree", "--n", 30, "--seed", 6], ["t.edges"]),
        ]:
            a_dir, b_dir = tmp_path / "a", tmp_path / "b"
            a_dir.mkdir(exist_ok=True)
            b_dir.mkdir(exist_ok=True)
            run(args + ["--out", a_dir / outs[0]])
            run(args + ["--out", b_dir / outs[0]])
            assert filecmp.cmp(a_dir / outs[0], b_dir / outs[0], shallow=False)

    def test_dense_rerun_identical(self, tmp_path):
        g = tmp_path / "g.edges"
        run(["gen", "gnp", "--n", 50, "--p", 0.5, "--seed", 1, "--out", g])
        outs = []
        for name in ("x", "y"):
            col = tmp_path / f"{name}.col"
            rep = tmp_path / f"{name}.csv"
            run(["color-dense", "--graph", g, "--t", 2, "--seed", 7, "--out", col, "--report", rep])
            outs.append((col.read_bytes(), rep.read_bytes()))
        assert outs[0] == outs[1]
