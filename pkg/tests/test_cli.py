import json

import pytest

from isonorm import cli, polytope

from _helpers import FIXTURES, GOLDEN_BALLS


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return str(FIXTURES / name)


class TestValidate:
    def test_census_map_is_valid(self, capsys):
        code, out, _ = run(capsys, "validate", fx("census1.map"))
        assert code == 0
        assert "valid" in out
        assert "genus=2" in out
        assert "F=1" in out

    def test_invalid_map_exits_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.map"
        bad.write_text("map V=2\nv0: 0 1 2 3\nv1: 4 5 6 7\n"
                       "e: 0 2\ne: 1 3\ne: 4 6\ne: 5 7\n")
        code, out, _ = run(capsys, "validate", str(bad))
        assert code == 1
        assert "invalid" in out

    def test_unparseable_map_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.map"
        bad.write_text("not a map\n")
        code, _, err = run(capsys, "validate", str(bad))
        assert code == 2
        assert "error:" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(capsys, "validate", "/nonexistent.map")
        assert code == 2


class TestFaces:
    def test_one_faced(self, capsys):
        code, out, _ = run(capsys, "faces", fx("census3.map"))
        assert code == 0
        assert out.startswith("F=1\n")
        assert out.count("f0:") == 1


class TestDualBall:
    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_matches_ball_fixtures(self, capsys, i):
        code, out, _ = run(capsys, "dualball", fx("census%d.map" % i),
                           "--walks", fx("census%d.walks" % i))
        assert code == 0
        got = polytope.parse_polytope(out)
        want = polytope.parse_polytope(
            (FIXTURES / ("census%d.ball" % i)).read_text())
        assert got == want

    def test_two_curve_class_vectors(self, capsys):
        code, out, _ = run(capsys, "dualball", fx("census2.map"),
                           "--walks", fx("census2.walks"), "--classes")
        assert code == 0
        classes = {tuple(int(x) for x in line.split())
                   for line in out.splitlines()}
        assert classes == GOLDEN_BALLS[1]

    def test_off_format(self, capsys):
        code, out, _ = run(capsys, "dualball", fx("census4.map"),
                           "--walks", fx("census4.walks"),
                           "--format", "off")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "nOFF"
        assert lines[1] == "4"
        assert lines[2] == "10 0 0"
        assert len(lines) == 13

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "--json", "dualball", fx("census2.map"),
                           "--walks", fx("census2.walks"))
        assert code == 0
        doc = json.loads(out)
        assert {tuple(v) for v in doc["vertices"]} == GOLDEN_BALLS[1]

    def test_deterministic(self, capsys):
        outs = {run(capsys, "dualball", fx("census1.map"))[1]
                for _ in range(2)}
        assert len(outs) == 1

    def test_bad_walk_token_exits_two(self, capsys, tmp_path):
        walks = tmp_path / "w.walks"
        walks.write_text("e0+ x3-\n")
        code, _, err = run(capsys, "dualball", fx("census1.map"),
                           "--walks", str(walks))
        assert code == 2
        assert "bad step" in err

    def test_walk_edge_out_of_range_exits_two(self, capsys, tmp_path):
        walks = tmp_path / "w.walks"
        walks.write_text("e99+\n")
        code, _, _ = run(capsys, "dualball", fx("census1.map"),
                         "--walks", str(walks))
        assert code == 2


class TestNorm:
    def test_basis_vector_norms_are_one(self, capsys):
        for coord in (["1", "0", "0", "0"], ["0", "0", "0", "1"]):
            code, out, _ = run(capsys, "norm", fx("census2.map"),
                               "--walks", fx("census2.walks"), *coord)
            assert code == 0
            assert out == "1\n"

    def test_wrong_arity_exits_one(self, capsys):
        code, _, err = run(capsys, "norm", fx("census2.map"), "1", "0")
        assert code == 1
        assert "coordinates" in err


class TestSmoothReduceParity:
    def test_smooth_prints_two_children(self, capsys):
        code, out, _ = run(capsys, "smooth", fx("census1.map"), "0")
        assert code == 0
        assert "child 0" in out and "child 1" in out

    def test_smooth_bad_vertex_exits_one(self, capsys):
        code, _, _ = run(capsys, "smooth", fx("census1.map"), "7")
        assert code == 1

    def test_reduce_one_faced_is_noop(self, capsys):
        code, out, _ = run(capsys, "reduce", fx("census4.map"))
        assert code == 0
        assert out.startswith("trace: \n")
        assert "map V=3" in out

    def test_parity_is_odd(self, capsys):
        code, out, _ = run(capsys, "parity", fx("census3.map"),
                           "--walks", fx("census3.walks"))
        assert code == 0
        assert out == "odd\n"


class TestRealizeTorus:
    def test_square_polygon(self, capsys, tmp_path):
        poly = tmp_path / "square.poly"
        poly.write_text("1 1\n1 -1\n-1 1\n-1 -1\n")
        code, out, _ = run(capsys, "realize-torus", str(poly), "--emit-map")
        assert code == 0
        assert "(0,1) x 1" in out and "(1,0) x 1" in out
        assert "map V=1" in out

    def test_segment_has_no_map(self, capsys, tmp_path):
        poly = tmp_path / "seg.poly"
        poly.write_text("3 0\n-3 0\n")
        code, out, _ = run(capsys, "realize-torus", str(poly), "--emit-map")
        assert code == 0
        assert "(0,1) x 3" in out
        assert "no map" in out

    def test_unrealizable_polygon_exits_one(self, capsys, tmp_path):
        poly = tmp_path / "odd.poly"
        poly.write_text("1 0\n0 1\n-1 0\n0 -1\n")
        code, _, err = run(capsys, "realize-torus", str(poly))
        assert code == 1

    def test_wrong_dimension_exits_one(self, capsys):
        code, _, _ = run(capsys, "realize-torus", fx("intro.poly"))
        assert code == 1


class TestCensusCommands:
    def test_census_lists_four_classes(self, capsys):
        code, out, _ = run(capsys, "census")
        assert code == 0
        assert out.startswith("classes: 4\n")
        assert out.count("word:") == 4

    def test_exhaustive_maps(self, capsys):
        code, out, _ = run(capsys, "census", "--exhaustive-maps")
        assert code == 0
        assert out.startswith("classes: 6\n")

    def test_small_twist_bound_exits_one(self, capsys):
        code, _, _ = run(capsys, "census", "--twist-bound", "1")
        assert code == 1

    def test_verify_theorem_passes(self, capsys):
        code, out, _ = run(capsys, "verify-theorem")
        assert code == 0
        assert out.rstrip().endswith("PASS")
        assert "intro polytope is_p8=true" in out


class TestCheckP8:
    def test_intro_polytope_is_member(self, capsys):
        code, out, _ = run(capsys, "check-p8", fx("intro.poly"))
        assert code == 0
        assert out == "member of P8\n"

    def test_ten_vertex_ball_is_not(self, capsys):
        code, out, _ = run(capsys, "check-p8", fx("census2.ball"))
        assert code == 0
        assert out == "not a member of P8\n"

    def test_wrong_dimension_exits_one(self, capsys, tmp_path):
        poly = tmp_path / "flat.poly"
        poly.write_text("1 1\n-1 -1\n")
        code, _, _ = run(capsys, "check-p8", str(poly))
        assert code == 1
