from itertools import combinations

import pytest

from src.errors import InstanceParseError
from src.matroid.families import LaminarMatroid
from src.matroid.io import parse_instance, parse_weights, write_instance, write_weights
from src.matroid.weights import WeightedGroundSet, greedy_max_weight


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestInstanceFiles:
    def test_parse_every_family(self, tmp_path):
        texts = {
            "uniform": "uniform 4 2\n",
            "partition": "partition 3\nblock 1 0 1\nblock 1 2\n",
            "graphic": "# triangle\ngraphic 3\nedge 0 0 1\nedge 1 1 2\nedge 2 0 2\n",
            "laminar": "laminar 4\nset 1 0 1\nset 2 0 1 2 3\n",
            "transversal": "transversal 3\nleft 0 1\nleft 2\n",
        }
        ranks = {"uniform": 2, "partition": 2, "graphic": 2, "laminar": 2, "transversal": 2}
        for family, text in texts.items():
            m = parse_instance(write(tmp_path, f"{family}.txt", text))
            assert m.family == family
            assert m.full_rank() == ranks[family]

    def test_written_instance_parses_back(self, tmp_path, instance):
        _, m, w = instance
        path = str(tmp_path / "instance.txt")
        write_instance(m, path)
        again = parse_instance(path)
        assert again.n == m.n
        assert all(again.rank(s) == m.rank(s) for s in combinations(range(m.n), 3))
        weights_path = str(tmp_path / "weights.txt")
        write_weights(w, weights_path)
        assert dict(parse_weights(weights_path, m.n).items()) == dict(w.items())

    def test_unknown_family_reports_line(self, tmp_path):
        path = write(tmp_path, "bad.txt", "# comment\n\nvector 3\n")
        with pytest.raises(InstanceParseError) as excinfo:
            parse_instance(path)
        assert excinfo.value.line_no == 3

    def test_malformed_record_reports_line(self, tmp_path):
        path = write(tmp_path, "bad.txt", "graphic 3\nedge 0 0 1\nedge 1 x 2\n")
        with pytest.raises(InstanceParseError) as excinfo:
            parse_instance(path)
        assert excinfo.value.line_no == 3

    def test_crossing_laminar_sets_are_a_parse_error(self, tmp_path):
        path = write(tmp_path, "bad.txt", "laminar 3\nset 1 0 1\nset 1 1 2\n")
        with pytest.raises(InstanceParseError):
            parse_instance(path)


class TestWeightFiles:
    def test_empty_weights_file(self, tmp_path):
        path = write(tmp_path, "w.txt", "# nothing here\n")
        with pytest.raises(InstanceParseError, match="no elements"):
            parse_weights(path, 3)

    def test_missing_element(self, tmp_path):
        path = write(tmp_path, "w.txt", "0 1.5\n2 3\n")
        with pytest.raises(InstanceParseError, match="without weight"):
            parse_weights(path, 3)

    def test_non_positive_weight_reports_line(self, tmp_path):
        path = write(tmp_path, "w.txt", "0 1.5\n1 -2\n")
        with pytest.raises(InstanceParseError) as excinfo:
            parse_weights(path, 2)
        assert excinfo.value.line_no == 2


def test_laminar_optimum_matches_exhaustive_search():
    m = LaminarMatroid(8, [[0, 1], [2, 3, 4], [0, 1, 2, 3, 4], [5, 6, 7], [6, 7]], [1, 2, 2, 2, 1])
    w = WeightedGroundSet({0: 9, 1: 8, 2: 7, 3: 6.5, 4: 6, 5: 3, 6: 5, 7: 4})
    best = max(w.total(s) for size in range(m.n + 1) for s in combinations(range(m.n), size)
               if m.is_independent(s))
    assert w.total(greedy_max_weight(m, w)) == pytest.approx(best)
