import numpy as np
import pytest

from ppbench import PlotSpec, emit_probability_paper, proposed_positions, quantile, reduced


def _spec(n=46, line=(2.0, 0.5), title="demo"):
    z = quantile(reduced("gumbel"), proposed_positions("gumbel", n).p)
    x = 2.0 + 0.5 * z + 0.01 * np.sin(np.arange(n))
    return PlotSpec(title=title, family="gumbel",
                    points=tuple(zip(z.tolist(), x.tolist())), fitted_line=line)


def test_marker_count_matches_points():
    svg = emit_probability_paper(_spec())
    assert svg.count('class="marker"') == 46
    assert svg.count('class="fit"') == 1
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")


def test_repeat_emission_byte_identical():
    a = emit_probability_paper(_spec())
    b = emit_probability_paper(_spec())
    assert a == b


def test_fit_line_toggle():
    spec = _spec(line=None)
    svg = emit_probability_paper(spec)
    assert 'class="fit"' not in svg


def test_points_sorted_regardless_of_input_order():
    pts = ((1.0, 3.0), (-1.0, 1.0), (0.0, 2.0))
    spec = PlotSpec(title="t", family="normal", points=pts)
    assert spec.points == ((-1.0, 1.0), (0.0, 2.0), (1.0, 3.0))


def test_probability_scale_labels_present():
    svg = emit_probability_paper(_spec())
    for label in ("0.01", "0.5", "0.99"):
        assert label in svg


def test_too_few_points_rejected():
    spec = PlotSpec(title="t", family="normal", points=((0.0, 1.0),))
    with pytest.raises(ValueError):
        emit_probability_paper(spec)


def test_bad_prob_ticks_rejected():
    with pytest.raises(ValueError):
        PlotSpec(title="t", family="normal", points=((0.0, 1.0), (1.0, 2.0)),
                 prob_ticks=(0.5, 1.0))


def test_title_escaping():
    svg = emit_probability_paper(_spec(title="a < b & c"))
    assert "a &lt; b &amp; c" in svg
    assert "a < b & c" not in svg


def test_file_output_matches_string(tmp_path):
    out = tmp_path / "chart.svg"
    returned = emit_probability_paper(_spec(), path=str(out))
    assert out.read_text(encoding="utf-8") == returned


def test_coordinates_rounded_for_stability():
    svg = emit_probability_paper(_spec())
    for token in ('cx="', 'cy="'):
        start = 0
        while True:
            idx = svg.find(token, start)
            if idx < 0:
                break
            val = svg[idx + len(token):svg.index('"', idx + len(token))]
            assert len(val.split(".")[-1]) <= 2, val
            start = idx + 1
