import numpy as np
import pytest

from gencheeger import InputError, demand_graph, generate
from gencheeger.fileio import format_graph, format_vector, parse_graph, parse_vector


def test_format_path():
    assert format_graph(generate("path", 3)) == "p 3 2\ne 0 1 1\ne 1 2 1\n"


def test_comments_and_blank_lines():
    g = parse_graph("# hello\n\np 3 1\n# mid\ne 0 2 1.5\n")
    assert g.edges == [(0, 2, 1.5)]


@pytest.mark.parametrize("seed", range(10))
def test_round_trip_byte_identical(seed):
    g = generate("gnp", 9, 0.5, seed=seed)
    for h in (g, demand_graph(g)):
        text = format_graph(h)
        assert parse_graph(text) == h
        assert format_graph(parse_graph(text)) == text


@pytest.mark.parametrize(
    "text",
    [
        "e 0 1 1\n",
        "p 3 2\ne 0 1 1\n",
        "p 3 1\ne 0 1 1\ne 1 2 1\n",
        "p 3 2\ne 0 1 1\ne 0 1 2\n",
        "p 3 1\ne 1 1 1\n",
        "p 3 1\ne 0 3 1\n",
        "p 3 1\ne 0 1 0\n",
        "p 3 1\ne 0 1 -2\n",
        "p 3 1\ne 2 1 1\n",
        "p 3 1\ne 0 1 x\n",
        "",
    ],
)
def test_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_vector_round_trip():
    x = np.array([1.0, -0.1, 1 / 3, 2.5e-300])
    text = format_vector(x)
    assert text.splitlines()[0] == "1"
    assert np.array_equal(parse_vector(text, 4), x)
    assert format_vector(parse_vector(text)) == text
    with pytest.raises(InputError):
        parse_vector(text, 3)
    with pytest.raises(InputError):
        parse_vector("1\nnan\n")
