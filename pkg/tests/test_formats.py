import json

import pytest

from dimerglide import CORPUS, GlideLoop, HypergraphError, dimer_complex, load_corpus
from dimerglide.formats import (corpus_text, covering_ref, glide_ref, load_corpus_json,
                                loop_to_dict, parse_halves, parse_loop, parse_profile,
                                parse_states, parse_vhalves)


@pytest.fixture(scope="module")
def ladder():
    h = load_corpus("ladder")
    return h, dimer_complex(h).system


def test_corpus_listing_is_complete():
    for name in CORPUS:
        assert json.loads(corpus_text(name))["vertices"]
    with pytest.raises(FileNotFoundError):
        corpus_text("nope")


def test_loop_round_trip(ladder):
    h, sys_ = ladder
    loop = parse_loop(sys_, load_corpus_json("ladder_loop"))
    again = parse_loop(sys_, json.dumps(loop_to_dict(sys_, loop)))
    assert again == loop
    by_id = parse_loop(sys_, {"base": ["ad", "be", "cf"], "steps": list(loop.steps)})
    assert by_id == loop


def test_refs(ladder):
    h, sys_ = ladder
    assert covering_ref(h, "ad,be,cf") == covering_ref(h, ["cf", "be", "ad"])
    with pytest.raises(HypergraphError):
        glide_ref(sys_, h, 99)
    with pytest.raises(HypergraphError):
        glide_ref(sys_, h, ["ad", "be"])


def test_vhalves_and_halves(ladder):
    h, sys_ = ladder
    vo = parse_vhalves(sys_, load_corpus_json("ladder_vhalves"))
    assert len(vo.vhalves) == 3
    with pytest.raises(HypergraphError):
        parse_vhalves(sys_, {"vhalves": [{"cycle": 0, "vhalf": ["a", "b"]}]})
    o = parse_halves(sys_, {"halves": [{"cycle": ["ad", "ab", "be", "de"], "half": ["ab", "de"]}]})
    assert h.edge_names(o.halves[0]) == ["ab", "de"]
    with pytest.raises(HypergraphError):
        parse_halves(sys_, {"halves": [{"cycle": 0, "half": ["ab"]}]})
    assert parse_halves(sys_, "{}").halves[1] == sys_.even[1].halves[0]


def test_profiles(ladder):
    h, _ = ladder
    assert parse_profile(h, "ad:1,bc:2") == {"ad": 1, "bc": 2}
    assert parse_profile(h, '{"ad": 3}') == {"ad": 3}
    assert parse_profile(h, {"ad": 0}) == {"ad": 0}
    for bad in ("zz:1", "ad:x", "ad:-1"):
        with pytest.raises(HypergraphError):
            parse_profile(h, bad)


def test_state_files():
    doc = {"edges": list("abcdefgh"), "glides": [list("abcd"), list("efgh")],
           "states": [[], list("abcd"), list("efgh")]}
    sys_, states, edges = parse_states(json.dumps(doc))
    assert len(sys_) == 2 and sys_.is_independent(0, 1) and len(states) == 3
    doc["independent"] = []
    sys_, _, _ = parse_states(doc)
    assert not sys_.is_independent(0, 1)
    with pytest.raises(HypergraphError):
        parse_states({**doc, "states": [["z"]]})
    with pytest.raises(HypergraphError):
        parse_states({**doc, "edges": ["a", "a"]})
    with pytest.raises(HypergraphError):
        parse_states({**doc, "glides": [["a"], ["a", "b"]], "independent": [[0, 1]]})


def test_loop_states(ladder):
    h, sys_ = ladder
    loop = parse_loop(sys_, load_corpus_json("ladder_loop"))
    assert isinstance(loop, GlideLoop)
    assert loop.states(sys_)[0] == loop.states(sys_)[-1]
