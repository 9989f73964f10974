import itertools
import random

import numpy as np
import pytest

from bipcontract.derand import build_splitter, colorings, solve_deterministic
from bipcontract.graph import path
from bipcontract.oracle import brute_rank_cut
from bipcontract.rank_cut import RankCutInstance, verify_cut

from test_rank_cut import TWO_PATHS, _c5_instances, random_rank_cut_instance


def all_split(n, s, family):
    """Exhaustively check the splitter property with numpy."""
    sets = np.array(list(itertools.combinations(range(n), s)), dtype=np.int64)
    covered = np.zeros(len(sets), dtype=bool)
    for q in family:
        r = np.sort(sets % q, axis=1)
        covered |= np.all(r[:, 1:] != r[:, :-1], axis=1)
    return bool(covered.all())


def test_trivial_splitters():
    fam = build_splitter(7, 7)
    assert len(fam) == 1 and fam.splits(range(7))
    fam = build_splitter(9, 1)
    assert len(fam) == 1 and all(fam.splits([x]) for x in range(9))
    with pytest.raises(ValueError):
        build_splitter(3, 4)
    with pytest.raises(ValueError):
        build_splitter(3, 0)


def test_splitter_100_3():
    fam = build_splitter(100, 3)
    assert all_split(100, 3, fam)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_splitter_small_domains(s):
    for n in range(s, 41):
        assert all_split(n, s, build_splitter(n, s)), (n, s)


def test_colorings_cover_every_small_black_set():
    fam = build_splitter(6, 6)
    blacks = {b for _, b in colorings(fam, 6, 2)}
    assert blacks == {frozenset(c) for r in range(3) for c in itertools.combinations(range(6), r)}


def test_path_instance():
    inst = RankCutInstance(path(3), 1, {0}, {2})
    out = solve_deterministic(inst)
    assert out.cut in ({0}, {1}) and verify_cut(inst, out.cut)


def test_no_instance():
    inst = RankCutInstance(TWO_PATHS, 1, {0}, {5})
    out = solve_deterministic(inst)
    assert out.cut is None and not out.exhausted


def test_c5_partitions_match_oracle():
    for inst in _c5_instances():
        truth = brute_rank_cut(inst.G, inst.k, inst.X, inst.Y, inst.M)
        out = solve_deterministic(inst)
        assert (out.cut is None) == (truth is None)


def test_exact_on_random_instances():
    rng = random.Random(51)
    for _ in range(120):
        inst = random_rank_cut_instance(rng)
        truth = brute_rank_cut(inst.G, inst.k, inst.X, inst.Y, inst.M)
        out = solve_deterministic(inst)
        assert (out.cut is None) == (truth is None)
        if out.cut is not None:
            assert verify_cut(inst, out.cut)


def test_repeatable():
    rng = random.Random(52)
    for _ in range(20):
        inst = random_rank_cut_instance(rng)
        a, b = solve_deterministic(inst), solve_deterministic(inst)
        assert a.cut == b.cut and a.iterations == b.iterations


def test_pair_cap_marks_incomplete():
    inst = RankCutInstance(TWO_PATHS, 2, {0}, {5})
    out = solve_deterministic(inst, max_pairs=1)
    assert out.cut is None and out.exhausted
