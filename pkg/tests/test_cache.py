import logging
from fractions import Fraction as F

from kapparing import intersection
from kapparing.intersection import PsiMemo, load_cache, psi_integral, save_cache


def test_save_contains_base_line(tmp_path):
    psi_integral(1, [1])
    path = tmp_path / "c.txt"
    n = save_cache(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert "1;1;1/24" in lines
    assert lines == sorted(lines)
    assert n == len(lines)


def test_roundtrip_reproduces_values(tmp_path):
    psi_integral(3, [4, 4])
    path = tmp_path / "c.txt"
    save_cache(path)
    fresh = PsiMemo()
    good, bad = load_cache(path, fresh)
    assert bad == 0 and good == len(fresh) > 0
    for key, value in fresh.items():
        assert intersection.MEMO.get(key) == value


def test_empty_and_missing_files(tmp_path, caplog):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert load_cache(empty, PsiMemo()) == (0, 0)
    with caplog.at_level(logging.WARNING):
        assert load_cache(tmp_path / "nope.txt", PsiMemo()) == (0, 0)
    assert "unreadable" in caplog.text


def test_corrupt_lines_are_skipped(tmp_path, caplog):
    path = tmp_path / "c.txt"
    path.write_text(
        "1;1;1/24\n"
        "garbage\n"
        "2;4;1/0\n"
        "2;3,1;5/7\n"  # unsorted key
        "2;4,4;1/2\n"  # off dimension
        "0;0,0,0;1/1\n",
        encoding="utf-8",
    )
    memo = PsiMemo()
    with caplog.at_level(logging.WARNING):
        good, bad = load_cache(path, memo)
    assert (good, bad) == (2, 4)
    assert "4 malformed" in caplog.text
    assert memo.get((1, (1,))) == F(1, 24)


def test_loaded_cache_does_not_override(tmp_path):
    # a wrong value in the file never beats a value already computed
    psi_integral(2, [4])
    path = tmp_path / "c.txt"
    path.write_text("2;4;7/1\n", encoding="utf-8")
    load_cache(path)
    assert psi_integral(2, [4]) == F(1, 1152)


def test_cold_and_warm_agree(tmp_path):
    exps = [(2, [2, 2, 2, 0]), (3, [3, 3, 2, 1]), (1, [2, 1, 1, 0])]
    warm = [psi_integral(g, e) for g, e in exps]
    path = tmp_path / "c.txt"
    save_cache(path)
    intersection.MEMO.clear()
    cold = [psi_integral(g, e) for g, e in exps]
    intersection.MEMO.clear()
    load_cache(path)
    again = [psi_integral(g, e) for g, e in exps]
    assert warm == cold == again
