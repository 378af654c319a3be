import numpy as np
import pytest

import oracles
from seplrc.errors import DuplicateAbscissa, LengthMismatch, MissingSymbols
from seplrc.lrc_code import LrcCode, encode
from seplrc.repair import (
    RepairRequest,
    applicability,
    fibre_of,
    recover_lagrange,
    recover_one_addition,
    recovery_set,
    repair,
)


def erase(word, *positions):
    w = list(word)
    for p in positions:
        w[p] = None
    return w


def test_recovery_set_is_r_smallest_abscissae(codes):
    code = codes("cubic-k2").code
    pos = next(p for p in range(3) if code.abscissa(p) == 9)
    R = recovery_set(code, pos)
    assert sorted(code.abscissa(p) for p in R) == [1, 3]
    for p in range(code.n):
        R = recovery_set(code, p)
        assert len(R) == code.r and p not in R
        assert set(R) <= set(fibre_of(code, p))


def test_lagrange_example(codes):
    code = codes("cubic-k2").code
    word = encode(code, [1, 2]).tolist()
    pos = next(p for p in range(3) if code.abscissa(p) == 9)
    res = recover_lagrange(RepairRequest(code, erase(word, pos), pos))
    assert res.value == 6 == (1 + 2 * 9) % 13
    assert res.method == "lagrange" and res.symbols_read == 2


def test_constant_codeword(codes):
    code = codes("elliptic-m8").code
    word = encode(code, [5] + [0] * (code.dim_V - 1)).tolist()
    for p in range(code.n):
        assert recover_lagrange(RepairRequest(code, erase(word, p), p)).value == 5


def test_locality_certificate(codes):
    # the erased column lies in the span of its recovery set's columns
    for name in ("cubic-k4", "elliptic-m8", "elliptic-m15"):
        code = codes(name).code
        O = oracles.OracleField(code.field.p, code.field.m, code.field.modulus)
        cols = code.G.T.tolist()
        for p in range(code.n):
            R = recovery_set(code, p)
            base = oracles.rank(O, [cols[i] for i in R])
            assert oracles.rank(O, [cols[i] for i in R] + [cols[p]]) == base


def test_missing_symbols(codes):
    code = codes("elliptic-m8").code
    word = encode(code, [1] * code.dim_V).tolist()
    R = recovery_set(code, 0)
    with pytest.raises(MissingSymbols):
        recover_lagrange(RepairRequest(code, erase(word, 0, R[0]), 0))
    her = codes("hermitian-c").code
    hw = encode(her, [1] * her.dim_V).tolist()
    with pytest.raises(MissingSymbols):
        recover_one_addition(RepairRequest(her, erase(hw, 0, 1), 0))


def test_request_validation(codes):
    code = codes("cubic-k2").code
    with pytest.raises(LengthMismatch):
        RepairRequest(code, [0] * 8, 0)
    with pytest.raises(IndexError):
        RepairRequest(code, [0] * 9, 9)


def test_duplicate_abscissa(codes, monkeypatch):
    code = codes("cubic-k2").code
    word = encode(code, [1, 2]).tolist()
    monkeypatch.setattr(LrcCode, "abscissa", lambda self, pos: 4)
    with pytest.raises(DuplicateAbscissa):
        recover_lagrange(RepairRequest(code, erase(word, 0), 0))


def test_applicability(codes):
    assert applicability(codes("hermitian-c").code)
    assert applicability(codes("quotient-y50").code)
    # epsilon_0 = 1 on Kondo puts the constant in V and breaks the zero sum
    assert not applicability(codes("kondo-50").code)
    assert not applicability(codes("elliptic-m8").code).ok


def test_one_addition_grid_on_hermitian(codes):
    code = codes("hermitian-c").code
    msgs = np.zeros((256, code.dim_V), dtype=np.int64)
    msgs[:, 0] = np.arange(256) % 16
    msgs[:, -1] = np.arange(256) // 16
    for word in encode(code, msgs).tolist():
        for p in range(0, code.n, 7):
            res = repair(RepairRequest(code, erase(word, p), p), cross_check=True)
            assert res.value == word[p]
            assert len(res.read_positions) == code.fibre_size - 1
