import math

import numpy as np
import pytest

import oracles
from seplrc.brute import brute_weight_hierarchy, min_weight_codeword
from seplrc.curve import make_curve
from seplrc.errors import (
    Ambiguous,
    FibreNotSplit,
    InconsistentSymbols,
    LengthMismatch,
    NoSplitFibres,
    UncertifiedGonality,
)
from seplrc.funcspace import completion, make_vspec
from seplrc.galois import make_field
from seplrc.linalg import solve_left
from seplrc.lrc_code import (
    GonalityPolicy,
    build_code,
    encode,
    erasure_decode,
    fibre_bounds_semigroup_form,
    fibre_product_witness,
    fibre_vanishing_bounds,
    format_generator_matrix,
    ghw_bounds,
    params,
    rank_indices,
    support_size,
)

F13 = make_field(13)


def test_encode_examples(codes):
    code = codes("cubic-k2").code
    assert encode(code, [0, 0]).tolist() == [0] * 9
    assert encode(code, [1, 0]).tolist() == [1] * 9
    assert encode(code, [1, 2])[:3].tolist() == [3, 7, 6]
    with pytest.raises(LengthMismatch):
        encode(code, [1, 2, 3])
    with pytest.raises(ValueError):
        encode(code, [13, 0])


def test_encode_is_linear(codes):
    code = codes("hermitian-c").code
    F = code.field
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, 16, size=(2, code.dim_V))
    c = int(rng.integers(1, 16))
    lhs = encode(code, F.vadd(a, F.vmul(c, b)))
    rhs = F.vadd(encode(code, a), F.vmul(c, encode(code, b)))
    assert lhs.tolist() == rhs.tolist()


def test_layout_of_columns(codes):
    code = codes("kondo-50").code
    assert code.n == 14 * 9
    for pos, (fid, idx) in enumerate(code.recovery_map):
        assert pos == fid * code.fibre_size + idx
        assert code.points[pos] == code.fibres[fid].points[idx]
    bases = [f.base for f in code.fibres]
    assert bases == sorted(bases)


def test_generator_rows_are_monomial_evaluations(codes):
    code = codes("elliptic-m8").code
    O = oracles.OracleField(13, 1, code.field.modulus)
    for row, (i, j) in zip(code.G.tolist(), code.basis):
        assert row == [O.mul(O.pow(P.x, i), O.pow(P.y, j)) for P in code.points]


def test_fibre_selection_errors():
    cubic = make_curve(F13, [0, 1], [0, 0, 0, 1])
    V = make_vspec(cubic, "y", [1, 1], [0, 0])
    with pytest.raises(FibreNotSplit):
        build_code(cubic, V, [1, 0])
    with pytest.raises(FibreNotSplit):
        build_code(cubic, V, [2])  # no points over y = 2
    with pytest.raises(NoSplitFibres):
        build_code(cubic, V, [])
    assert build_code(cubic, V, [12, 1, 8]).n == 9
    assert build_code(cubic, V).n == 12
    F2 = make_field(2)
    empty = make_curve(F2, [0, 1, 1], [1, 1, 0, 1])
    with pytest.raises(NoSplitFibres):
        build_code(empty, make_vspec(empty, "y", [1, 1], [0, 0]))


def test_kernel_and_dimension(codes):
    code = codes("hermitian-d").code
    F = code.field
    assert code.kernel.shape == (1, 48)
    for vec in code.kernel:
        assert not F.vdot(vec.tolist(), code.G).any()
    assert codes("hermitian-c").code.kernel.shape == (0, 42)


def test_fibre_product_witness(codes):
    for name in ("kondo-50", "quotient-y50", "elliptic-m8", "hermitian-c"):
        code = codes(name).code
        w = fibre_product_witness(code)
        ell0 = code.vspec.ells[0]
        assert np.count_nonzero(w) == code.n - ell0 * code.fibre_size
        assert solve_left(code.field, code.G, w) is not None


def test_params_hermitian_d_is_abundant(codes):
    b = codes("hermitian-d")
    p = params(b.code, b.policy)
    assert p.abundant_by_ell0 and p.d_upper_fibre_product is None
    assert p.d_upper == p.d_upper_singleton_like == 3
    assert p.abundance_within_w is True
    assert p.d_lower <= p.d_upper


def test_params_closed_form_cross_check(codes):
    for name, expected in (("kondo-50", 3), ("quotient-y50", 6)):
        b = codes(name)
        p = params(b.code, b.policy)
        assert p.defect_closed_form == expected
        assert p.closed_form_consistent
    p = params(codes("hermitian-c").code)
    assert p.defect_closed_form is None


def test_closed_form_branches():
    ell = make_curve(F13, [0, 0, 1], [2, 0, 0, 1], assert_semigroup=True)
    code = build_code(ell, completion(3, ell, "y"))
    p = params(code)
    assert p.closed_form_branch == "below-edge"
    assert p.defect_upper <= p.defect_closed_form
    p8 = params(build_code(ell, completion(8, ell, "y")))
    assert p8.closed_form_branch == "above-edge"


def test_params_json_round_trip(codes):
    import json

    b = codes("kondo-50")
    data = params(b.code, b.policy).to_dict()
    assert json.loads(json.dumps(data)) == data
    assert "goppa" in data["labels"]["d_lower"]


def test_gonality_policy_rungs():
    F16 = make_field(2, 4)
    her = make_curve(F16, [0, 0, 0, 0, 0, 1], [0, 1, 0, 0, 1])
    pol = GonalityPolicy()
    assert pol.resolve(her, 1).rung == "trivial"
    g2 = pol.resolve(her, 2)
    assert (g2.value, g2.rung) == (1, "floor")
    assert GonalityPolicy({2: 4}).resolve(her, 2).value == 4
    g11 = pol.resolve(her, 11)
    assert (g11.value, g11.rung, g11.certified) == (16, "riemann-roch", True)
    with pytest.raises(UncertifiedGonality):
        GonalityPolicy(strict=True).resolve(her, 2)
    ell = make_curve(F13, [0, 0, 1], [2, 0, 0, 1])
    g = pol.resolve(ell, 3)
    assert (g.value, g.rung, g.certified) == (3, "hyperelliptic-semigroup", False)
    with pytest.raises(UncertifiedGonality):
        GonalityPolicy(strict=True).resolve(ell, 3)


def test_gamma_values_never_exceed_semigroup():
    F64 = make_field(2, 6)
    for C in (make_curve(F64, [0, 1, 1], [0] * 9 + [1]),
              make_curve(F64, [0, 0, 0, 1], [0, 1] + [0] * 6 + [1])):
        for t in range(1, 40):
            g = GonalityPolicy().resolve(C, t)
            assert t - 1 <= g.value <= C.semigroup.element_at(t)


def test_ghw_rows_elliptic(codes):
    b = codes("elliptic-m8")
    t = ghw_bounds(b.code, policy=b.policy)
    assert t.fibre == [None, 12, None, 15, None, None]
    assert t.lower == [10, 12, 13, 14, 15, 18]
    assert t.upper == [11, 12, 14, 15, 17, 18]
    assert ghw_bounds(b.code, 3, b.policy).t == [1, 2, 3]


def test_fibre_bounds_kondo(codes):
    code = codes("kondo-50").code
    assert (5, 3, 81) in fibre_vanishing_bounds(code)
    assert (4, 11, 90) in fibre_vanishing_bounds(code)
    assert support_size(code) == code.n


def test_semigroup_form_fibre_bound_is_not_safe_for_small_spaces(codes):
    # V_8 is strictly smaller than L(8Q): the subcode size iota(m - mu*b) - w
    # overcounts and the bound fails against the exact hierarchy.
    code = codes("elliptic-m8").code
    exact = brute_weight_hierarchy(code)
    semigroup_form = fibre_bounds_semigroup_form(code)
    assert (1, 5, 15) in semigroup_form
    assert exact[4] == 17 > 15
    for _, t, bound in fibre_vanishing_bounds(code):
        assert exact[t - 1] <= bound


def test_both_fibre_forms_hold_on_riemann_spaces():
    ell = make_curve(F13, [0, 0, 1], [2, 0, 0, 1], assert_semigroup=True)
    for m in (2, 3):  # beyond m = 3 the locality cap drops x^2 and V < L(mQ)
        code = build_code(ell, completion(m, ell, "y"))
        assert code.dim_V == ell.semigroup.iota(m)
        exact = brute_weight_hierarchy(code)
        for _, t, bound in fibre_vanishing_bounds(code) + fibre_bounds_semigroup_form(code):
            assert exact[t - 1] <= bound


def test_rank_indices_mds_code(codes):
    code = codes("cubic-k2").code
    info = rank_indices(code.n, code.k, code.r, exact=brute_weight_hierarchy(code))
    assert info.mds_rank == 1


def test_rank_indices_from_bounds(codes):
    b = codes("kondo-50")
    info = rank_indices(b.code.n, b.code.k, b.code.r, table=ghw_bounds(b.code, policy=b.policy))
    assert info.mds_rank is None
    assert info.mds_rank_range[0] >= b.code.k - b.code.r + 1
    with pytest.raises(ValueError):
        rank_indices(10, 3, 2)


def test_erasure_decode(codes):
    code = codes("elliptic-m8").code
    rng = np.random.default_rng(5)
    word = encode(code, rng.integers(0, 13, code.dim_V)).tolist()
    assert erasure_decode(code, word).tolist() == word
    for _ in range(50):
        erased = rng.choice(code.n, size=9, replace=False)  # d - 1 = 9
        w = [None if i in erased else v for i, v in enumerate(word)]
        assert erasure_decode(code, w).tolist() == word
    with pytest.raises(LengthMismatch):
        erasure_decode(code, word[:-1])


def test_erasure_decode_ambiguous(codes):
    code = codes("elliptic-m8").code
    low = min_weight_codeword(code.field, code.generator_basis())
    support = set(np.flatnonzero(low).tolist())
    word = encode(code, [1, 2, 3, 4, 5, 6]).tolist()
    w = [None if i in support else v for i, v in enumerate(word)]
    with pytest.raises(Ambiguous) as info:
        erasure_decode(code, w)
    cert = np.asarray(info.value.certificate)
    assert cert.any()
    assert set(np.flatnonzero(cert).tolist()) <= support
    assert solve_left(code.field, code.G, cert) is not None


def test_erasure_decode_inconsistent(codes):
    code = codes("elliptic-m8").code
    word = encode(code, [1, 2, 3, 4, 5, 6]).tolist()
    word[0] = (word[0] + 1) % 13
    word[1] = None
    with pytest.raises(InconsistentSymbols):
        erasure_decode(code, word)


def test_generator_matrix_export(codes):
    code = codes("hermitian-d").code
    lines = format_generator_matrix(code).splitlines()
    assert lines[0] == "# q=16 n=64 rows=48 k=47"
    assert len(lines) == 49
    assert [int(v) for v in lines[2].split()] == code.G[1].tolist()


def test_singleton_defect_is_nonnegative_from_lower_bound(codes):
    for name in ("kondo-50", "quotient-y50", "quotient-x50", "hermitian-c", "hermitian-d"):
        b = codes(name)
        p = params(b.code, b.policy)
        assert p.defect_upper >= 0
        assert p.d_lower <= p.d_upper
        assert p.defect_upper == p.n + 2 - p.k - p.d_lower - math.ceil(p.k / p.r)
