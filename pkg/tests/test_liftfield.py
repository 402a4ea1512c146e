import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ruledkit.errors import DomainError, ParseError
from ruledkit.liftfield import (Bin, Call, Const, Neg, Var, ZERO_FIELD, affine,
                                parse_expression, parse_field, to_source)


def fd_partials(field, u, v, h=1e-6):
    def val(uu, vv):
        s = field.sample(uu, vv)
        return s.ub, s.vb
    ub_u = (val(u + h, v)[0] - val(u - h, v)[0]) / (2 * h)
    ub_v = (val(u, v + h)[0] - val(u, v - h)[0]) / (2 * h)
    vb_u = (val(u + h, v)[1] - val(u - h, v)[1]) / (2 * h)
    vb_v = (val(u, v + h)[1] - val(u, v - h)[1]) / (2 * h)
    return ub_u, ub_v, vb_u, vb_v


class TestParser:
    def test_example_field_is_affine(self):
        parsed = parse_field("u - v, u + v")
        reference = affine(1, -1, 0, 1, 1, 0)
        rng = random.Random(1)
        for _ in range(100):
            u, v = rng.uniform(-3, 3), rng.uniform(-3, 3)
            a, b = parsed.sample(u, v), reference.sample(u, v)
            assert a == pytest.approx(b, abs=1e-12)

    def test_valid_expression(self):
        field = parse_field("sin(u)*v, 0")
        assert isinstance(field.ub_expr, Bin)
        s = field.sample(0.5, 2.0)
        assert s.ub == pytest.approx(math.sin(0.5) * 2.0)
        assert s.vb == 0.0

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_field("u + * v, 0")
        assert err.value.position == 4

    def test_missing_comma(self):
        with pytest.raises(ParseError):
            parse_field("u + v")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_field("u, v v")

    def test_unknown_name(self):
        with pytest.raises(ParseError) as err:
            parse_field("u, 2*w")
        assert "unknown name" in str(err.value)

    def test_unbalanced_parens(self):
        with pytest.raises(ParseError):
            parse_field("sin(u, v")

    def test_pi_literal(self):
        field = parse_field("pi*u, pi/2")
        s = field.sample(2.0, 0.0)
        assert s.ub == pytest.approx(2 * math.pi)
        assert s.vb == pytest.approx(math.pi / 2)

    def test_precedence_and_unary_minus(self):
        field = parse_field("-u^2, 1 - 2*v")
        s = field.sample(3.0, 0.5)
        assert s.ub == -9.0  # -(u^2), not (-u)^2
        assert s.vb == 0.0

    def test_power_right_associative(self):
        node = parse_expression("2^3^2")
        # 2^(3^2) = 512; the nested exponent goes through exp/log
        from ruledkit.liftfield import _eval, _JetOps, _Jet2
        out = _eval(node, _Jet2(0.0), _Jet2(0.0), _JetOps)
        assert out.val == pytest.approx(512.0, rel=1e-12)


# hypothesis strategy over well-formed ASTs
leaf = st.one_of(
    st.builds(Const, st.floats(min_value=-4, max_value=4, allow_nan=False)
              .map(lambda x: abs(round(x, 3)))),  # literals are unsigned tokens
    st.builds(Var, st.sampled_from(["u", "v"])),
)


def extend(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(Call, st.sampled_from(["sin", "cos", "exp"]), children),
        st.builds(Bin, st.sampled_from(["+", "-", "*"]), children, children),
        st.builds(lambda l, r: Bin("/", l, r), children, children),
        st.builds(lambda b, n: Bin("^", b, Const(float(n))), children,
                  st.integers(min_value=0, max_value=3)),
    )


ast_nodes = st.recursive(leaf, extend, max_leaves=12)


class TestRoundTrip:
    @given(ast_nodes, ast_nodes)
    @settings(max_examples=300)
    def test_print_parse_identity(self, a, b):
        source = f"{to_source(a)}, {to_source(b)}"
        again = parse_field(source)
        assert again.ub_expr == a
        assert again.vb_expr == b

    def test_field_source_property(self):
        field = parse_field("sin(u) * (v - 1), exp(-v)^2")
        again = parse_field(field.source)
        assert again.ub_expr == field.ub_expr
        assert again.vb_expr == field.vb_expr


class TestEvaluation:
    def test_affine_partials_exact(self):
        field = parse_field("u - v, u + v")
        s = field.sample(0.37, 1.41)
        assert (s.ub_u, s.ub_v, s.vb_u, s.vb_v) == (1.0, -1.0, 1.0, 1.0)

    def test_example_field_along_diagonal(self):
        # along u = v = t the first component vanishes, the second is 2t
        field = parse_field("u - v, u + v")
        for t in (0.0, 0.3, 1.2):
            s = field.sample(t, t)
            assert s.ub == 0.0
            assert s.vb == pytest.approx(2 * t, abs=1e-15)

    def test_sin_partial(self):
        field = parse_field("sin(u)*v, 0")
        s = field.sample(0.0, 2.0)
        assert s.ub_u == pytest.approx(2.0, abs=1e-12)
        ub_u_fd = fd_partials(field, 0.0, 2.0)[0]
        assert s.ub_u == pytest.approx(ub_u_fd, abs=1e-6)

    def test_partials_match_finite_differences(self):
        sources = [
            "sin(u)*cos(v), exp(u/4) - v^2",
            "u*v + cos(u - v), sin(v)^3",
            "(u + 1)/(v + 3), u^2*v",
        ]
        rng = random.Random(8)
        for source in sources:
            field = parse_field(source)
            for _ in range(25):
                u, v = rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)
                s = field.sample(u, v)
                fd = fd_partials(field, u, v)
                assert (s.ub_u, s.ub_v, s.vb_u, s.vb_v) == pytest.approx(fd, abs=2e-6)

    def test_polynomial_partials_exact(self):
        # ub = u^2 v + v^3: ub_u = 2uv, ub_v = u^2 + 3v^2,
        # ub_uu = 2v, ub_uv = 2u, ub_vv = 6v
        field = parse_field("u^2*v + v^3, 0")
        u, v = 1.3, -0.7
        jet = field.jet(u, v)
        assert jet.ub_u == pytest.approx(2 * u * v, abs=1e-12)
        assert jet.ub_v == pytest.approx(u * u + 3 * v * v, abs=1e-12)
        assert jet.ub_uu == pytest.approx(2 * v, abs=1e-12)
        assert jet.ub_uv == pytest.approx(2 * u, abs=1e-12)
        assert jet.ub_vv == pytest.approx(6 * v, abs=1e-12)

    def test_jet_first_partials_match_dual_passes(self):
        field = parse_field("sin(u*v) - exp(v/3), cos(u)^2 + v")
        rng = random.Random(21)
        for _ in range(50):
            u, v = rng.uniform(-2, 2), rng.uniform(-2, 2)
            s = field.sample(u, v)
            jet = field.jet(u, v)
            assert (jet.ub, jet.vb) == pytest.approx((s.ub, s.vb), abs=1e-15)
            assert (jet.ub_u, jet.ub_v, jet.vb_u, jet.vb_v) == pytest.approx(
                (s.ub_u, s.ub_v, s.vb_u, s.vb_v), abs=1e-13)

    def test_jet_second_partials_match_finite_differences(self):
        field = parse_field("sin(u)*cos(v), exp(u/5)*v")
        h = 1e-4
        for u, v in [(0.4, 1.0), (-1.2, 0.3), (2.0, 2.5)]:
            jet = field.jet(u, v)
            ub_uu = (field.sample(u + h, v).ub - 2 * field.sample(u, v).ub
                     + field.sample(u - h, v).ub) / h ** 2
            ub_uv = (field.sample(u + h, v + h).ub - field.sample(u + h, v - h).ub
                     - field.sample(u - h, v + h).ub + field.sample(u - h, v - h).ub
                     ) / (4 * h ** 2)
            assert jet.ub_uu == pytest.approx(ub_uu, abs=1e-5)
            assert jet.ub_uv == pytest.approx(ub_uv, abs=1e-5)

    def test_evaluation_is_pure(self):
        field = parse_field("sin(u)*v, u/(v+2)")
        a = field.sample(0.5, 0.25)
        b = field.sample(0.5, 0.25)
        assert a == b

    def test_division_by_zero_is_domain_error(self):
        field = parse_field("1/(u - u), 0")
        with pytest.raises(DomainError):
            field.sample(1.0, 0.0)

    def test_fractional_power_needs_positive_base(self):
        field = parse_field("u^0.5, 0")
        assert field.sample(4.0, 0.0).ub == pytest.approx(2.0)
        with pytest.raises(DomainError):
            field.sample(-4.0, 0.0)

    def test_integer_power_of_negative_base(self):
        field = parse_field("u^3, v^2")
        s = field.sample(-2.0, -3.0)
        assert s.ub == -8.0 and s.vb == 9.0


class TestAffine:
    def test_matches_parsed_equivalent(self):
        a = affine(1, -1, 0, 1, 1, 0)
        b = parse_field("u - v, u + v")
        rng = random.Random(17)
        for _ in range(100):
            u, v = rng.uniform(-4, 4), rng.uniform(-4, 4)
            assert a.sample(u, v) == pytest.approx(b.sample(u, v), abs=1e-12)

    def test_zero_field(self):
        s = ZERO_FIELD.sample(1.0, 2.0)
        assert s == (0.0,) * 6

    def test_helicoid_lift(self):
        p = 0.25
        field = affine(p, 0, 0, 0, 0, 0)
        s = field.sample(1.7, math.pi / 2)
        assert s.ub == pytest.approx(p * 1.7)
        assert s.vb == 0.0
        assert s.ub_u == p

    def test_jet_has_zero_second_partials(self):
        jet = affine(0.3, 0.4, 0.5, -1, 2, 3).jet(1.0, 2.0)
        assert jet[6:] == (0.0,) * 6
