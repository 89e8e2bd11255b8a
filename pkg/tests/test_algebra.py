"""Field, vector, matrix, and solver tests.

Extension-field expectations are worked out by hand against the modulus
polynomial and frozen here as integers, independent of the table builder.
"""

import pytest
from hypothesis import given, settings, strategies as st

from icsisec.algebra import (
    DimensionMismatchError,
    Field,
    FieldMismatchError,
    FieldTooLargeError,
    InconsistentSystemError,
    IndexOutOfRangeError,
    Matrix,
    NotPrimeError,
    ReduciblePolynomialError,
    Vector,
    column_span_contains,
    rref,
    solve,
    unit_vector,
)

F2 = Field(2)
F3 = Field(3)
F5 = Field(5)
F4 = Field(2, 2)
F8 = Field(2, 3)
F9 = Field(3, 2)

SMALL_FIELDS = (F2, F3, F5, F4, F8, F9)


def field_and_elements(count):
    return st.sampled_from(SMALL_FIELDS).flatmap(
        lambda f: st.tuples(st.just(f), *(st.integers(0, f.q - 1) for _ in range(count)))
    )


class TestField:
    def test_prime_field_tables(self):
        assert F5.add(3, 4) == 2
        assert F5.mul(3, 4) == 2
        assert F5.neg(2) == 3
        assert F5.inv(3) == 2
        assert F5.sub(1, 4) == 2
        assert F5.power(2, 4) == 1

    def test_gf8_uses_x3_plus_x_plus_1(self):
        # canonical modulus is the least irreducible cubic: 1 + x + x^3
        assert F8.poly == (1, 1, 0, 1)
        # x * x = x^2, x * x^2 = x^3 = x + 1
        assert F8.mul(2, 2) == 4
        assert F8.mul(2, 4) == 3
        # (x+1)^2 = x^2 + 1
        assert F8.mul(3, 3) == 5
        # x * (x^2+1) = x^3 + x = 1
        assert F8.inv(2) == 5
        assert F8.add(6, 3) == 5

    def test_gf4_table(self):
        assert F4.poly == (1, 1, 1)
        assert F4.mul(2, 2) == 3
        assert F4.mul(2, 3) == 1
        assert F4.inv(2) == 3

    def test_gf9_arithmetic(self):
        # modulus 1 + x^2 is irreducible over F_3 (x^2 = -1 = 2)
        assert F9.poly == (1, 0, 1)
        # x * x = 2, so 3 * 3 = 2
        assert F9.mul(3, 3) == 2
        # addition is coefficientwise mod 3: (1+x) + (2+x) = 2x
        assert F9.add(4, 5) == 6

    def test_power_zero_is_one(self):
        for field in SMALL_FIELDS:
            assert field.power(0, 0) == 1
            assert field.power(3 % field.q, 0) == 1

    def test_rejections(self):
        with pytest.raises(NotPrimeError):
            Field(4)
        with pytest.raises(NotPrimeError):
            Field(1)
        with pytest.raises(ReduciblePolynomialError):
            Field(2, 2, poly=(1, 0, 1))
        with pytest.raises(FieldTooLargeError):
            Field(2, 17)
        with pytest.raises(FieldTooLargeError):
            Field(65537)
        with pytest.raises(ValueError):
            Field(5, 1, poly=(1, 1))
        with pytest.raises(ValueError):
            Field(2, 3, poly=(1, 1, 1))  # degree does not match m
        with pytest.raises(ReduciblePolynomialError):
            Field(2, 3, poly=(1, 1, 1, 1))  # 1 + x + x^2 + x^3 has root 1

    def test_largest_allowed_field(self):
        field = Field(251)
        assert field.q == 251
        assert field.mul(250, 250) == 1

    def test_equality_is_structural(self):
        assert Field(2, 3) == Field(2, 3, poly=(1, 1, 0, 1))
        assert Field(2, 3) != Field(2, 2)
        assert hash(Field(3)) == hash(Field(3))

    def test_check_value(self):
        assert F3.check_value(2) == 2
        with pytest.raises(Exception):
            F3.check_value(3)
        with pytest.raises(Exception):
            F3.check_value(-1)

    @given(field_and_elements(3))
    def test_ring_axioms(self, fabc):
        f, a, b, c = fabc
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) == 0
        assert f.sub(a, b) == f.add(a, f.neg(b))

    @given(field_and_elements(1))
    def test_multiplicative_inverse(self, fa):
        f, a = fa
        if a == 0:
            with pytest.raises(ZeroDivisionError):
                f.inv(a)
        else:
            assert f.mul(a, f.inv(a)) == 1
            assert f.div(a, a) == 1

    @given(field_and_elements(1), st.integers(0, 20))
    def test_power_matches_repeated_multiplication(self, fa, e):
        f, a = fa
        expected = 1
        for _ in range(e):
            expected = f.mul(expected, a)
        assert f.power(a, e) == expected


class TestFieldElement:
    def test_operators(self):
        a, b = F8.element(6), F8.element(3)
        assert (a + b).value == 5
        assert (a - b).value == 5
        assert (a * b).value == F8.mul(6, 3)
        assert (a / a).value == 1
        assert (-a).value == 6
        assert bool(F8.element(0)) is False

    def test_cross_field_rejected(self):
        with pytest.raises(FieldMismatchError):
            F2.element(1) + F3.element(1)


class TestVector:
    def test_basics(self):
        v = Vector(F3, (0, 2, 1, 0))
        assert len(v) == 4
        assert v.weight == 2
        assert v.support() == frozenset({2, 3})
        assert v.at(2) == 2
        assert v.take((2, 4)) == (2, 0)
        with pytest.raises(IndexOutOfRangeError):
            v.at(0)
        with pytest.raises(IndexOutOfRangeError):
            v.at(5)

    def test_arithmetic(self):
        u = Vector(F3, (1, 2, 0))
        v = Vector(F3, (2, 2, 1))
        assert (u + v).entries == (0, 1, 1)
        assert (u - v).entries == (2, 0, 2)
        assert (-u).entries == (2, 1, 0)
        assert u.scaled(2).entries == (2, 1, 0)
        assert u.dot(v) == F3.add(F3.mul(1, 2), F3.mul(2, 2))
        assert u.distance(v) == 2

    def test_unit_vector(self):
        e = unit_vector(2, 4, F5)
        assert e.entries == (0, 1, 0, 0)
        with pytest.raises(IndexOutOfRangeError):
            unit_vector(5, 4, F5)

    def test_mismatches(self):
        with pytest.raises(FieldMismatchError):
            Vector(F2, (1,)) + Vector(F3, (1,))
        with pytest.raises(DimensionMismatchError):
            Vector(F2, (1,)) + Vector(F2, (1, 0))


class TestMatrix:
    def test_products(self):
        m = Matrix(F5, ((1, 2, 0), (0, 1, 3)))
        assert m.times_col(Vector(F5, (1, 1, 1))).entries == (3, 4)
        assert m.left_times(Vector(F5, (1, 2))).entries == (1, 4, 1)
        assert m.transpose().entries == ((1, 0), (2, 1), (0, 3))
        assert m.column(2).entries == (2, 1)
        assert m.columns((1, 3)).entries == ((1, 0), (0, 3))
        assert Matrix.identity(F5, 2).entries == ((1, 0), (0, 1))

    def test_row_column_bounds(self):
        m = Matrix(F2, ((1, 0),))
        with pytest.raises(IndexOutOfRangeError):
            m.row(2)
        with pytest.raises(IndexOutOfRangeError):
            m.column(3)


def random_matrix(draw_field=True):
    def build(args):
        f, nrows, ncols, seed_entries = args
        entries = tuple(
            tuple(seed_entries[i * ncols + j] % f.q for j in range(ncols))
            for i in range(nrows)
        )
        return Matrix(f, entries)

    return st.tuples(
        st.sampled_from(SMALL_FIELDS),
        st.integers(1, 4),
        st.integers(1, 4),
        st.lists(st.integers(0, 100), min_size=16, max_size=16),
    ).map(build)


class TestRref:
    def test_known_reduction(self):
        m = Matrix(F2, ((1, 1, 0), (1, 1, 1), (0, 0, 1)))
        result = rref(m)
        assert result.matrix.entries == ((1, 1, 0), (0, 0, 1), (0, 0, 0))
        assert result.rank == 2
        assert result.pivots == (1, 3)

    @settings(deadline=None)
    @given(random_matrix())
    def test_rref_properties(self, m):
        result = rref(m)
        assert list(result.pivots) == sorted(result.pivots)
        assert result.rank <= min(m.nrows, m.ncols)
        # pivot columns reduce to unit columns
        for r, p in enumerate(result.pivots):
            col = [result.matrix.entries[i][p - 1] for i in range(m.nrows)]
            assert col[r] == 1 and sum(1 for v in col if v) == 1
        # idempotent
        again = rref(result.matrix)
        assert again.matrix.entries == result.matrix.entries

    @settings(deadline=None)
    @given(random_matrix())
    def test_rank_equals_transpose_rank(self, m):
        assert rref(m).rank == rref(m.transpose()).rank


class TestSolve:
    def test_unique_solution(self):
        a = Matrix(F5, ((1, 2), (3, 4)))
        sol = solve(a, Vector(F5, (0, 2)))
        assert a.times_col(sol.particular).entries == (0, 2)
        assert sol.kernel == ()
        assert sol.count == 1

    def test_inconsistent(self):
        a = Matrix(F2, ((1, 1), (1, 1)))
        with pytest.raises(InconsistentSystemError):
            solve(a, Vector(F2, (0, 1)))

    @settings(deadline=None)
    @given(random_matrix(), st.data())
    def test_solution_structure(self, a, data):
        f = a.field
        y = Vector(f, tuple(data.draw(st.integers(0, f.q - 1)) for _ in range(a.ncols)))
        b = a.times_col(y)
        sol = solve(a, b)
        assert a.times_col(sol.particular) == b
        for basis_vector in sol.kernel:
            assert a.times_col(basis_vector).entries == (0,) * a.nrows
        assert sol.count == f.q ** len(sol.kernel)

    def test_column_span(self):
        cols = Matrix(F2, ((1, 0), (1, 1), (0, 1)))
        assert column_span_contains(cols, Vector(F2, (1, 0, 1)))
        assert not column_span_contains(Matrix(F2, ((1,), (1,), (0,))), Vector(F2, (1, 0, 1)))
