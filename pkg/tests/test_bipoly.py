import numpy as np
import pytest

from pharmonic.bipoly import BiPolynomial, laplacian_power


def test_zero_coefficients_are_pruned():
    q = BiPolynomial({(1, 0): 1, (0, 1): 0})
    assert dict(q.terms) == {(1, 0): 1}
    assert (q - q).is_zero()


def test_laplacian_of_modulus_squared():
    assert BiPolynomial.monomial(1, 1).laplacian() == BiPolynomial({(0, 0): 4})


def test_biharmonic_monomial():
    q = BiPolynomial.monomial(2, 1)
    # 4 d/dz d/dzbar (z^2 zbar) = 4 * 2z
    assert q.laplacian() == BiPolynomial({(1, 0): 8})
    assert q.laplacian().laplacian().is_zero()
    assert laplacian_power(q, 2).is_zero()


def test_product_and_sum():
    z = BiPolynomial.monomial(1, 0)
    zb = BiPolynomial.monomial(0, 1)
    assert z * zb == BiPolynomial.monomial(1, 1)
    assert (z + zb) * 2 == BiPolynomial({(1, 0): 2, (0, 1): 2})


def test_rotational_operator_rule():
    q = BiPolynomial({(3, 1): 2.0, (1, 1): 5.0, (0, 2): 1j})
    assert q.rotational() == BiPolynomial({(3, 1): 4.0, (0, 2): -2j})


def test_evaluation_scalar_and_array():
    q = BiPolynomial({(2, 1): 1.0, (0, 0): 1.0})
    assert q(0.5) == pytest.approx(1.125)
    z = np.array([[0.5, 0.1j]])
    out = q(z)
    assert out.shape == z.shape
    np.testing.assert_allclose(out, 1 + np.abs(z) ** 2 * z)


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        BiPolynomial({(0, 0): float("nan")})
    with pytest.raises(ValueError):
        BiPolynomial({(-1, 0): 1})
