"""Exact arithmetic: fields, polynomials and Hermite normal form"""

import random
import unittest
from fractions import Fraction

from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import (
    QQ_FIELD,
    common_field,
    extension_degree_for,
    field_embeddings,
    field_from_name,
    finite_field,
    multiplicative_order,
)
from hecke.exact.hnf import hnf, is_hnf
from hecke.modgroup import GMat
from hecke.exact.poly import char_poly, degree, expand, factor, from_ints, min_poly, poly_to_str, roots


# ============== Helpers ==============

def as_ints(F, f):
    return [int(F.to_str(c)) for c in f]


def int_matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


# ============== Fields ==============

class TestFields(unittest.TestCase):

    def test_field_names(self):
        """Field names parse back to the cached field objects"""
        self.assertIs(field_from_name("Q"), QQ_FIELD)
        self.assertIs(field_from_name("F5"), finite_field(5))
        self.assertIs(field_from_name("F5^2"), finite_field(5, 2))
        self.assertEqual(finite_field(5, 2).name, "F5^2")
        self.assertEqual(finite_field(5, 2).order, 25)

    def test_bad_field_names(self):
        """Unknown names and composite characteristics are rejected"""
        with self.assertRaises(ValidationError):
            field_from_name("R")
        with self.assertRaises(ValidationError):
            field_from_name("F6")

    def test_prime_field_kernel(self):
        """Right kernel of a rank-one matrix over F7"""
        F = finite_field(7)
        A = F.matrix([[1, 2, 3], [2, 4, 6]])
        self.assertEqual(F.rank(A), 1)
        K = F.kernel_basis(A)
        self.assertEqual(K.shape, (2, 3))
        self.assertTrue(F.is_zero_matrix(F.matmul(A, K.T)))

    def test_left_kernel(self):
        """Left kernel rows annihilate the matrix from the left"""
        F = QQ_FIELD
        A = F.matrix([[1, 2], [2, 4], [0, 1]])
        L = F.left_kernel_basis(A)
        self.assertEqual(L.shape[0], 1)
        self.assertTrue(F.is_zero_matrix(F.matmul(L, A)))

    def test_inverse(self):
        """Inverse over Q and over F5, and a singular matrix"""
        for F in (QQ_FIELD, finite_field(5)):
            A = F.matrix([[2, 1], [1, 1]])
            self.assertTrue(F.equal(F.matmul(A, F.inverse(A)), F.identity(2)))
        with self.assertRaises(MathDomainError):
            QQ_FIELD.inverse(QQ_FIELD.matrix([[1, 2], [2, 4]]))

    def test_extension_arithmetic(self):
        """Every nonzero element of F25 has an inverse and order dividing 24"""
        F = finite_field(5, 2)
        for x in F.elements()[1:]:
            self.assertEqual(F.mul(x, F.inv(x)), F.one)
            self.assertEqual(24 % multiplicative_order(F, x), 0)

    def test_embedding(self):
        """F5 embeds into F25, the common field is the larger one"""
        F, E = finite_field(5), finite_field(5, 2)
        self.assertIs(common_field(F, E), E)
        self.assertEqual(E.embed(3, F), E.convert(3))
        with self.assertRaises(MathDomainError):
            common_field(F, finite_field(7))

    def test_field_embeddings(self):
        """F25 has two embeddings into F5^4 and none into F5^3"""
        F, E, L = finite_field(5), finite_field(5, 2), finite_field(5, 4)
        self.assertEqual(len(field_embeddings(F, L)), 1)
        self.assertEqual(field_embeddings(E, finite_field(5, 3)), [])
        self.assertEqual(field_embeddings(E, finite_field(7, 2)), [])
        sigmas = field_embeddings(E, L)
        self.assertEqual(len(sigmas), 2)
        alpha = E.element(5)
        self.assertNotEqual(sigmas[0](alpha), sigmas[1](alpha))
        for sigma in sigmas:
            self.assertEqual(sigma(E.convert(3)), L.convert(3))
            for a in E.elements()[::3]:
                for b in E.elements()[::4]:
                    self.assertEqual(sigma(E.add(a, b)), L.add(sigma(a), sigma(b)))
                    self.assertEqual(sigma(E.mul(a, b)), L.mul(sigma(a), sigma(b)))

    def test_roots_of_unity(self):
        """Roots of unity come with 1 first"""
        self.assertEqual(QQ_FIELD.roots_of_unity(2), [1, -1])
        self.assertEqual(QQ_FIELD.roots_of_unity(3), [1])
        self.assertEqual(finite_field(5).roots_of_unity(4)[0], 1)
        self.assertEqual(len(finite_field(5).roots_of_unity(4)), 4)
        self.assertEqual(extension_degree_for(5, 3), 2)
        with self.assertRaises(MathDomainError):
            extension_degree_for(5, 5)


# ============== Polynomials ==============

class TestPolynomials(unittest.TestCase):

    def test_char_poly_rational(self):
        """Characteristic polynomial of a 2x2 rational matrix"""
        F = QQ_FIELD
        f = char_poly(F, F.matrix([[1, 2], [3, 4]]))
        self.assertEqual(f, [1, -5, -2])

    def test_char_poly_prime(self):
        """Characteristic polynomial of a companion matrix over F7"""
        F = finite_field(7)
        M = F.matrix([[0, 1, 0], [0, 0, 1], [2, 3, 4]])
        self.assertEqual(as_ints(F, char_poly(F, M)), [1, 3, 4, 5])

    def test_min_poly(self):
        """Minimal polynomial of a scalar matrix is linear"""
        F = QQ_FIELD
        M = F.mscale(Fraction(3), F.identity(3))
        self.assertEqual(min_poly(F, M), [1, -3])

    def test_factor_rational(self):
        """x^3 - x over Q splits into three linear factors"""
        F = QQ_FIELD
        facs = factor(F, from_ints(F, [1, 0, -1, 0]))
        self.assertEqual(len(facs), 3)
        self.assertTrue(all(degree(g) == 1 and k == 1 for g, k in facs))
        self.assertEqual(sorted(roots(F, from_ints(F, [1, 0, -1, 0]))), [-1, 0, 1])

    def test_factor_prime_irreducible(self):
        """x^2 - 2 is irreducible over F5 and splits over F25"""
        F = finite_field(5)
        facs = factor(F, from_ints(F, [1, 0, -2]))
        self.assertEqual(len(facs), 1)
        self.assertEqual(degree(facs[0][0]), 2)

        E = finite_field(5, 2)
        facs = factor(E, from_ints(E, [1, 0, -2]))
        self.assertEqual(sorted(degree(g) for g, _ in facs), [1, 1])

    def test_factor_multiplicity(self):
        """Repeated factors keep their multiplicity and expand back"""
        F = finite_field(7)
        f = from_ints(F, [1, 4, 4])  # (x + 2)^2
        facs = factor(F, f)
        self.assertEqual(len(facs), 1)
        self.assertEqual(facs[0][1], 2)
        self.assertEqual(expand(F, facs), f)

    def test_poly_to_str(self):
        F = QQ_FIELD
        self.assertEqual(poly_to_str(F, from_ints(F, [1, 0, -2])), "x^2 + -2")
        self.assertEqual(poly_to_str(F, []), "0")


# ============== Hermite normal form ==============

class TestHermite(unittest.TestCase):

    def test_hnf_canonical(self):
        """HNF is reduced and invariant under left multiplication by GL2(Z)"""
        M = [[4, 6], [2, 5]]
        H, U = hnf(M)
        self.assertTrue(is_hnf(H))
        self.assertEqual([[sum(U[i][k] * M[k][j] for k in range(2)) for j in range(2)] for i in range(2)], H)

        G = [[1, 1], [0, 1]]
        GM = [[sum(G[i][k] * M[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        self.assertEqual(hnf(GM)[0], H)

    def test_hnf_diagonal_product(self):
        """Diagonal of the HNF multiplies to |det|"""
        H, _ = hnf([[3, 1, 0], [0, 2, 1], [1, 0, 5]])
        self.assertEqual(H[0][0] * H[1][1] * H[2][2], 31)

    def test_hnf_singular(self):
        with self.assertRaises(MathDomainError):
            hnf([[1, 2], [2, 4]])

    def test_hnf_random(self):
        """U M = H with U unimodular and H reduced, on random 2 x 2 and 3 x 3 matrices"""
        rng = random.Random(20240611)
        trials = 0
        while trials < 1000:
            n = rng.choice((2, 3))
            M = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
            if GMat(M).det == 0:
                continue
            trials += 1
            H, U = hnf(M)
            self.assertTrue(is_hnf(H), M)
            self.assertEqual(int_matmul(U, M), H, M)
            self.assertIn(GMat(U).det, (1, -1))
            self.assertEqual(abs(GMat(H).det), abs(GMat(M).det))


if __name__ == "__main__":
    unittest.main()
