"""Double coset decomposition, Hecke algebra identities, compatibility and grading"""

import unittest

from hecke.errors import MathDomainError
from hecke.exact.fields import finite_field
from hecke.modgroup import GMat, GroupDescriptor
from hecke.algebra.compat import check_compatible, common_level
from hecke.algebra.cosets import (
    compose,
    decompose,
    degree_formula,
    elementary_divisor_types,
    hecke_ta,
    hecke_tp,
    series_check,
)
from hecke.algebra.grading import (
    ClassCharacter,
    EigenSystem,
    OperatorLabel,
    SyntheticClassGroup,
    extract_twist,
    restrict_to_gamma,
    twist_eigensystem,
)


# ============== Decomposition ==============

class TestDecomposition(unittest.TestCase):

    def test_tp_level_one(self):
        """T2 has 3 right cosets in SL2(Z), T2^(2) and T2^(0) have one"""
        G = GroupDescriptor.full()
        self.assertEqual(hecke_tp(2, 1, G).degree, 3)
        self.assertEqual(hecke_tp(2, 2, G).degree, 1)
        self.assertEqual(hecke_tp(2, 0, G).degree, 1)
        self.assertEqual(hecke_tp(5, 1, G).degree, 6)

    def test_tp_gamma0(self):
        """T_p at a level prime to p still has p + 1 cosets"""
        G = GroupDescriptor.gamma0(3)
        T = hecke_tp(2, 1, G)
        self.assertEqual(T.degree, 3)
        self.assertTrue(T.is_right_invariant())
        for _, rep in T.terms:
            self.assertIn(rep, G.semigroup)

    def test_level_sharing_prime(self):
        """p dividing the level is refused"""
        with self.assertRaisesRegex(MathDomainError, "determinant not prime to level"):
            hecke_tp(2, 1, GroupDescriptor.gamma0(4))
        with self.assertRaisesRegex(MathDomainError, "singular"):
            decompose(GroupDescriptor.full(), GMat([[1, 1], [1, 1]]))

    def test_records(self):
        """Coset records carry string entries and the group hash"""
        G = GroupDescriptor.full()
        records = hecke_tp(2, 1, G).to_records()
        self.assertEqual(len(records), 3)
        for r in records:
            self.assertEqual(r["coeff"], "1")
            self.assertEqual(r["group"], G.descriptor_hash)
            self.assertEqual(len(r["matrix"]), 2)

    def test_degree_formula(self):
        """Coset counts match the Gaussian binomial for n = 2 and n = 3"""
        self.assertEqual(degree_formula(2, 1, 2), 3)
        self.assertEqual(degree_formula(3, 1, 3), 13)
        self.assertEqual(degree_formula(2, 2, 3), 7)
        G3 = GroupDescriptor.full(n=3)
        self.assertEqual(hecke_tp(2, 1, G3).degree, 7)
        self.assertEqual(hecke_tp(2, 2, G3).degree, 7)

    def test_degree_formula_rank_three(self):
        """Every T_p^(m) in GL3 has [3, m]_p right cosets"""
        G3 = GroupDescriptor.full(n=3)
        for p in (2, 3, 5):
            self.assertEqual([degree_formula(p, m, 3) for m in range(4)], [1, p * p + p + 1, p * p + p + 1, 1])
            for m in range(4):
                self.assertEqual(hecke_tp(p, m, G3).degree, degree_formula(p, m, 3), f"p={p} m={m}")


# ============== Algebra identities ==============

class TestHeckeAlgebra(unittest.TestCase):

    def test_elementary_divisors(self):
        self.assertEqual(elementary_divisor_types(4, 2), [(1, 4), (2, 2)])
        self.assertEqual(elementary_divisor_types(6, 2), [(1, 6)])

    def test_ta_degree(self):
        """deg T_a is the divisor sum of a in rank 2"""
        G = GroupDescriptor.full()
        self.assertEqual(hecke_ta(4, G).degree, 7)
        self.assertEqual(hecke_ta(6, G).degree, 12)

    def test_tp_squared(self):
        """T2 T2 = T(1,4) + 3 T(2,2) in the level one Hecke algebra"""
        G = GroupDescriptor.full()
        T2 = hecke_tp(2, 1, G)
        expected = decompose(G, GMat.diag(1, 4)) + decompose(G, GMat.diag(2, 2)).scale(3)
        self.assertEqual(compose(T2, T2), expected)

    def test_commutative_level_one(self):
        G = GroupDescriptor.full()
        T2, T3 = hecke_tp(2, 1, G), hecke_tp(3, 1, G)
        self.assertEqual(compose(T2, T3), compose(T3, T2))

    def test_commutative_level_three(self):
        """Operators prime to 3 commute in the Gamma0(3) algebra"""
        G = GroupDescriptor.gamma0(3)
        T2, T5, T2_2 = hecke_tp(2, 1, G), hecke_tp(5, 1, G), hecke_tp(2, 2, G)
        self.assertEqual(compose(T2, T5), compose(T5, T2))
        self.assertEqual(compose(T2, T2_2), compose(T2_2, T2))

    def test_series(self):
        """The inverse-series identity holds for n = 2 and n = 3"""
        self.assertTrue(series_check(2, 2, 2))
        self.assertTrue(series_check(3, 2, 2))
        self.assertTrue(series_check(2, 3, 1))
        self.assertTrue(series_check(3, 3, 1))


# ============== Compatibility ==============

class TestCompatibility(unittest.TestCase):

    def test_gamma0_tower(self):
        """Gamma0(4) -> Gamma0(2) is a compatible pair"""
        self.assertTrue(check_compatible(GroupDescriptor.gamma0(4), GroupDescriptor.gamma0(2)))
        self.assertTrue(check_compatible(GroupDescriptor.gamma1_upper(5), GroupDescriptor.full()))

    def test_diagonal_into_full(self):
        """Gamma_diag(N) with its diagonal semigroup sits compatibly in the full group"""
        for N in (3, 5):
            self.assertTrue(check_compatible(GroupDescriptor.gamma_diag(N), GroupDescriptor.full()))

    def test_gamma0_not_in_gamma1(self):
        self.assertFalse(check_compatible(GroupDescriptor.gamma0(5), GroupDescriptor.gamma1_upper(5)))

    def test_incompatible_levels(self):
        with self.assertRaisesRegex(MathDomainError, "incompatible levels"):
            common_level(GroupDescriptor.gamma0(4), GroupDescriptor.gamma0(6))


# ============== Restriction to Gamma ==============

class TestRestriction(unittest.TestCase):

    def test_trivial_class_group(self):
        """With no classes the restriction of T_p is T_p itself"""
        G = GroupDescriptor.full()
        T2 = hecke_tp(2, 1, G)
        self.assertEqual(restrict_to_gamma(T2, SyntheticClassGroup.trivial(), (), ()), T2)

    def test_wrong_component(self):
        """T2 graded by the nontrivial class of Z/2 misses the trivial component"""
        classes = SyntheticClassGroup((2,), {2: (1,)})
        T2 = hecke_tp(2, 1, GroupDescriptor.full())
        with self.assertRaisesRegex(MathDomainError, "wrong graded component"):
            restrict_to_gamma(T2, classes, (0,), (0,))
        self.assertEqual(restrict_to_gamma(T2, classes, (1,), (0,)), T2)

    def test_level_three(self):
        """Restricting T2 to Gamma0(3) keeps its 3 cosets"""
        G3 = GroupDescriptor.gamma0(3)
        trivial = SyntheticClassGroup.trivial()
        restricted = restrict_to_gamma(hecke_tp(2, 1, GroupDescriptor.full()), trivial, (), (), target=G3)
        self.assertEqual(restricted.degree, 3)
        self.assertEqual(restricted, hecke_tp(2, 1, G3))
        self.assertEqual(restrict_to_gamma(hecke_tp(2, 1, G3), trivial, (), ()).degree, 3)


# ============== Grading and twists ==============

class TestGrading(unittest.TestCase):

    def setUp(self):
        self.classes = SyntheticClassGroup((3,), {2: (1,), 5: (2,)})
        self.F = finite_field(7)

    def test_grade_of_det(self):
        self.assertEqual(self.classes.grade_of_det(4), (2,))
        self.assertEqual(self.classes.grade_of_det(10), (0,))
        self.assertEqual(self.classes.grade_of_det(3), (0,))

    def test_characters(self):
        """Z/3 has three characters in F7, the trivial one first"""
        chars = ClassCharacter.all(self.classes, self.F)
        self.assertEqual(len(chars), 3)
        self.assertTrue(chars[0].is_trivial)
        self.assertEqual(chars[1].order(), 3)
        self.assertTrue((chars[1] * chars[1].inverse()).is_trivial)

    def test_twist_roundtrip(self):
        """A twisted eigensystem gives back its twisting character"""
        labels = [OperatorLabel(2), OperatorLabel(3), OperatorLabel(5)]
        phi = EigenSystem(self.F, dict(zip(labels, [3, 4, 1])))
        for chi in ClassCharacter.all(self.classes, self.F):
            psi = twist_eigensystem(chi, phi)
            self.assertEqual(psi.value(OperatorLabel(3)), 4)
            self.assertEqual(extract_twist(psi, phi, self.classes), chi)

    def test_not_a_twist(self):
        phi = EigenSystem(self.F, {OperatorLabel(3): 4})
        psi = EigenSystem(self.F, {OperatorLabel(3): 5})
        with self.assertRaises(MathDomainError):
            extract_twist(psi, phi, self.classes)

    def test_labels(self):
        """Labels parse and print in the T_p, T_p^(m), T_a forms"""
        for text in ("T2", "T3^(2)", "Ta6"):
            self.assertEqual(str(OperatorLabel.parse(text)), text)
        self.assertEqual(OperatorLabel.parse("7"), OperatorLabel(7))
        self.assertEqual(OperatorLabel.parse("T3^(2)").det, 9)
        self.assertEqual(OperatorLabel.parse("Ta6").det, 6)


if __name__ == "__main__":
    unittest.main()
