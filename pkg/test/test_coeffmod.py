"""Characters, coefficient modules, induction and the finite-group representation checks"""

import unittest

from hecke.errors import MathDomainError
from hecke.exact.fields import QQ_FIELD, finite_field
from hecke.finite_groups import matrix_group, permutation_matrices
from hecke.modgroup import GMat, GroupDescriptor, S, T
from hecke.coeffmod import (
    AdmissibleModule,
    Character,
    CharacterModule,
    FiniteInducedModel,
    InducedModule,
    SymPowerModule,
    all_characters,
    character_field,
    check_action_law,
    constituents,
    finite_induction,
    hom_space,
    is_irreducible,
    is_semisimple,
    trivial_module,
    twist_module,
    unit_generators,
)
from hecke.coeffmod.lemmas import check_all
from hecke.coeffmod.meataxe import random_spin_check
from hecke.coeffmod.modules import acts_trivially_on_kernel
from hecke.schema_utils import parse_module


# ============== Helpers ==============

ACTION_SAMPLE = [S, T, GMat.diag(1, 2), GMat.diag(2, 1), GMat([[2, 1], [1, 1]])]


# ============== Characters ==============

class TestCharacters(unittest.TestCase):

    def test_unit_generators(self):
        self.assertEqual(unit_generators(5), [(2, 4)])
        self.assertEqual(unit_generators(2), [])
        self.assertEqual(sorted(order for _, order in unit_generators(8)), [2, 2])

    def test_all_characters(self):
        """Characters mod 5 in F5 and in Q, trivial first"""
        F5 = finite_field(5)
        chars = all_characters(5, F5)
        self.assertEqual(len(chars), 8)
        self.assertTrue(chars[0].is_trivial)
        self.assertEqual(len(all_characters(5, F5, signs=(1,))), 4)
        self.assertEqual(len(all_characters(5, QQ_FIELD)), 4)

    def test_character_values(self):
        F5 = finite_field(5)
        chi = Character(5, F5, 4, [2])
        self.assertEqual(chi(1, 2), 2)
        self.assertEqual(chi(1, 4), 4)
        self.assertEqual(chi(-1, 1), 4)
        self.assertEqual(chi.of_det(-3), F5.mul(4, 2))
        self.assertTrue((chi * chi.inverse()).is_trivial)
        with self.assertRaisesRegex(MathDomainError, "determinant not prime to level"):
            chi(1, 10)

    def test_bad_values(self):
        """Values of the wrong order do not define a character"""
        with self.assertRaises(MathDomainError):
            Character(5, QQ_FIELD, 1, [2])
        with self.assertRaises(MathDomainError):
            Character(5, finite_field(5), 2, [1])

    def test_character_field(self):
        self.assertIs(character_field(5, 0), QQ_FIELD)
        self.assertIs(character_field(5, 5), finite_field(5))
        self.assertIs(character_field(5, 7), finite_field(7, 2))


# ============== Modules ==============

class TestModules(unittest.TestCase):

    def test_sym_power_matrix(self):
        """Substitution action of T on Sym^2"""
        M = SymPowerModule(2).matrix(T)
        self.assertTrue(QQ_FIELD.equal(M, QQ_FIELD.matrix([[1, 2, 1], [0, 1, 1], [0, 0, 1]])))

    def test_action_law(self):
        """Every module kind is a right action on a sample of matrices"""
        F5 = finite_field(5)
        modules = [
            SymPowerModule(3, 1),
            SymPowerModule(4, 0, finite_field(7)),
            trivial_module(QQ_FIELD),
        ]
        for module in modules:
            self.assertTrue(check_action_law(module, ACTION_SAMPLE), module.describe())
        chi = CharacterModule(Character(5, F5, 1, [2]))
        self.assertTrue(check_action_law(chi, [S, T, GMat.diag(1, 2), GMat.diag(3, 1)]))

    def test_descriptors(self):
        """Descriptors parse back to equivalent modules"""
        for text in ("sym:10:0:Q", "trivial:F5", "char:5:trivial:F5", "char:5:1:2:F5"):
            self.assertEqual(parse_module(text).describe(), text)

    def test_twist(self):
        """Twisting multiplies the action by chi(det)"""
        F5 = finite_field(5)
        chi = Character(5, F5, 1, [2])
        twisted = twist_module(trivial_module(F5), chi)
        self.assertEqual(twisted.level, 5)
        self.assertEqual(twisted.matrix(GMat.diag(1, 2))[0, 0], 2)
        with self.assertRaisesRegex(MathDomainError, "twist requires admissible"):
            twist_module(SymPowerModule(2, 0, F5), chi)

    def test_admissible_module(self):
        """A module fixed on generators mod 3 and verified on the whole group"""
        F3 = finite_field(3)
        W = AdmissibleModule.from_generators(3, F3, [(1, 1, 0, 1)], [[[1, 1], [0, 1]]])
        self.assertEqual(W.dim, 2)
        self.assertTrue(F3.equal(W.matrix(T), F3.matrix([[1, 1], [0, 1]])))
        self.assertTrue(acts_trivially_on_kernel(W))
        with self.assertRaisesRegex(MathDomainError, "determinant not prime to level"):
            W.matrix(GMat.diag(1, 3))


# ============== Induction ==============

class TestInduction(unittest.TestCase):

    def test_induced_dimension(self):
        """Sym^10 induced from Gamma1(5) to SL2(Z) has dimension 24 * 11"""
        ind = InducedModule(GroupDescriptor.gamma1_upper(5), GroupDescriptor.full(), SymPowerModule(10))
        self.assertEqual(ind.index, 24)
        self.assertEqual(ind.dim, 264)

    def test_induced_action_law(self):
        ind = InducedModule(GroupDescriptor.gamma0(5), GroupDescriptor.full(), trivial_module(QQ_FIELD))
        self.assertEqual(ind.dim, 6)
        self.assertTrue(check_action_law(ind, ACTION_SAMPLE))

    def test_finite_model_matches(self):
        """The finite-level model gives the same unimodular matrices"""
        small, big = GroupDescriptor.gamma0(5), GroupDescriptor.full()
        inner = trivial_module(QQ_FIELD)
        ind, model = InducedModule(small, big, inner), FiniteInducedModel(small, big, inner)
        built = finite_induction(small, big, inner)
        self.assertIsInstance(built, FiniteInducedModel)
        self.assertEqual(built.dim, ind.dim)
        for g in (S, T, GMat([[2, 1], [1, 1]])):
            self.assertTrue(QQ_FIELD.equal(ind.matrix(g), model.matrix(g)))
            self.assertTrue(QQ_FIELD.equal(ind.matrix(g), built.matrix(g)))

    def test_not_a_subgroup(self):
        with self.assertRaises(MathDomainError):
            InducedModule(GroupDescriptor.full(), GroupDescriptor.gamma0(5), trivial_module(QQ_FIELD))


# ============== Submodules and lemmas ==============

class TestMeataxe(unittest.TestCase):

    def test_unipotent(self):
        """A Jordan block is reducible, not semisimple, with trivial factor twice"""
        F = finite_field(5)
        gens = [F.matrix([[1, 1], [0, 1]])]
        self.assertFalse(is_irreducible(F, gens))
        self.assertFalse(is_semisimple(F, gens))
        cons = constituents(F, gens)
        self.assertEqual([(c.dim, c.multiplicity) for c in cons], [(1, 2)])

    def test_sym_power_constituents_spin(self):
        """Every constituent of Sym^k(F5) spins any nonzero vector to the whole space"""
        F = finite_field(5)
        for k in (2, 6):
            module = SymPowerModule(k, 0, F)
            gens = [module.matrix(S), module.matrix(T)]
            cons = constituents(F, gens)
            self.assertEqual(sum(c.dim * c.multiplicity for c in cons), k + 1)
            for c in cons:
                self.assertTrue(random_spin_check(F, c.generators, trials=200))

    def test_spin_finds_invariant_line(self):
        F = finite_field(5)
        self.assertFalse(random_spin_check(F, [F.matrix([[1, 1], [0, 1]])], trials=200))

    def test_natural_gl2_f3(self):
        """The natural module of GL2(F3) is absolutely irreducible"""
        F = finite_field(3)
        G = matrix_group(3, [(1, 1, 0, 1), (1, 0, 1, 1), (1, 0, 0, 2)])
        gens = [F.matrix([[g[0], g[1]], [g[2], g[3]]]) for g in G.generators]
        self.assertTrue(is_irreducible(F, gens))
        self.assertEqual(len(hom_space(F, gens, gens)), 1)

    def test_regular_module_semisimple(self):
        """F5[C2] is semisimple, F2[C2] is not"""
        G = matrix_group(3, [(2, 0, 0, 1)])
        self.assertTrue(is_semisimple(finite_field(5), permutation_matrices(G, finite_field(5))))
        self.assertFalse(is_semisimple(finite_field(2), permutation_matrices(G, finite_field(2))))

    def test_lemmas(self):
        results = check_all()
        self.assertEqual([r.name for r in results], ["determinant", "reduction kernel", "restriction semisimple"])
        for r in results:
            self.assertTrue(r.passed, f"{r.name}: {r.detail}")


if __name__ == "__main__":
    unittest.main()
