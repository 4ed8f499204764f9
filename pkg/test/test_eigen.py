"""Eigensystem splitting, occurrence tests and the one-dimensional reduction search"""

import unittest

from hecke.constants import CohomPath, ReductionMode
from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import QQ_FIELD, field_embeddings, finite_field, multiplicative_order
from hecke.modgroup import GroupDescriptor
from hecke.algebra.grading import (
    ClassCharacter,
    EigenSystem,
    OperatorLabel,
    SyntheticClassGroup,
    extract_twist,
    twist_eigensystem,
)
from hecke.coeffmod import Character, CharacterModule, SymPowerModule, trivial_module
from hecke.cohom import HeckeMatrix, cohomology, hecke_matrix
from hecke.eigen import (
    NO_WITNESS,
    ReductionTarget,
    WitnessSearch,
    default_labels,
    eigensystems,
    occurs_in,
    reduce_space,
    reduce_to_one_dim,
    system_matches,
)

T2, T3, T5, T7 = OperatorLabel(2), OperatorLabel(3), OperatorLabel(5), OperatorLabel(7)


# ============== Helpers ==============

def op(label, F, rows):
    return HeckeMatrix(label, F.matrix(rows), F, "group", "module")


def h0_eigensystem(F, chi=None, labels=(T2, T3, T7)):
    """(p + 1) chi(p): the eigensystem on H^0 of a group of determinant-one matrices"""
    values = {}
    for l in labels:
        c = chi.of_det(l.p) if chi is not None else F.one
        values[l] = F.mul(F.convert(l.p + 1), c)
    return EigenSystem(F, values)


# ============== Splitting ==============

class TestEigensystems(unittest.TestCase):

    def test_diagonal(self):
        """Two one-dimensional systems over F5"""
        F = finite_field(5)
        report = eigensystems(None, [op(T2, F, [[1, 0], [0, 2]]), op(T3, F, [[3, 0], [0, 3]])])
        self.assertEqual(len(report.entries), 2)
        self.assertTrue(report.is_complete())
        values = sorted(int(s.value(T2)) for s in report.systems)
        self.assertEqual(values, [1, 2])
        for s in report.systems:
            self.assertEqual(int(s.value(T3)), 3)

    def test_generalized_eigenspace(self):
        """A Jordan block is one system of multiplicity 2"""
        report = eigensystems(None, [op(T2, QQ_FIELD, [[1, 1], [0, 1]])])
        self.assertEqual(len(report.entries), 1)
        self.assertEqual(report.entries[0].multiplicity, 2)
        self.assertEqual(report.systems[0].value(T2), 1)

    def test_irreducible_over_rationals(self):
        """x^2 - 2 stays unsplit over Q and is reported by its factor"""
        report = eigensystems(None, [op(T2, QQ_FIELD, [[0, 2], [1, 0]])])
        self.assertEqual(len(report.entries), 1)
        entry = report.entries[0]
        self.assertIsNone(entry.system)
        self.assertEqual((entry.degree, entry.multiplicity), (2, 1))
        self.assertEqual(report.systems, [])
        self.assertTrue(report.is_complete())
        self.assertEqual(entry.to_record()["factors"], {"T2": "x^2 + -2"})

    def test_extension_split(self):
        """x^2 - 2 over F5 splits over F25 into two systems"""
        F = finite_field(5)
        report = eigensystems(None, [op(T2, F, [[1, 0, 0], [0, 0, 2], [0, 1, 0]])])
        self.assertTrue(report.is_complete())
        self.assertEqual(len(report.systems), 3)
        fields = sorted(s.field.name for s in report.systems)
        self.assertEqual(fields, ["F5", "F5^2", "F5^2"])
        for s in report.systems:
            if s.field.name == "F5^2":
                E = s.field
                self.assertEqual(s.extension_degree, 2)
                self.assertEqual(E.mul(s.value(T2), s.value(T2)), E.convert(2))

        self.assertTrue(occurs_in(EigenSystem(F, {T2: 1}), report))
        self.assertFalse(occurs_in(EigenSystem(F, {T2: 3}), report))

    def test_extension_base_split(self):
        """x^2 - g for a primitive g of F25 splits over F5^4"""
        E25, E625 = finite_field(5, 2), finite_field(5, 4)
        g = next(x for x in E25.elements() if not E25.is_zero(x) and multiplicative_order(E25, x) == 24)
        report = eigensystems(None, [op(T2, E25, [[0, g], [1, 0]])])
        self.assertTrue(report.is_complete())
        self.assertEqual(len(report.systems), 2)
        g_up = field_embeddings(E25, E625)[0](g)
        for s in report.systems:
            self.assertIs(s.field, E625)
            self.assertEqual(s.extension_degree, 4)
            self.assertEqual(E625.mul(s.value(T2), s.value(T2)), g_up)

    def test_match_across_fields(self):
        """Values over F5^4 match the F25 systems through every embedding"""
        F, E25, E625 = finite_field(5), finite_field(5, 2), finite_field(5, 4)
        report = eigensystems(None, [op(T2, F, [[1, 0, 0], [0, 0, 2], [0, 1, 0]])])
        roots = [s for s in report.systems if s.field is E25]
        for s in roots:
            for sigma in field_embeddings(E25, E625):
                self.assertTrue(occurs_in(EigenSystem(E625, {T2: sigma(s.value(T2))}), report))
        self.assertTrue(occurs_in(EigenSystem(E625, {T2: E625.convert(1)}), report))
        self.assertFalse(occurs_in(EigenSystem(E625, {T2: E625.convert(3)}), report))
        self.assertFalse(system_matches(EigenSystem(E25, {T2: roots[0].value(T2)}), EigenSystem(finite_field(7), {T2: 1})))

    def test_empty_and_invalid(self):
        space = cohomology(GroupDescriptor.full(), trivial_module(QQ_FIELD), 1)
        report = eigensystems(space, [])
        self.assertEqual((report.dim, report.entries), (0, []))
        self.assertTrue(report.is_complete())
        with self.assertRaises(ValidationError):
            eigensystems(None, [])

    def test_no_operators(self):
        space = cohomology(GroupDescriptor.full(), trivial_module(QQ_FIELD), 0)
        report = eigensystems(space, [])
        self.assertEqual(len(report.entries), 1)
        self.assertEqual(report.entries[0].dim, 1)

    def test_not_commuting(self):
        F = finite_field(5)
        with self.assertRaisesRegex(MathDomainError, "do not commute"):
            eigensystems(None, [op(T2, F, [[1, 1], [0, 1]]), op(T3, F, [[1, 0], [1, 1]])])

    def test_unknown_label(self):
        F = finite_field(5)
        report = eigensystems(None, [op(T2, F, [[1]])])
        with self.assertRaises(ValidationError):
            occurs_in(EigenSystem(F, {T3: 1}), report)

    def test_mod5_tau(self):
        """The reduction of the tau eigensystem occurs in H^1(SL2(Z), Sym^10 over F5)"""
        F = finite_field(5)
        space = cohomology(GroupDescriptor.full(), SymPowerModule(10, 0, F), 1)
        report = eigensystems(space, [hecke_matrix(space, T2), hecke_matrix(space, T3)])
        self.assertTrue(report.is_complete())
        self.assertTrue(occurs_in(EigenSystem(F, {T2: 1, T3: 2}), report))
        self.assertFalse(occurs_in(EigenSystem(F, {T2: 1, T3: 3}), report))

        ops = [hecke_matrix(space, T2), hecke_matrix(space, T3)]
        self.assertTrue(occurs_in(EigenSystem(F, {T2: 1, T3: 2}), space, ops))
        with self.assertRaises(ValidationError):
            occurs_in(EigenSystem(F, {T2: 1, T3: 2}), space, ops[:1])


# ============== Reduction targets and labels ==============

class TestReductionSetup(unittest.TestCase):

    def test_default_labels(self):
        self.assertEqual(default_labels(1, primes=[2, 3, 5, 7]), [T2, T3, T5, T7])
        self.assertEqual(default_labels(6, primes=[2, 3, 5, 7]), [T5, T7])
        self.assertEqual(default_labels(5, 3, primes=[2, 3, 5, 7]), [T2, T7])

    def test_targets(self):
        t = ReductionTarget.charl(1, 5)
        self.assertEqual((t.mode, t.modulus, t.ell), (ReductionMode.CHARL, 5, 5))
        self.assertEqual(t.group, GroupDescriptor.gamma1_upper(5))
        self.assertEqual(ReductionTarget.charl(2, 5).group.level, 10)
        self.assertEqual(ReductionTarget.charl(1, 3, nu=2).modulus, 9)
        t0 = ReductionTarget.char0(6)
        self.assertEqual((t0.mode, t0.modulus), (ReductionMode.CHAR0, 6))
        self.assertEqual(t0.group, GroupDescriptor.gamma_diag(6))
        self.assertEqual(ReductionTarget.char0(6, modulus=3).modulus, 3)

    def test_candidate_order(self):
        """Degree outer, characters inner with the trivial one first"""
        search = WitnessSearch(ReductionTarget.charl(1, 5), finite_field(5), 1, [T2, T3])
        self.assertEqual(len(search.candidates), 16)
        self.assertEqual([c.index for c in search.candidates], list(range(16)))
        self.assertEqual([c.degree for c in search.candidates], [0] * 8 + [1] * 8)
        self.assertTrue(search.candidates[0].chi.is_trivial)
        self.assertTrue(search.candidates[8].chi.is_trivial)

    def test_search_validation(self):
        target = ReductionTarget.charl(1, 5)
        with self.assertRaises(ValidationError):
            WitnessSearch(target, finite_field(7), 1, [T2])
        with self.assertRaises(ValidationError):
            WitnessSearch(target, finite_field(5), 2, [T2])
        with self.assertRaises(ValidationError):
            WitnessSearch(target, finite_field(5), 1, [])
        with self.assertRaisesRegex(MathDomainError, "determinant not prime to level"):
            WitnessSearch(target, finite_field(5), 1, [T2, T5])

    def test_source_validation(self):
        """Direct modules in characteristic zero have no finite quotient"""
        phi = EigenSystem(QQ_FIELD, {T2: 3})
        with self.assertRaisesRegex(ValidationError, "does not act through a finite quotient"):
            reduce_to_one_dim(phi, GroupDescriptor.full(), SymPowerModule(2), 1, ReductionTarget.char0(3), [T2])


# ============== Witness search ==============

class TestWitnesses(unittest.TestCase):

    def test_trivial_h0(self):
        """H^0(SL2(Z), F5) reduces to the trivial character in degree 0"""
        F = finite_field(5)
        phi = h0_eigensystem(F)
        w = reduce_to_one_dim(phi, GroupDescriptor.full(), trivial_module(F), 0, ReductionTarget.charl(1, 5), [T2, T3, T7])
        self.assertEqual(w.degree, 0)
        self.assertTrue(w.chi.is_trivial)
        self.assertEqual(w.candidates, 8)
        self.assertTrue(w.verified)

        rec = w.to_record()
        self.assertEqual(rec["eigensystem"], {"T2": "3", "T3": "4", "T7": "3"})
        self.assertEqual(rec["witness"]["module"], "char:5:trivial:F5")
        self.assertEqual(rec["candidates_searched"], 8)
        self.assertTrue(rec["verified"])
        self.assertEqual([t["label"] for t in rec["verification"]], ["T2", "T3", "T7"])

    def test_character_source(self):
        """A source that is already one-dimensional finds its own character"""
        F = finite_field(5)
        chi = Character(5, F, 1, [2])
        group = GroupDescriptor.gamma1_upper(5)
        phi = h0_eigensystem(F, chi)
        w = reduce_to_one_dim(phi, group, CharacterModule(chi), 0, ReductionTarget.charl(1, 5), [T2, T3, T7])
        self.assertEqual(w.degree, 0)
        self.assertEqual(w.chi, chi)
        self.assertTrue(w.verified)

        report, witnesses = reduce_space(group, CharacterModule(chi), 0, ReductionTarget.charl(1, 5), [T2, T3, T7])
        self.assertEqual(len(report.systems), 1)
        self.assertEqual(len(witnesses), 1)
        self.assertEqual(witnesses[0].chi, chi)

    def test_twisted_source(self):
        """Twisting by a class character moves the witness character by the matching Dirichlet character"""
        F = finite_field(5)
        classes = SyntheticClassGroup((4,), {2: (1,), 3: (3,), 7: (1,)})
        chi0 = ClassCharacter(classes, F, [2])
        target, labels = ReductionTarget.charl(1, 5), [T2, T3, T7]
        phi = h0_eigensystem(F)
        psi = twist_eigensystem(chi0, phi)
        self.assertTrue(psi.agrees_with(h0_eigensystem(F, Character(5, F, 1, [2]))))

        w_phi = reduce_to_one_dim(phi, GroupDescriptor.full(), trivial_module(F), 0, target, labels)
        w_psi = reduce_to_one_dim(psi, GroupDescriptor.full(), trivial_module(F), 0, target, labels)
        self.assertEqual(w_psi.chi, w_phi.chi * Character(5, F, 1, [2]))
        self.assertEqual(extract_twist(w_psi.matched, w_phi.matched, classes), chi0)

    def test_char0_target(self):
        """Characteristic zero: trivial coefficients at level one land on gamma_diag(3), with T3 left out"""
        phi = h0_eigensystem(QQ_FIELD, labels=(T2, T7))
        target = ReductionTarget.char0(3)
        labels = default_labels(1, 3, primes=[2, 3, 7])
        w = reduce_to_one_dim(phi, GroupDescriptor.full(), trivial_module(QQ_FIELD), 0, target, labels)
        self.assertEqual(w.labels, [T2, T7])
        self.assertEqual(w.degree, 0)
        self.assertTrue(w.chi.is_trivial)
        self.assertTrue(w.verified)

    def test_no_witness(self):
        """An eigensystem absent from every candidate is reported as a bug"""
        F = finite_field(5)
        search = WitnessSearch(ReductionTarget.charl(1, 5), F, 0, [T2, T3, T7])
        phi = EigenSystem(F, {T2: 0, T3: 0, T7: 0})
        with self.assertRaises(MathDomainError) as ctx:
            search.find(phi)
        self.assertEqual(ctx.exception.message, NO_WITNESS)

    def test_missing_label_value(self):
        F = finite_field(5)
        search = WitnessSearch(ReductionTarget.charl(1, 5), F, 0, [T2, T3])
        with self.assertRaises(ValidationError):
            search.find(EigenSystem(F, {T2: 1}))

    def test_parallel_matches_serial(self):
        """The worker pool fills the same reports as the serial loop"""
        F = finite_field(5)
        phi = h0_eigensystem(F, labels=(T2, T3))
        serial = WitnessSearch(ReductionTarget.charl(1, 5), F, 0, [T2, T3], jobs=1).find(phi)
        parallel = WitnessSearch(ReductionTarget.charl(1, 5), F, 0, [T2, T3], jobs=4).find(phi)
        self.assertEqual((serial.degree, serial.chi), (parallel.degree, parallel.chi))

    def test_weight_12_mod_5(self):
        """Every system of H^1(Gamma1(5), Sym^10 over F5) lands in degree 0 with sign value 1"""
        F = finite_field(5)
        report, witnesses = reduce_space(
            GroupDescriptor.gamma1_upper(5), SymPowerModule(10, 0, F), 1, ReductionTarget.charl(1, 5), path=CohomPath.AMBIENT
        )
        self.assertEqual(len(report.systems), 4)
        self.assertEqual(len(witnesses), 4)
        self.assertTrue(all(w.verified for w in witnesses))
        self.assertEqual([w.degree for w in witnesses], [0, 0, 0, 0])
        self.assertCountEqual([w.chi for w in witnesses], [Character(5, F, 1, [v]) for v in (1, 2, 3, 4)])

        # T2 = 3v, T3 = 4v^3, T7 = 3v for the character sending 2 to v
        by_t2 = {w.phi.values[T2]: w for w in witnesses}
        for v in (1, 2, 3, 4):
            w = by_t2[3 * v % 5]
            self.assertEqual(w.chi, Character(5, F, 1, [v]))
            self.assertEqual(w.phi.values[T3], 4 * v ** 3 % 5)
            self.assertEqual(w.phi.values[T7], 3 * v % 5)

    def test_tau_occurs_at_level_5(self):
        """The mod 5 tau system occurs in H^1(Gamma1(5), Sym^10 over F5) and reduces to the character 2 -> 2"""
        F = finite_field(5)
        report, witnesses = reduce_space(
            GroupDescriptor.gamma1_upper(5), SymPowerModule(10, 0, F), 1, ReductionTarget.charl(1, 5), path=CohomPath.AMBIENT
        )
        tau = EigenSystem(F, {T2: 1, T3: 2})
        self.assertTrue(occurs_in(tau, report))
        self.assertFalse(occurs_in(EigenSystem(F, {T2: 1, T3: 3}), report))
        (w,) = [w for w in witnesses if w.phi.values[T2] == 1]
        self.assertEqual(w.chi, Character(5, F, 1, [2]))


if __name__ == "__main__":
    unittest.main()
