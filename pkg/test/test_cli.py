"""Command-line surface: record stream, exit codes and error mapping"""

import asyncio
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout
from fractions import Fraction

from hecke.constants import EXIT_MATH_DOMAIN, EXIT_OK, EXIT_VALIDATION
from hecke.errors import MathDomainError, ValidationError

from app.bootstrap import run_cli
from app.middleware import error_to_record, exit_code_for, json_default


# ============== Helpers ==============

def run(*argv):
    """Exit code and the parsed record lines"""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = asyncio.run(run_cli(list(argv)))
    return code, [json.loads(line) for line in buf.getvalue().splitlines() if line.strip()]


# ============== Commands ==============

class TestCommands(unittest.TestCase):

    def test_decompose(self):
        """T2 at level one gives three coset records"""
        code, records = run("decompose", "--p", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(records), 3)
        self.assertEqual([r["record"] for r in records], ["coset"] * 3)
        self.assertEqual([r["index"] for r in records], [0, 1, 2])

    def test_decompose_delta(self):
        code, records = run("decompose", "--delta", "1,0,0,2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(records), 3)

    def test_hecke_matrix(self):
        """T2 on H^1(Gamma0(5), Q) is the Eisenstein eigenvalue 3"""
        code, records = run("hecke-matrix", "--level", "5", "--p", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(records[0]["record"], "hecke_matrix")
        self.assertEqual(records[0]["matrix"], [["3"]])
        self.assertEqual(records[0]["space"]["dim"], 1)

    def test_degree_check(self):
        code, records = run("degree-check", "--n", "2", "--primes", "2,3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(records), 4)
        self.assertTrue(all(r["passed"] for r in records))

    def test_schema(self):
        code, records = run("schema")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(records[0]["record"], "schema")
        self.assertIn("command", records[0]["schema"]["properties"])

    def test_output_file(self):
        """With --output the records go to the file and stdout stays empty"""
        fd, path = tempfile.mkstemp(suffix=".jsonl")
        os.close(fd)
        try:
            code, records = run("decompose", "--p", "2", "--output", path)
            self.assertEqual((code, records), (EXIT_OK, []))
            with open(path, encoding="utf-8") as fh:
                self.assertEqual(len(fh.read().splitlines()), 3)
        finally:
            os.remove(path)


# ============== Errors and exit codes ==============

class TestExitCodes(unittest.TestCase):

    def test_label_sharing_level(self):
        """T5 at level 5 is a math domain error"""
        code, records = run("hecke-matrix", "--level", "5", "--p", "5")
        self.assertEqual(code, EXIT_MATH_DOMAIN)
        self.assertEqual(records[-1]["record"], "error")
        self.assertEqual(records[-1]["code"], "math_domain_error")

    def test_bad_module(self):
        code, records = run("eigensystems", "--module", "sym:x")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertEqual(records[-1]["code"], "validation_error")

    def test_bad_degree(self):
        """Config validation fails before any job is created"""
        code, records = run("eigensystems", "--degree", "2")
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["code"], "validation_error")

    def test_error_mapping(self):
        self.assertEqual(error_to_record(ValidationError("bad"))["code"], "validation_error")
        rec = error_to_record(ValueError("x"))
        self.assertEqual((rec["code"], rec["message"]), ("internal_error", "ValueError: x"))
        self.assertEqual(exit_code_for({"error": None}), EXIT_OK)
        self.assertEqual(exit_code_for({"error": {"code": "validation_error"}}), EXIT_VALIDATION)
        self.assertEqual(exit_code_for({"error": {"code": "math_domain_error"}}), EXIT_MATH_DOMAIN)
        self.assertEqual(exit_code_for({"error": {"code": "other"}}), 1)

    def test_exit_status_lives_in_the_cli(self):
        """Errors carry a code only; the exit status comes from the code mapping"""
        for error in (ValidationError("v"), MathDomainError("m")):
            self.assertFalse(hasattr(error, "exit_code"))
        self.assertEqual(exit_code_for({"error": error_to_record(MathDomainError("m"))}), EXIT_MATH_DOMAIN)

    def test_json_default(self):
        self.assertEqual(json_default(Fraction(1, 2)), "1/2")
        with self.assertRaises(TypeError):
            json_default(object())


if __name__ == "__main__":
    unittest.main()
