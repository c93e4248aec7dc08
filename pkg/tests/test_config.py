"""
Unit tests for configuration module.
"""
import unittest
import json
import os
import tempfile
from pathlib import Path
from unittest import mock

import yaml

from config import OracleConfig, RunConfig, load_config_from_file


class TestOracleConfig(unittest.TestCase):
    def test_defaults(self):
        config = OracleConfig()
        self.assertEqual(config.workers, 1)
        self.assertEqual(config.budget_secs, 120.0)
        self.assertEqual(config.census_max_n, 11)
        self.assertEqual(config.max_witnesses, 5)
        self.assertFalse(config.paranoid)

    def test_validation(self):
        with self.assertRaises(ValueError):
            OracleConfig(workers=0)
        with self.assertRaises(ValueError):
            OracleConfig(budget_secs=-1)

    def test_from_env_missing(self):
        # Test with no environment variables
        with mock.patch.dict(os.environ, {}, clear=True):
            config = OracleConfig.from_env(env_file=os.devnull)
        self.assertEqual(config, OracleConfig())

    def test_from_env(self):
        env = {
            "COXETER_WORKERS": "4",
            "COXETER_BUDGET_SECS": "30",
            "COXETER_CENSUS_MAX_N": "9",
            "COXETER_PARANOID": "true",
        }
        with mock.patch.dict(os.environ, env, clear=True):
            config = OracleConfig.from_env(env_file=os.devnull)
        self.assertEqual(config.workers, 4)
        self.assertEqual(config.budget_secs, 30.0)
        self.assertEqual(config.census_max_n, 9)
        self.assertTrue(config.paranoid)

    def test_from_env_file(self):
        with tempfile.NamedTemporaryFile(mode='w', suffix='.env', delete=False) as f:
            f.write("COXETER_WORKERS=3\n")
            temp_path = f.name

        try:
            with mock.patch.dict(os.environ, {}, clear=True):
                config = OracleConfig.from_env(env_file=temp_path)
            self.assertEqual(config.workers, 3)
        finally:
            Path(temp_path).unlink()


class TestRunConfig(unittest.TestCase):
    def test_creation(self):
        config = RunConfig(subcommand="check", n_values=[5], claims=["admissible-count"])
        self.assertEqual(config.output_format, "text")
        self.assertIsNone(config.output_path)
        self.assertEqual(config.workers, 1)

    def test_rejects_unknown_format(self):
        with self.assertRaises(ValueError):
            RunConfig(subcommand="check", output_format="xml")

    def test_oracle_config(self):
        run = RunConfig(subcommand="check", workers=2, budget_secs=10.0)
        base = OracleConfig(census_max_n=9, paranoid=True)
        config = run.oracle_config(base)
        self.assertEqual(config.workers, 2)
        self.assertEqual(config.budget_secs, 10.0)
        self.assertEqual(config.census_max_n, 9)
        self.assertTrue(config.paranoid)


class TestLoadConfigFromFile(unittest.TestCase):
    def _write(self, suffix: str, text: str) -> str:
        with tempfile.NamedTemporaryFile(mode='w', suffix=suffix, delete=False) as f:
            f.write(text)
            return f.name

    def test_load_json(self):
        config_data = {
            "subcommand": "check",
            "n": {"min": 3, "max": 7},
            "claims": ["count-coxeter", "admissible-count"],
            "format": "json",
            "workers": 2,
        }
        temp_path = self._write('.json', json.dumps(config_data))

        try:
            config = load_config_from_file(temp_path)
            self.assertEqual(config.n_values, [3, 4, 5, 6, 7])
            self.assertFalse(config.explicit_n)
            self.assertEqual(config.claims, ["count-coxeter", "admissible-count"])
            self.assertEqual(config.output_format, "json")
            self.assertEqual(config.workers, 2)
        finally:
            Path(temp_path).unlink()

    def test_load_yaml(self):
        temp_path = self._write('.yaml', yaml.safe_dump({"n": 9, "claims": "all"}))

        try:
            config = load_config_from_file(temp_path)
            self.assertEqual(config.n_values, [9])
            self.assertTrue(config.explicit_n)
            self.assertEqual(config.claims, ["all"])
        finally:
            Path(temp_path).unlink()

    def test_claims_are_kept_verbatim(self):
        temp_path = self._write('.json', json.dumps({"n": 5, "claims": "no-such-claim, count-coxeter"}))

        try:
            config = load_config_from_file(temp_path)
            self.assertEqual(config.claims, ["no-such-claim", "count-coxeter"])
        finally:
            Path(temp_path).unlink()

    def test_example_config(self):
        example = Path(__file__).parent.parent / "example_config.json"
        config = load_config_from_file(str(example))
        self.assertEqual(config.subcommand, "check")
        self.assertTrue(config.claims)


if __name__ == '__main__':
    unittest.main()
