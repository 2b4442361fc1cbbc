# tests/test_cli.py

import json
import math
import os
import tempfile
import unittest

import pandas as pd

from vcnls.cli import (
    COMMANDS,
    cmd_blowup_scan,
    cmd_distribution_test,
    cmd_lie_check,
    cmd_simulate,
    cmd_verify_solution,
    dump_config,
    load_config,
    main,
    quadrature_settings,
    read_config,
)
from vcnls.core import ConfigError
from vcnls.utils import (
    EXIT_CONFIG_ERROR,
    EXIT_FAIL,
    EXIT_HALT,
    EXIT_PASS,
    CheckRecord,
    ResultBundle,
)

QUICK_SIMULATION = {
    "family": "transformed",
    "transform": {"b": -1.0, "T_blow": 1.0},
    "x_min": 0.2,
    "x_max": 3.0,
    "spacing": 0.002,
    "dt": 0.0001,
    "t_final": 0.25,
    "snapshot_times": [0.1, 0.2],
}

FREE_MASS_SIMULATION = {
    "family": "gaussian",
    "gamma": 0.0,
    "h1": 0.0,
    "h2": 0.0,
    "gaussian": {"center": 5.0, "width": 0.5, "wavenumber": 2.0, "amplitude": 1.0},
    "x_min": 0.5,
    "x_max": 9.5,
    "spacing": 0.01,
    "dt": 0.001,
    "t_final": 0.05,
    "norm_track": [2.0],
    "snapshot_times": [],
    "monotone_p": None,
    "mass_drift_tol": 1e-10,
}

BURST_SIMULATION = {
    "family": "gaussian",
    "gamma": -1.0,
    "gaussian": {"center": 1.0, "width": 0.1, "wavenumber": 0.0, "amplitude": 1000.0},
    "x_min": 0.5,
    "x_max": 1.5,
    "spacing": 0.01,
    "dt": 0.001,
    "t_final": 0.01,
    "snapshot_times": [],
    "monotone_p": None,
}


def write_json(directory: str, name: str, payload: dict) -> str:
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    return path


class TestConfigLoading(unittest.TestCase):

    def test_defaults_load_for_every_command(self):
        for command in COMMANDS:
            config = load_config(command)
            self.assertIsInstance(config, dict)

    def test_config_round_trip(self):
        for command in COMMANDS:
            config = load_config(command)
            self.assertEqual(load_config(command, json.loads(dump_config(config))), config)

    def test_overrides_are_typed(self):
        config = load_config("verify-solution", {"epsilon": -1.0, "k2": 2, "h1": 0})
        self.assertEqual(config["epsilon"], -1)
        self.assertIsInstance(config["k2"], float)
        self.assertEqual(config["h1"], 0.0)
        self.assertIsNone(config["h2"])
        self.assertEqual(load_config("verify-solution", {"h2": 1})["h2"], 1.0)

    def test_unknown_keys_rejected(self):
        with self.assertRaises(ConfigError):
            load_config("blowup-scan", {"p_value": [4.0]})
        with self.assertRaises(ConfigError):
            load_config("blowup-scan", {"quadrature": {"abs_tolerance": 1e-10}})
        with self.assertRaises(ConfigError):
            load_config("no-such-command")

    def test_out_of_range_values_rejected(self):
        bad = [
            ("blowup-scan", {"p_values": [2.0, 4.0]}),
            ("blowup-scan", {"eps_values": [1.0, 0.5, 0.1]}),
            ("distribution-test", {"p": 1.5}),
            ("verify-solution", {"epsilon": 0}),
            ("verify-solution", {"gamma": 0.0}),
            ("verify-solution", {"spacings": [1e-2, 5e-3]}),
            ("simulate", {"t_final": 1.0}),
            ("simulate", {"dt": 1e-3}),
            ("simulate", {"quadrature": {"abs_tol": -1.0}}),
        ]
        for command, mapping in bad:
            with self.assertRaises(ConfigError, msg=f"{command} {mapping}"):
                load_config(command, mapping)

    def test_bump_entries(self):
        config = load_config("distribution-test", {"bumps": [{"center": 1.5, "radius": 0.5}]})
        self.assertEqual(config["bumps"], [{"center": 1.5, "radius": 0.5, "normalization": 1.0}])
        with self.assertRaises(ConfigError):
            load_config("distribution-test", {"bumps": [{"center": 0.0}]})
        with self.assertRaises(ConfigError):
            load_config("distribution-test", {"bumps": [{"center": 0.0, "radius": 1.0, "h": 1}]})

    def test_read_config_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ConfigError):
                read_config("lie-check", os.path.join(tmp, "missing.json"))
            path = os.path.join(tmp, "broken.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write("{not json")
            with self.assertRaises(ConfigError):
                read_config("lie-check", path)

    def test_quadrature_settings(self):
        settings = quadrature_settings(load_config("blowup-scan"))
        self.assertEqual(settings.abs_tol, 1e-12)
        self.assertIsNone(settings.tail_cutoff_Y)


class TestCommands(unittest.TestCase):

    def test_lie_check(self):
        bundle = cmd_lie_check(load_config("lie-check"))
        self.assertEqual(len(bundle.records), 10)
        self.assertTrue(bundle.passed)
        self.assertEqual(bundle.exit_code, EXIT_PASS)
        provenances = {r.provenance for r in bundle.records}
        self.assertEqual(provenances, {"paper", "trivial"})

    def test_verify_solution_passes_for_exact_families(self):
        for mapping in ({}, {"family": "truncated", "t": 0.25}):
            bundle = cmd_verify_solution(load_config("verify-solution", mapping))
            self.assertTrue(bundle.passed, msg=bundle.summary_text())

    def test_verify_solution_control_fails(self):
        bundle = cmd_verify_solution(load_config("verify-solution", {"h1": 0.0}))
        self.assertFalse(bundle.passed)
        self.assertEqual(bundle.exit_code, EXIT_FAIL)

    def test_verify_solution_imaginary_potential_fails(self):
        bundle = cmd_verify_solution(load_config("verify-solution", {"h2": 0.3}))
        self.assertFalse(bundle.passed)
        self.assertEqual(bundle.records[0].inputs["h2"], 0.3)
        self.assertAlmostEqual(bundle.records[0].inputs["h1"], 5.0 / 36.0)

    def test_verify_transformed_family(self):
        config = load_config(
            "verify-solution",
            {"family": "transformed", "group": [1.2, -0.4, 0.3, 0.88 / 1.2], "random_elements": 3},
        )
        bundle = cmd_verify_solution(config)
        self.assertEqual(len(bundle.records), 4)
        self.assertTrue(bundle.passed, msg=bundle.summary_text())

    def test_verify_rejects_non_unimodular_group(self):
        config = load_config(
            "verify-solution", {"family": "transformed", "group": [1.0, 1.0, 1.0, 1.0]}
        )
        with self.assertRaises(ConfigError):
            cmd_verify_solution(config)

    def test_blowup_scan(self):
        with tempfile.TemporaryDirectory() as tmp:
            bundle = cmd_blowup_scan(load_config("blowup-scan"), output_dir=tmp)
            self.assertTrue(bundle.passed, msg=bundle.summary_text())
            scan = pd.read_csv(os.path.join(tmp, "blowup_scan.csv"))
        self.assertEqual(sorted(scan["p"].unique()), [3.0, 4.0, 6.0])
        self.assertTrue((scan["lp_norm"] > 0).all())

    def test_distribution_test(self):
        bundle = cmd_distribution_test(load_config("distribution-test"))
        self.assertTrue(bundle.passed, msg=bundle.summary_text())
        off_origin = load_config(
            "distribution-test", {"bumps": [{"center": 1.5, "radius": 0.5}]}
        )
        self.assertTrue(cmd_distribution_test(off_origin).passed)

    def test_simulate_against_exact_solution(self):
        with tempfile.TemporaryDirectory() as tmp:
            bundle = cmd_simulate(load_config("simulate", QUICK_SIMULATION), output_dir=tmp)
            self.assertTrue(bundle.passed, msg=bundle.summary_text())
            for name in ("norm_series.csv", "error_series.csv", "snapshot_t0.250000.csv"):
                self.assertTrue(os.path.exists(os.path.join(tmp, name)), msg=name)
            errors = pd.read_csv(os.path.join(tmp, "error_series.csv"))
        self.assertLess(errors["rel_l2_error"].max(), 1e-3)
        profile = [r for r in bundle.records if r.name == "modulus vs blow-up profile"]
        self.assertEqual(len(profile), 1)
        self.assertTrue(profile[0].passed)
        self.assertAlmostEqual(profile[0].inputs["eps"], 0.75)
        self.assertLess(profile[0].computed, 1e-3)

    def test_simulate_free_mass_drift(self):
        bundle = cmd_simulate(load_config("simulate", FREE_MASS_SIMULATION))
        self.assertTrue(bundle.passed, msg=bundle.summary_text())
        drift = [r for r in bundle.records if r.name == "mass drift per step"]
        self.assertEqual(len(drift), 1)
        self.assertLess(drift[0].computed, 1e-10)
        names = [r.name for r in cmd_simulate(load_config("simulate", BURST_SIMULATION)).records]
        self.assertNotIn("modulus vs blow-up profile", names)

    def test_simulate_zero_final_time(self):
        config = load_config("simulate", dict(QUICK_SIMULATION, t_final=0.0, snapshot_times=[]))
        bundle = cmd_simulate(config)
        self.assertTrue(bundle.passed, msg=bundle.summary_text())
        self.assertIn("initial snapshot only", [r.name for r in bundle.records])

    def test_simulate_halt(self):
        bundle = cmd_simulate(load_config("simulate", BURST_SIMULATION))
        self.assertTrue(bundle.halted)
        self.assertEqual(bundle.exit_code, EXIT_HALT)
        self.assertAlmostEqual(bundle.halt_time, 1e-3)


class TestMain(unittest.TestCase):

    def test_lie_check_writes_results(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "out")
            self.assertEqual(main(["lie-check", "--out", out]), EXIT_PASS)
            with open(os.path.join(out, "results.json"), encoding="utf-8") as fh:
                results = json.load(fh)
            self.assertTrue(os.path.exists(os.path.join(out, "results.txt")))
        self.assertTrue(results["passed"])
        self.assertEqual(results["exit_code"], 0)
        self.assertEqual(results["command"], "lie-check")

    def test_config_errors_exit_with_2(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_json(tmp, "p2.json", {"p_values": [2.0, 4.0, 6.0]})
            self.assertEqual(main(["blowup-scan", "--config", path]), EXIT_CONFIG_ERROR)
            path = write_json(tmp, "unknown.json", {"jacobian": True})
            self.assertEqual(main(["lie-check", "--config", path]), EXIT_CONFIG_ERROR)
        self.assertEqual(main(["no-such-command"]), EXIT_CONFIG_ERROR)
        self.assertEqual(main([]), EXIT_CONFIG_ERROR)

    def test_failed_check_exits_with_1(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_json(tmp, "control.json", {"h1": 0.0})
            self.assertEqual(main(["verify-solution", "--config", path]), EXIT_FAIL)

    def test_halt_exits_with_3(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_json(tmp, "burst.json", BURST_SIMULATION)
            out = os.path.join(tmp, "out")
            self.assertEqual(main(["simulate", "--config", path, "--out", out]), EXIT_HALT)
            with open(os.path.join(out, "results.json"), encoding="utf-8") as fh:
                results = json.load(fh)
        self.assertTrue(results["halted"])
        self.assertAlmostEqual(results["halt_time"], 1e-3)


class TestResultBundle(unittest.TestCase):

    def test_exit_codes(self):
        bundle = ResultBundle("demo")
        self.assertFalse(bundle.passed)
        bundle.check("a", 1.0, 1.0, "trivial", True)
        self.assertEqual(bundle.exit_code, EXIT_PASS)
        bundle.check("b", 2.0, 1.0, "derived-oracle", False, tolerance=0.5)
        self.assertEqual(bundle.exit_code, EXIT_FAIL)
        bundle.mark_halted(0.5)
        self.assertEqual(bundle.exit_code, EXIT_HALT)

    def test_records_serialise(self):
        record = CheckRecord(
            "value", complex(1.0, -2.0), math.inf, "paper", True, inputs={"p": 4.0}
        )
        data = record.to_dict()
        self.assertEqual(data["computed"], {"re": 1.0, "im": -2.0})
        self.assertEqual(data["reference"], "inf")
        json.dumps(data)
        with self.assertRaises(ValueError):
            CheckRecord("value", 1.0, 1.0, "folklore", True)

    def test_summary_text(self):
        bundle = ResultBundle("demo")
        bundle.check("slope", -0.25, -0.25, "derived-oracle", True, tolerance=0.01)
        text = bundle.summary_text()
        self.assertIn("1/1 checks passed", text)
        self.assertIn("[PASS] slope", text)


class TestPlots(unittest.TestCase):

    def test_plots_are_written(self):
        from vcnls.utils.plot_utils import plot_blowup_rates, plot_norm_series

        scan = pd.DataFrame(
            {
                "eps": [1.0, 0.1, 0.01],
                "p": [4.0] * 3,
                "lp_norm": [1.0, 1.8, 3.2],
                "linf_norm": [0.6, 1.9, 6.0],
            }
        )
        norms = pd.DataFrame(
            {"t": [0.0, 0.1], "p": [2.0, 2.0], "norm": [1.0, 1.0], "exact_norm": [1.0, 1.0]}
        )
        with tempfile.TemporaryDirectory() as tmp:
            self.assertTrue(os.path.exists(plot_blowup_rates(scan, tmp)))
            self.assertTrue(os.path.exists(plot_norm_series(norms, tmp)))
        with self.assertRaises(ValueError):
            plot_norm_series(norms.drop(columns=["exact_norm"]))
        with self.assertRaises(TypeError):
            plot_blowup_rates([1.0, 2.0])


if __name__ == "__main__":
    unittest.main()
