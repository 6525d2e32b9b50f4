import json

import numpy as np
import pytest

from specturan.graph import graph_from_edge_mask, make_turan
from specturan.harness import (
    ExperimentConfig,
    _batched_mu,
    _clique_counts,
    _joint_sizes_vector,
    _neighbor_rows,
    run_exhaustive,
    run_experiment,
    run_family_sweep,
    run_random_hunt,
    run_tightness,
)
from specturan.rng import SplitMix64
from specturan.spectral import spectral_radius
from specturan.subgraph import count_cliques, joint_size
from specturan.theorems import turan_edge_count


class TestConfig:
    def test_from_mapping_aliases(self):
        cfg = ExperimentConfig.from_mapping(
            {"mode": "exhaustive", "n": 5, "r": 2, "checks": "stt,tsize"}
        )
        assert cfg.n_min == cfg.n_max == 5
        assert cfg.checks == ("stt", "tsize")

    def test_scientific_notation_ints(self):
        cfg = ExperimentConfig.from_mapping(
            {"mode": "random_hunt", "n": 10, "budget": "1e6", "trials": "1e2"}
        )
        assert cfg.budget == 10**6 and cfg.trials == 100

    def test_unknown_key_rejected(self):
        with pytest.raises(ValueError):
            ExperimentConfig.from_mapping({"mode": "exhaustive", "n": 4, "bogus": 1})

    def test_exhaustive_caps_n(self):
        with pytest.raises(ValueError):
            ExperimentConfig(mode="exhaustive", n_min=9, n_max=9)

    def test_exhaustive_check_whitelist(self):
        with pytest.raises(ValueError):
            ExperimentConfig(mode="exhaustive", n_min=4, n_max=4, checks=("t1",))

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            ExperimentConfig(mode="nope", n_min=1, n_max=1)

    def test_config_file_roundtrip(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text(
            "# comment\nmode = exhaustive\nn = 4\nr = 2\n"
            "checks = stt,lenslmm  # trailing comment\nseed = 7\n"
        )
        cfg = ExperimentConfig.from_file(str(path))
        assert cfg.mode == "exhaustive" and cfg.seed == 7
        assert cfg.checks == ("stt", "lenslmm")

    def test_config_file_bad_line(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("mode exhaustive\n")
        with pytest.raises(ValueError):
            ExperimentConfig.from_file(str(path))


class TestVectorKernelsAgainstScalar:
    """The exhaustive engine must agree with the scalar library paths."""

    def sample_masks(self, n, count, seed):
        total = 1 << (n * (n - 1) // 2)
        rng = SplitMix64(seed)
        return np.array(sorted({rng.below(total) for _ in range(count)}), dtype=np.uint32)

    def test_clique_counts(self):
        masks = self.sample_masks(6, 120, 5)
        for q in (2, 3, 4):
            vec = _clique_counts(masks, 6, q)
            for i, mask in enumerate(masks):
                g = graph_from_edge_mask(6, int(mask))
                assert vec[i] == count_cliques(g, q).count

    def test_joint_sizes(self):
        masks = self.sample_masks(6, 80, 6)
        rows = _neighbor_rows(masks, 6)
        for r in (2, 3, 4):
            vec = _joint_sizes_vector(masks, rows, 6, r)
            for i, mask in enumerate(masks):
                g = graph_from_edge_mask(6, int(mask))
                assert vec[i] == joint_size(g, r).size

    def test_batched_mu_matches_scalar(self):
        masks = self.sample_masks(7, 150, 8)
        rows = _neighbor_rows(masks, 7)
        value, resid, conv = _batched_mu(rows, 7, 1e-10, 1700)
        for i, mask in enumerate(masks):
            g = graph_from_edge_mask(7, int(mask))
            est = spectral_radius(g)
            if conv[i] and est.converged:
                assert value[i] == pytest.approx(est.value, abs=1e-8)


class TestExhaustive:
    def test_n4_r2_stt_no_counterexamples(self):
        cfg = ExperimentConfig(
            mode="exhaustive", n_min=4, n_max=4, r=2, checks=("stt",)
        )
        rep = run_exhaustive(cfg)
        assert rep.instances_checked == 64
        assert rep.counterexamples == []
        # every logged near-tie carries a definite resolution
        assert all("resolution" in e for e in rep.inconclusive_log)

    def test_n3_r2_lenslmm_min_slack_at_k3(self):
        cfg = ExperimentConfig(
            mode="exhaustive", n_min=3, n_max=3, r=2, checks=("lenslmm",)
        )
        rep = run_exhaustive(cfg)
        assert rep.counterexamples == []
        stats = rep.stats["n=3"]["lenslmm"]
        # only K_3 has a positive right side at n=3; its slack is 3 - 3/8
        assert stats["min_slack_nontrivial"] == pytest.approx(2.625, abs=1e-6)

    def test_all_checks_n5(self):
        cfg = ExperimentConfig(
            mode="exhaustive",
            n_min=5,
            n_max=5,
            r=2,
            checks=("stt", "lenslmm", "edge-spectral", "tsize"),
        )
        rep = run_exhaustive(cfg)
        assert rep.counterexamples == []
        assert rep.instances_checked == 3 * 1024 + 1

    def test_sample_cap(self):
        cfg = ExperimentConfig(
            mode="exhaustive",
            n_min=6,
            n_max=6,
            r=2,
            checks=("stt",),
            sample_cap=100,
            seed=3,
        )
        rep = run_exhaustive(cfg)
        assert rep.counterexamples == []
        assert rep.stats["n=6"]["graphs"] == 100

    def test_no_false_counterexamples_up_to_n6(self):
        # module invariant: zero (yes, no) records over every labeled graph
        # of order <= 6 for both r values
        for r in (2, 3):
            cfg = ExperimentConfig(
                mode="exhaustive",
                n_min=1,
                n_max=6,
                r=r,
                checks=("stt", "lenslmm", "edge-spectral", "tsize"),
                stats=0,
            )
            rep = run_exhaustive(cfg)
            assert rep.counterexamples == []
            assert all("resolution" in e for e in rep.inconclusive_log)

    def test_determinism_bytes(self, tmp_path):
        cfg = ExperimentConfig(
            mode="exhaustive",
            n_min=4,
            n_max=5,
            r=2,
            checks=("stt", "lenslmm"),
            output_path=str(tmp_path / "a.json"),
        )
        rep1 = run_exhaustive(cfg)
        cfg2 = ExperimentConfig(
            mode="exhaustive",
            n_min=4,
            n_max=5,
            r=2,
            checks=("stt", "lenslmm"),
            output_path=str(tmp_path / "b.json"),
        )
        rep2 = run_exhaustive(cfg2)
        a = (tmp_path / "a.json").read_bytes()
        b = (tmp_path / "b.json").read_bytes()
        # output_path is echoed in the config block; compare after masking it
        assert a.replace(b"a.json", b"X") == b.replace(b"b.json", b"X")
        assert rep1.to_json_text().replace("a.json", "X") == rep2.to_json_text().replace(
            "b.json", "X"
        )
        assert (tmp_path / "a.json.meta.json").exists()


class TestFamilySweep:
    def test_turan_hypothesis_resolves_no(self):
        cfg = ExperimentConfig(
            mode="family_sweep",
            n_min=4,
            n_max=12,
            r=2,
            checks=("stt",),
            families=("turan",),
        )
        rep = run_family_sweep(cfg)
        assert rep.counterexamples == []
        for row in rep.stats["verdicts"]:
            assert row["hypothesis"] == "no"

    def test_plus_edge_joints_formula(self):
        cfg = ExperimentConfig(
            mode="family_sweep",
            n_min=6,
            n_max=30,
            r=2,
            checks=("t1",),
            families=("turan_plus_e",),
        )
        rep = run_family_sweep(cfg)
        assert rep.counterexamples == []
        for row in rep.stats["turan_plus_e_joints"]:
            n = row["n"]
            assert row["js"] == n // 2  # opposite part of the added edge
            assert row["js"] > n / 256

    def test_instance_count(self):
        cfg = ExperimentConfig(
            mode="family_sweep",
            n_min=5,
            n_max=9,
            r=3,
            checks=("stt", "tsize" if False else "lekd"),
            families=("turan", "turan_minus_e"),
        )
        rep = run_family_sweep(cfg)
        assert rep.instances_checked == 5 * 2 * 2

    def test_skips_impossible_family_members(self):
        # turan_plus_e needs a part of size >= 2: n=2, r=2 has none
        cfg = ExperimentConfig(
            mode="family_sweep",
            n_min=2,
            n_max=3,
            r=2,
            checks=("stt",),
            families=("turan_plus_e",),
        )
        rep = run_family_sweep(cfg)
        assert rep.instances_checked == 1  # only n=3


class TestRandomHunt:
    def test_above_turan_always_has_clique(self):
        cfg = ExperimentConfig(
            mode="random_hunt",
            n_min=12,
            n_max=12,
            r=2,
            checks=("stt",),
            trials=25,
            seed=9,
            m_offset=1,
        )
        rep = run_random_hunt(cfg)
        assert rep.counterexamples == []
        row = rep.stats["per_n"][0]
        assert row["m"] == turan_edge_count(12, 2) + 1
        # e > e(T_2(n)) forces a triangle (Turan's theorem)
        assert row["conclusion_yes"] == 25

    def test_determinism(self):
        cfg = ExperimentConfig(
            mode="random_hunt", n_min=10, n_max=10, r=2, checks=("lenslmm",),
            trials=10, seed=123,
        )
        assert run_random_hunt(cfg).to_json_text() == run_random_hunt(cfg).to_json_text()

    def test_seed_changes_report(self):
        base = {"mode": "random_hunt", "n": 14, "r": 2, "checks": "stt", "trials": 8}
        r1 = run_random_hunt(ExperimentConfig.from_mapping({**base, "seed": 1}))
        r2 = run_random_hunt(ExperimentConfig.from_mapping({**base, "seed": 2}))
        assert r1.config["seed"] != r2.config["seed"]


class TestTightness:
    def test_report_shape_and_determinism(self):
        cfg = ExperimentConfig(
            mode="tightness", n_min=24, n_max=24, r=2, trials=5,
            epsilon=0.5, seed=17, budget=10**6,
        )
        rep1 = run_tightness(cfg)
        rep2 = run_tightness(cfg)
        assert rep1.to_json_text() == rep2.to_json_text()
        row = rep1.stats["per_n"][0]
        assert row["m"] == 144  # ceil(0.5 * 24^2 / 2)
        assert len(row["max_biclique_s"]) == 5
        assert all(s >= 2 for s in row["max_biclique_s"])

    def test_epsilon_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(mode="tightness", n_min=10, n_max=10, epsilon=0.0)

    def test_near_complete_graph(self):
        # small epsilon, n large enough that eps*n > 1: nearly complete
        # graph, certified mu > (1-eps)n, large bicliques
        cfg = ExperimentConfig(
            mode="tightness", n_min=24, n_max=24, r=2, trials=3,
            epsilon=0.1, seed=4, budget=10**6,
        )
        row = run_tightness(cfg).stats["per_n"][0]
        assert row["mu_greater_fraction"] == 1.0
        assert all(s >= 4 for s in row["max_biclique_s"])


class TestRunExperiment:
    def test_dispatch_and_json_loads(self):
        cfg = ExperimentConfig(
            mode="exhaustive", n_min=4, n_max=4, r=2, checks=("tsize",)
        )
        rep = run_experiment(cfg)
        payload = json.loads(rep.to_json_text())
        assert payload["instances_checked"] == 1
        assert payload["config"]["mode"] == "exhaustive"

    def test_report_instances_match_formula(self):
        cfg = ExperimentConfig(
            mode="exhaustive", n_min=3, n_max=4, r=2, checks=("stt", "edge-spectral")
        )
        rep = run_experiment(cfg)
        assert rep.instances_checked == (8 + 64) * 2
