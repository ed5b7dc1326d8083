import math

import pytest

import dcglearn as dl


def test_encode_reference_vectors():
    graded = dl.encode_grades([5, 1, 3], 5)
    assert list(graded.bits) == [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0]
    assert dl.decode_grades(graded) == [5, 1, 3]

    by_doc = dl.encode_permutation([3, 1, 4, 2, 5])
    assert list(by_doc.bits) == [
        0, 0, 1, 0, 0,
        1, 0, 0, 0, 0,
        0, 0, 0, 1, 0,
        0, 1, 0, 0, 0,
        0, 0, 0, 0, 1,
    ]


def test_dcg_and_weights_agree():
    g = dl.GainVector([0.5, 2.0, 3.0])
    c = dl.DiscountVector([1.5, 0.5])
    assert dl.dcg([2, 1], g, c, 2) == pytest.approx(3.25)
    w = dl.dcg_weights(g, c)
    assert dl.utility(w, dl.encode_grades([2, 1], 3)) == pytest.approx(3.25)


def test_incoherency_witness():
    verdict = dl.check_coherence(
        dl.LabeledSet([2, 3, 1]),
        dl.GainVector([0.5, 2.0, 3.0]),
        dl.apply_power_transform(dl.GainVector([0.5, 2.0, 3.0]), 3.0),
        dl.DiscountVector([1.5, 0.5]),
        2,
    )
    assert not verdict.coherent
    pi1, pi2 = verdict.witness
    assert pi1 == [1, 3, 2]
    assert pi2 == [3, 2, 1]
    assert verdict.b_pi2 == pytest.approx(13.6875)


def test_fit_recovers_a_single_pair():
    pair = dl.PreferencePair(dl.encode_grades([2], 2), dl.encode_grades([1], 2))
    report = dl.fit_report([pair], dl.FitConfig())
    assert report.converged
    assert report.objective == pytest.approx(1.0 / 3.0, abs=1e-6)


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        dl.encode_grades([7], 5)
    with pytest.raises(dl.ConvergenceError):
        cfg = dl.FitConfig()
        cfg.max_iterations = 1
        cfg.tolerance = 1e-15
        pair = dl.PreferencePair(dl.encode_grades([2, 1], 2), dl.encode_grades([1, 2], 2))
        dl.fit([pair], cfg)


def test_factorization_round_trip():
    w = dl.dcg_weights(dl.GainVector([0.5, 2.0, 3.0]), dl.DiscountVector([1.5, 0.5]))
    factors = dl.rank_one_factorize(dl.WeightMatrix.from_utility(w))
    assert factors.sigma1 == pytest.approx(math.sqrt(13.25 * 2.5))
    assert factors.residual_ratio < 1e-7


def test_small_experiment_runs_end_to_end():
    cfg = dl.ExperimentConfig()
    cfg.seeds = [1]
    cfg.train_sizes = [30]
    cfg.test_pairs = 50
    cfg.validation_pairs = 10
    cfg.threads = 1
    rows = dl.run_experiment(cfg)
    assert len(rows) == 1
    assert rows[0].train_pairs == 30
    assert 0.0 <= rows[0].precision <= 1.0
    csv_text = dl.to_csv(rows)
    assert csv_text.startswith(
        "seed,n_train_pairs,noise_pairs,noise_grades,model,pair_mode,chosen_c,precision,similarity"
    )
    svg = dl.render_svg(rows, "precision")
    assert svg.startswith("<svg")


def test_config_text_round_trip():
    cfg = dl.parse_config("setting = Data2\nlevels = 4\n")
    assert cfg.truth.setting == dl.DataSetting.Data2
    assert cfg.truth.levels == 4
    assert "setting = Data2" in dl.format_config(cfg)
