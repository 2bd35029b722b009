from idplab.decompose import FiberReducer
from idplab.sweep import (FiberAuditor, SweepReport, check_instance, height_vector,
                          iter_param_grid, run_sweep)


def test_param_grid_counts():
    assert sum(1 for _ in iter_param_grid(2, 2, 1, 1)) == 2
    assert sum(1 for _ in iter_param_grid(3, 3, 1, 1)) == 14
    assert sum(1 for _ in iter_param_grid(2, 4, 1, 1)) == 76
    # without coefficient freedom: compositions of n+3 into five positive parts
    assert sum(1 for _ in iter_param_grid(4, 4, 0, 0)) == 15


def test_height_vector_layout(pentagon_6ray):
    assert height_vector(pentagon_6ray, 1, 2, 3) == (1, 0, 3, 0, 0, 5)


def test_single_instance_clean(pentagon_6ray):
    st = pentagon_6ray
    report = SweepReport()
    auditor = FiberAuditor(report)
    check_instance(st, (0, 1, 3), (2, 2, 1), reducer=FiberReducer(st),
                   auditor=auditor, report=report)
    assert report.ok
    assert report.instances == 1
    assert report.alphas == 434
    assert report.audited_reductions > 0
    assert report.audited_minkowski > 0


def test_negative_heights_rejected(pentagon_6ray):
    report = SweepReport()
    check_instance(pentagon_6ray, (-1, 0, 0), (0, 0, 0), report=report)
    assert report.instances == 0
    assert report.rejected_not_convex == 1


def test_surface_sweep_clean_and_deterministic():
    rep1 = run_sweep(n_min=2, n_max=2, height_values=(0, 1, 2), workers=1)
    assert rep1.ok
    assert rep1.instances == 2 * 729
    assert rep1.rejected_not_convex == 0
    rep2 = run_sweep(n_min=2, n_max=2, height_values=(0, 1, 2), workers=2)
    assert rep1.to_dict() == rep2.to_dict()


def test_sweep_with_negative_grid_values():
    rep = run_sweep(n_min=2, n_max=2, height_values=(-1, 0), workers=1, audit=False)
    assert rep.ok
    # every triple containing -1 on either side is rejected, (0,0,0)^2 survives
    assert rep.instances == 2 * 1
    assert rep.rejected_not_convex == 2 * (64 - 1)


def test_sweep_instance_cap():
    import pytest
    with pytest.raises(ValueError, match="cap"):
        run_sweep(n_min=2, n_max=2, height_values=(0, 1, 2), max_instances=10)
