from coforce.gen.generators import cycle, star, star_plus_edge
from coforce.graph.core import Graph
from coforce.graph.graph6 import to_graph6
from coforce.predict.rules import Prediction, Rule
from coforce.report.models import CSV_COLUMNS, Command, Report
from coforce.report.pipeline import ReportTask, build_report, compute_bounds, run_batch


def task(text: str, command: Command, line: int = 1, **kwargs) -> ReportTask:
    return ReportTask(line=line, text=text, command=command, **kwargs)


class TestReport:
    def test_settle_exact_prediction(self):
        r = Report(
            line=1,
            graph6="E?",
            n=6,
            z_complement_exact=4,
            prediction=Prediction.exact(4, Rule.UNI_N2, ""),
        ).settle()
        assert r.agree is True
        assert r.in_interval is True
        assert not r.failed_check

    def test_settle_interval_prediction(self):
        r = Report(
            line=1,
            graph6="E?",
            n=6,
            z_complement_exact=2,
            prediction=Prediction(lo=3, hi=4, rule=Rule.GENERIC_BOUNDS),
        ).settle()
        assert r.agree is None
        assert r.in_interval is False
        assert r.failed_check

    def test_settle_without_exact(self):
        r = Report(line=1, graph6="E?", prediction=Prediction.exact(1, Rule.TREE, "")).settle()
        assert r.agree is None
        assert r.in_interval is None

    def test_dict_round_trip(self):
        r = Report(
            line=3,
            graph6="Bw",
            n=3,
            prediction=Prediction.exact(3, Rule.UNI_SMALL_N, "C3"),
            budget_exhausted=True,
            interval=(1, 2),
        )
        data = r.to_dict()

        assert list(data)[:5] == ["line", "graph6", "n", "z_exact", "z_complement_exact"]
        assert data["prediction"]["rule"] == "UNI_SMALL_N"

    def test_csv_row(self):
        r = Report(line=2, graph6="Bw", n=3, z_exact=2, agree=False)
        row = r.to_csv_row()

        assert len(row) == len(CSV_COLUMNS)
        assert row[CSV_COLUMNS.index("z_exact")] == "2"
        assert row[CSV_COLUMNS.index("agree")] == "false"
        assert row[CSV_COLUMNS.index("rule")] == ""


class TestPipeline:
    def test_predict(self):
        r = build_report(task(to_graph6(star_plus_edge(6)), Command.PREDICT))

        assert r.prediction is not None
        assert r.prediction.rule is Rule.UNI_N2
        assert r.prediction.lo == r.prediction.hi == 4
        assert r.z_complement_exact is None

    def test_verify(self):
        r = build_report(task(to_graph6(cycle(7)), Command.VERIFY))

        assert r.z_complement_exact == 4
        assert r.agree is True
        assert r.bounds is not None

    def test_bounds_on_c4(self):
        b = compute_bounds(cycle(4))

        assert (b.krs_bound, b.r, b.s) == (1, 1, 3)
        assert b.min_degree_bound == 1
        assert b.forbidden_test is True

    def test_parse_error_keeps_line(self):
        r = build_report(task("C!", Command.EXACT, line=7))

        assert r.line == 7
        assert r.n is None
        assert r.error is not None
        assert "byte offset 1" in r.error

    def test_max_n_guard(self):
        r = build_report(task(to_graph6(cycle(10)), Command.EXACT, max_n=8))
        assert r.z_exact is None
        assert "max_n=8" in (r.error or "")

    def test_budget_marks_report(self):
        r = build_report(task(to_graph6(star(5)), Command.EXACT, max_subsets=2))

        assert r.budget_exhausted
        assert r.interval == (1, 3)
        assert r.z_exact is None

    def test_verify_disconnected_still_solves(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        r = build_report(task(to_graph6(g), Command.VERIFY))

        assert r.prediction is None
        assert r.z_complement_exact == 2
        assert r.error is not None

    def test_timings(self):
        r = build_report(task(to_graph6(cycle(5)), Command.EXACT, timings=True))
        assert r.elapsed_ms is not None
        assert build_report(task(to_graph6(cycle(5)), Command.EXACT)).elapsed_ms is None

    def test_run_batch_preserves_order(self):
        graphs = [cycle(k) for k in range(3, 12)]
        tasks = [task(to_graph6(g), Command.EXACT, line=i + 1) for i, g in enumerate(graphs)]

        serial = list(run_batch(tasks, jobs=1))
        parallel = list(run_batch(tasks, jobs=2))

        assert [r.line for r in parallel] == list(range(1, 10))
        assert serial == parallel
