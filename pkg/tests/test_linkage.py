import pytest

from linky.corpus import Dataset, generate_synthetic_dataset
from linky.corpus.records import Platform, UserIdentity
from linky.demo import METHOD_A, build_demo_dataset
from linky.errors import (
    DuplicateCandidate,
    DuplicateMethodId,
    EmptyPlatform,
    MalformedSolution,
    UnknownIdentityRef,
    UnknownMethod,
    UnknownPlatform,
)
from linky.linkage import (
    MethodDescriptor,
    RankedCandidate,
    Solution,
    Workspace,
    export_solution,
    import_solution,
    parse_solution_text,
    run_baseline,
    serialize_solution,
)

from oracles import OracleCorpus


def two_platform_dataset(source_names, target_names):
    identities = [
        UserIdentity("tw", f"s{i}", username) for i, username in enumerate(source_names)
    ] + [UserIdentity("fq", f"t{i}", username) for i, username in enumerate(target_names)]
    return Dataset("x", [Platform("tw"), Platform("fq")], identities, [], [], [])


class TestRunBaseline:
    def test_identical_name_sets_self_match(self):
        names = ["alphacat", "betadog", "gammafox"]
        dataset = two_platform_dataset(names, names)
        solution = run_baseline(dataset, "tw", "fq", k=1)
        by_target = {i.user_id: i.username for i in dataset.identities_of("fq")}
        for i, username in enumerate(names):
            (candidate,) = solution.predictions[f"s{i}"]
            assert by_target[candidate.target_id] == username
            assert abs(candidate.score - 1.0) <= 1e-12

    def test_top3_truncation(self):
        dataset = two_platform_dataset(["aaa1", "aaa2"], ["aaa3", "aaa4", "aaa5", "aaa6", "aaa7"])
        solution = run_baseline(dataset, "tw", "fq", k=3)
        assert all(len(c) <= 3 for c in solution.predictions.values())
        assert solution.method.parameters == {"k": 3, "n": 3}

    def test_candidates_never_from_source_platform(self):
        result = generate_synthetic_dataset(21, 60, 0.3, 0.4, 0.5)
        solution = run_baseline(result.dataset, "twitter", "foursquare", k=5)
        target_ids = {i.user_id for i in result.dataset.identities_of("foursquare")}
        for candidates in solution.predictions.values():
            assert all(c.target_id in target_ids for c in candidates)

    def test_scores_non_increasing_ranks_contiguous(self):
        result = generate_synthetic_dataset(22, 80, 0.5, 0.4, 0.5)
        solution = run_baseline(result.dataset, "twitter", "foursquare", k=4)
        for candidates in solution.predictions.values():
            assert [c.rank for c in candidates] == list(range(1, len(candidates) + 1))
            scores = [c.score for c in candidates]
            assert all(a >= b for a, b in zip(scores, scores[1:]))

    def test_matches_bruteforce_restricted_to_targets(self):
        result = generate_synthetic_dataset(23, 150, 0.4, 0.4, 0.5)
        dataset = result.dataset
        solution = run_baseline(dataset, "twitter", "foursquare", k=3)
        corpus = [
            (f"{i.platform}:{i.user_id}", i.username)
            for i in sorted(dataset.identities(), key=lambda x: (x.platform, x.user_id))
        ]
        oracle = OracleCorpus(corpus, 3)
        target_ids = [f"foursquare:{i.user_id}" for i in dataset.identities_of("foursquare")]
        for source in dataset.identities_of("twitter"):
            want = oracle.rank(source.username, k=3, candidate_ids=target_ids)
            got = solution.predictions.get(source.user_id, [])
            assert [c.target_id for c in got] == [nid.split(":", 1)[1] for nid, _ in want]
            for c, (_, ws) in zip(got, want):
                assert c.score == pytest.approx(ws, abs=1e-9)

    def test_purity_same_inputs_same_solution(self):
        a = run_baseline(generate_synthetic_dataset(3, 40, 0.2, 0.5, 0.5).dataset, "twitter", "foursquare")
        b = run_baseline(generate_synthetic_dataset(3, 40, 0.2, 0.5, 0.5).dataset, "twitter", "foursquare")
        assert a == b

    def test_unknown_and_empty_platform(self):
        dataset = two_platform_dataset(["abc"], [])
        with pytest.raises(UnknownPlatform):
            run_baseline(dataset, "tw", "nope")
        with pytest.raises(EmptyPlatform):
            run_baseline(dataset, "tw", "fq")


class TestSolutionFiles:
    def test_demo_record_imports_with_score(self):
        dataset = build_demo_dataset()
        solution = parse_solution_text(METHOD_A, dataset)
        top = solution.predictions["f01"][0]
        assert top.rank == 1
        assert top.score == 0.358

    def test_unknown_target_reports_line(self):
        dataset = build_demo_dataset()
        text = (
            '{"method_id":"m","source_platform":"foursquare","target_platform":"twitter"}\n'
            '{"source_id":"f01","candidates":[{"target_id":"ghost","score":0.5}]}\n'
        )
        with pytest.raises(UnknownIdentityRef) as excinfo:
            parse_solution_text(text, dataset)
        assert excinfo.value.line == 2

    def test_duplicate_candidate_rejected(self):
        dataset = build_demo_dataset()
        text = (
            '{"method_id":"m","source_platform":"foursquare","target_platform":"twitter"}\n'
            '{"source_id":"f01","candidates":[{"target_id":"t01","score":0.5},{"target_id":"t01","score":0.4}]}\n'
        )
        with pytest.raises(DuplicateCandidate):
            parse_solution_text(text, dataset)

    def test_increasing_scores_rejected(self):
        dataset = build_demo_dataset()
        text = (
            '{"method_id":"m","source_platform":"foursquare","target_platform":"twitter"}\n'
            '{"source_id":"f01","candidates":[{"target_id":"t01","score":0.1},{"target_id":"t02","score":0.4}]}\n'
        )
        with pytest.raises(MalformedSolution):
            parse_solution_text(text, dataset)

    def test_duplicate_source_rejected(self):
        dataset = build_demo_dataset()
        text = (
            '{"method_id":"m","source_platform":"foursquare","target_platform":"twitter"}\n'
            '{"source_id":"f01","candidates":[]}\n'
            '{"source_id":"f01","candidates":[]}\n'
        )
        with pytest.raises(MalformedSolution):
            parse_solution_text(text, dataset)

    def test_bad_method_id_rejected(self):
        dataset = build_demo_dataset()
        text = '{"method_id":"../evil","source_platform":"foursquare","target_platform":"twitter"}\n'
        with pytest.raises(MalformedSolution):
            parse_solution_text(text, dataset)

    def test_unknown_platform_in_header(self):
        dataset = build_demo_dataset()
        text = '{"method_id":"m","source_platform":"nope","target_platform":"twitter"}\n'
        with pytest.raises(UnknownPlatform):
            parse_solution_text(text, dataset)

    def test_empty_solution_exports_header_only(self, tmp_path):
        dataset = build_demo_dataset()
        solution = Solution(
            MethodDescriptor("empty-m", "Empty", "imported", {}), "foursquare", "twitter", {}
        )
        path = tmp_path / "empty.ndjson"
        export_solution(solution, path)
        lines = path.read_text().splitlines()
        assert len(lines) == 1
        assert parse_solution_text(path.read_text(), dataset) == solution

    def test_import_export_roundtrip_field_order_insensitive(self, tmp_path):
        dataset = build_demo_dataset()
        scrambled = (
            '{"target_platform":"twitter","parameters":{},"method_id":"m1","source_platform":"foursquare","display_name":"M1"}\n'
            '{"candidates":[{"score":0.9,"target_id":"t02"},{"target_id":"t01","score":0.35}],"source_id":"f01"}\n'
        )
        first = parse_solution_text(scrambled, dataset)
        path = tmp_path / "m1.ndjson"
        export_solution(first, path)
        second = import_solution(path, dataset)
        assert first == second
        export_solution(second, tmp_path / "m1b.ndjson")
        assert path.read_bytes() == (tmp_path / "m1b.ndjson").read_bytes()

    def test_baseline_roundtrip_equal_value(self, tmp_path):
        dataset = generate_synthetic_dataset(31, 50, 0.3, 0.4, 0.5).dataset
        solution = run_baseline(dataset, "twitter", "foursquare")
        path = tmp_path / "baseline.ndjson"
        export_solution(solution, path)
        assert import_solution(path, dataset) == solution

    def test_exported_line_count(self, tmp_path):
        dataset = generate_synthetic_dataset(32, 120, 0.3, 0.4, 0.5).dataset
        solution = run_baseline(dataset, "twitter", "foursquare")
        path = tmp_path / "baseline.ndjson"
        export_solution(solution, path)
        lines = path.read_text().splitlines()
        nonempty = sum(1 for c in solution.predictions.values() if c)
        assert len(lines) == 1 + nonempty

    def test_explicit_empty_lists_retained(self):
        dataset = build_demo_dataset()
        text = (
            '{"method_id":"m","source_platform":"foursquare","target_platform":"twitter"}\n'
            '{"source_id":"f01","candidates":[]}\n'
        )
        solution = parse_solution_text(text, dataset)
        assert solution.predictions == {"f01": []}
        assert serialize_solution(solution).count("\n") == 2


class TestWorkspace:
    def _workspace(self, tmp_path):
        from linky.corpus import export_dataset

        dataset = generate_synthetic_dataset(41, 40, 0.2, 0.4, 0.5).dataset
        src = tmp_path / "src"
        export_dataset(dataset, src)
        return Workspace.ingest(src / "manifest.json", tmp_path / "ws")

    def test_fresh_workspace_empty(self, tmp_path):
        ws = self._workspace(tmp_path)
        assert ws.list_methods() == []

    def test_baseline_plus_import_two_entries(self, tmp_path):
        ws = self._workspace(tmp_path)
        ws.run_baseline("twitter", "foursquare")
        source = ws.dataset.identities_of("twitter")[0]
        target = ws.dataset.identities_of("foursquare")[0]
        ws.import_text(
            '{"method_id":"other","source_platform":"twitter","target_platform":"foursquare"}\n'
            f'{{"source_id":"{source.user_id}","candidates":[{{"target_id":"{target.user_id}","score":0.5}}]}}\n'
        )
        summaries = ws.list_methods()
        assert [s.descriptor.method_id for s in summaries] == ["baseline-3gram", "other"]

    def test_summaries_match_evaluation_module(self, tmp_path):
        from linky.evaluation import evaluate

        ws = self._workspace(tmp_path)
        ws.run_baseline("twitter", "foursquare")
        (summary,) = ws.list_methods()
        direct = evaluate(ws.solution("baseline-3gram"), ws.dataset.ground_truth)
        assert summary.report == direct

    def test_duplicate_method_id_needs_replace(self, tmp_path):
        ws = self._workspace(tmp_path)
        ws.run_baseline("twitter", "foursquare")
        with pytest.raises(DuplicateMethodId):
            ws.run_baseline("twitter", "foursquare")
        ws.run_baseline("twitter", "foursquare", replace=True)

    def test_reopen_from_disk(self, tmp_path):
        ws = self._workspace(tmp_path)
        ws.run_baseline("twitter", "foursquare")
        reopened = Workspace.open(ws.root)
        assert reopened.method_ids() == ["baseline-3gram"]
        assert reopened.solution("baseline-3gram") == ws.solution("baseline-3gram")

    def test_unknown_method(self, tmp_path):
        ws = self._workspace(tmp_path)
        with pytest.raises(UnknownMethod):
            ws.solution("nope")
